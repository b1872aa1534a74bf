#include "kgbench/tasks/registry.hpp"

#include "kgbench/error.hpp"
#include "kgbench/tasks/fact_extract.hpp"
#include "kgbench/tasks/synthetic_gen.hpp"
#include "kgbench/tasks/turtle_fix.hpp"

namespace kgbench::tasks {

TaskRegistry TaskRegistry::Default() {
  TaskRegistry registry;
  registry.Register(turtle_fix::MakeTask());
  registry.Register(fact_extract::MakeTask());
  registry.Register(synthetic_gen::MakeTask());
  return registry;
}

void TaskRegistry::Register(std::shared_ptr<const Task> task) {
  if (Find(task->id())) throw Error("task '" + std::string(task->id()) + "' registered twice");
  tasks_.push_back(std::move(task));
}

std::shared_ptr<const Task> TaskRegistry::Find(std::string_view id) const {
  for (const auto& task : tasks_) {
    if (task->id() == id) return task;
  }
  return nullptr;
}

}  // namespace kgbench::tasks
