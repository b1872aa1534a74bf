#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "kgbench/tasks/task.hpp"

namespace kgbench::tasks {

class TaskRegistry {
 public:
  // turtle-fix, fact-extract and synthetic-gen.
  static TaskRegistry Default();

  // Throws kgbench::Error on a duplicate id.
  void Register(std::shared_ptr<const Task> task);
  // nullptr for unknown ids.
  std::shared_ptr<const Task> Find(std::string_view id) const;
  const std::vector<std::shared_ptr<const Task>>& All() const { return tasks_; }

 private:
  std::vector<std::shared_ptr<const Task>> tasks_;
};

}  // namespace kgbench::tasks
