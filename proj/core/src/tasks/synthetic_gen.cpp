#include "kgbench/tasks/synthetic_gen.hpp"

#include <set>

#include "kgbench/error.hpp"
#include "kgbench/json_number.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "kgbench/tasks/prompts.hpp"

namespace kgbench::tasks::synthetic_gen {
namespace {

constexpr std::string_view kPeopleNamespace = "http://example.org/kgbench/people/";

bool Exceeds(std::uint64_t persons, std::uint64_t links) {
  return persons == 0 ? links > 0 : links / persons > persons - 1 ||
                                        (links / persons == persons - 1 && links % persons != 0);
}

double RelativeError(std::uint64_t generated, std::uint64_t requested) {
  double denominator = requested == 0 ? 1.0 : static_cast<double>(requested);
  return (static_cast<double>(generated) - static_cast<double>(requested)) / denominator;
}

std::uint64_t PositiveInteger(const nlohmann::json& value, const std::string& path, bool allow_zero) {
  if (!IsNonNegativeInteger(value) || (!allow_zero && value.get<std::uint64_t>() == 0)) {
    throw ConfigError(path, allow_zero ? "must be a non-negative integer" : "must be a positive integer");
  }
  return value.get<std::uint64_t>();
}

Size ParseSize(const nlohmann::json& j, const std::vector<Size>& schedule, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "size must be an object");
  if (j.contains("size_index") && !j.contains("persons")) {
    for (const auto& [key, value] : j.items()) {
      if (key != "size_index") {
        throw ConfigError(path + "." + key, "cannot be combined with size_index");
      }
    }
    std::uint64_t index = PositiveInteger(j["size_index"], path + ".size_index", false);
    try {
      return SizeSchedule(index, schedule);
    } catch (const RangeError& e) {
      throw ConfigError(path + ".size_index", e.what());
    }
  }
  Size size;
  size.size_index = 0;
  bool has_persons = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "persons") {
      size.persons = PositiveInteger(value, path + ".persons", false);
      has_persons = true;
    } else if (key == "links") {
      size.links = PositiveInteger(value, path + ".links", true);
    } else if (key == "size_index") {
      size.size_index = PositiveInteger(value, path + ".size_index", false);
    } else {
      throw ConfigError(path + "." + key, "unknown key '" + key + "'");
    }
  }
  if (!has_persons) throw ConfigError(path + ".persons", "missing");
  if (!j.contains("links")) throw ConfigError(path + ".links", "missing");
  if (Exceeds(size.persons, size.links)) {
    throw ConfigError(path + ".links", "exceeds persons * (persons - 1)");
  }
  return size;
}

nlohmann::json SizeToJson(const Size& size) {
  nlohmann::json j = {{"persons", size.persons}, {"links", size.links}};
  if (size.size_index > 0) j["size_index"] = size.size_index;
  return j;
}

class SyntheticGenCase : public TaskCase {
 public:
  explicit SyntheticGenCase(Size size) : size_(size) {}

  std::string Prompt() const override { return BuildPrompt(size_); }
  std::string OracleAnswer() const override {
    return rdf::SerializeTurtle(GenerateFoafDataset(size_.persons, size_.links));
  }
  ScoreSet Evaluate(std::string_view response) const override {
    return synthetic_gen::Evaluate(response, size_).ToScoreSet();
  }
  nlohmann::json SizeParams() const override { return SizeToJson(size_); }

 private:
  Size size_;
};

class SyntheticGenTask : public Task {
 public:
  explicit SyntheticGenTask(std::vector<Size> schedule) : schedule_(std::move(schedule)) {}

  std::string_view id() const override { return kTaskId; }
  std::string_view version() const override { return kTaskVersion; }
  std::string_view prompt_template_version() const override { return kPromptTemplateId; }
  std::string_view description() const override {
    return "generate a FOAF dataset with a requested number of persons and knows links";
  }

  std::vector<nlohmann::json> DefaultSizes() const override {
    std::vector<nlohmann::json> sizes;
    for (const Size& size : schedule_) sizes.push_back({{"size_index", size.size_index}});
    return sizes;
  }

  void ValidateSize(const nlohmann::json& size, const std::string& path) const override {
    ParseSize(size, schedule_, path);
  }

  std::unique_ptr<TaskCase> MakeCase(const nlohmann::json& size, std::uint64_t) const override {
    return std::make_unique<SyntheticGenCase>(ParseSize(size, schedule_, "size"));
  }

  // {"schedule": [{"persons": p, "links": l}, ...]} replaces the default
  // schedule that size_index refers to.
  std::unique_ptr<Task> Configure(const nlohmann::json& options,
                                  const std::string& path) const override {
    if (!options.is_object()) throw ConfigError(path, "options must be an object");
    std::vector<Size> schedule = schedule_;
    for (const auto& [key, value] : options.items()) {
      if (key != "schedule") throw ConfigError(path + "." + key, "unknown option '" + key + "'");
      if (!value.is_array() || value.empty()) {
        throw ConfigError(path + ".schedule", "must be a non-empty array");
      }
      schedule.clear();
      for (std::size_t i = 0; i < value.size(); ++i) {
        std::string item_path = path + ".schedule[" + std::to_string(i) + "]";
        if (value[i].contains("size_index")) {
          throw ConfigError(item_path + ".size_index", "schedule entries give persons and links");
        }
        Size size = ParseSize(value[i], {}, item_path);
        size.size_index = i + 1;
        schedule.push_back(size);
      }
    }
    return std::make_unique<SyntheticGenTask>(std::move(schedule));
  }

 private:
  std::vector<Size> schedule_;
};

}  // namespace

std::vector<Size> DefaultSchedule(std::size_t count) {
  std::vector<Size> schedule;
  for (std::size_t i = 1; i <= count; ++i) {
    std::uint64_t persons = std::uint64_t{5} << (i - 1);
    schedule.push_back({persons, 2 * persons, i});
  }
  return schedule;
}

Size SizeSchedule(std::size_t size_index, const std::vector<Size>& schedule) {
  if (size_index < 1 || size_index > schedule.size()) {
    throw RangeError("size_index " + std::to_string(size_index) + " outside 1.." +
                     std::to_string(schedule.size()));
  }
  return schedule[size_index - 1];
}

Size SizeSchedule(std::size_t size_index) { return SizeSchedule(size_index, DefaultSchedule()); }

void ValidateSize(const Size& size) {
  if (size.persons == 0) throw SizeError("persons must be at least 1");
  if (Exceeds(size.persons, size.links)) {
    throw SizeError(std::to_string(size.links) + " links exceed the capacity of " +
                    std::to_string(size.persons) + " persons");
  }
}

std::string BuildPrompt(const Size& size) {
  return RenderTemplate(GetPromptTemplate(kPromptTemplateId).text,
                        {{"persons", std::to_string(size.persons)},
                         {"links", std::to_string(size.links)}});
}

EntityCounts CountEntities(const rdf::Graph& graph) {
  const rdf::Term type = rdf::MakeIri(rdf::vocab::kRdfType);
  const rdf::Term person = rdf::MakeIri(rdf::vocab::kFoafPerson);
  const rdf::Term knows = rdf::MakeIri(rdf::vocab::kFoafKnows);
  std::set<rdf::Term> persons;
  EntityCounts counts;
  for (const rdf::Triple& t : graph) {
    if (t.predicate == type && t.object == person) persons.insert(t.subject);
    if (t.predicate == knows) ++counts.links;
  }
  counts.persons = persons.size();
  return counts;
}

ScoreSet Scores::ToScoreSet() const {
  return {{"persons_relative_error", persons_relative_error},
          {"links_relative_error", links_relative_error},
          {"persons_generated", static_cast<std::int64_t>(persons_generated)},
          {"links_generated", static_cast<std::int64_t>(links_generated)},
          {"answer_parsable", answer_parsable}};
}

Scores Evaluate(std::string_view response, const Size& size) {
  std::string candidate = rdf::ExtractTurtleCandidate(response);
  rdf::SalvageResult salvage = rdf::SalvageParseTurtle(candidate);
  Scores scores;
  try {
    rdf::ParseTurtle(candidate);
    scores.answer_parsable = true;
  } catch (const ParseError&) {
  }
  EntityCounts counts = CountEntities(salvage.graph);
  scores.persons_generated = counts.persons;
  scores.links_generated = counts.links;
  if (salvage.graph.empty()) return scores;
  scores.persons_relative_error = RelativeError(counts.persons, size.persons);
  scores.links_relative_error = RelativeError(counts.links, size.links);
  return scores;
}

rdf::Graph GenerateFoafDataset(std::uint64_t persons, std::uint64_t links) {
  if (Exceeds(persons, links)) {
    throw SizeError(std::to_string(links) + " links exceed the capacity of " +
                    std::to_string(persons) + " persons");
  }
  rdf::Graph g;
  g.SetPrefix("foaf", std::string(rdf::vocab::kFoaf));
  g.SetPrefix("ex", std::string(kPeopleNamespace));
  auto person = [](std::uint64_t i) {
    return rdf::MakeIri(std::string(kPeopleNamespace) + "person" + std::to_string(i));
  };
  const rdf::Term type = rdf::MakeIri(rdf::vocab::kRdfType);
  const rdf::Term name = rdf::MakeIri(std::string(rdf::vocab::kFoaf) + "name");
  for (std::uint64_t i = 0; i < persons; ++i) {
    g.Insert({person(i), type, rdf::MakeIri(rdf::vocab::kFoafPerson)});
    g.Insert({person(i), name, rdf::MakeLiteral("Person " + std::to_string(i))});
  }
  // Link k joins k mod n to the person 1 + k / n places further on, which
  // enumerates every ordered pair before repeating one.
  for (std::uint64_t k = 0; k < links; ++k) {
    std::uint64_t from = k % persons;
    std::uint64_t to = (from + 1 + k / persons) % persons;
    g.Insert({person(from), rdf::MakeIri(rdf::vocab::kFoafKnows), person(to)});
  }
  return g;
}

std::unique_ptr<Task> MakeTask() { return std::make_unique<SyntheticGenTask>(DefaultSchedule()); }

}  // namespace kgbench::tasks::synthetic_gen
