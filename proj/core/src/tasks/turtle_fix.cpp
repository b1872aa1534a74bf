#include "kgbench/tasks/turtle_fix.hpp"

#include <fstream>

#include "kgbench/error.hpp"
#include "kgbench/json_number.hpp"
#include "kgbench/hash.hpp"
#include "kgbench/rdf/scores.hpp"
#include "kgbench/rdf/turtle.hpp"
#include "kgbench/tasks/prompts.hpp"

namespace kgbench::tasks::turtle_fix {
namespace {

constexpr std::array<std::string_view, 16> kFirstNames = {
    "Alice", "Bruno", "Chiara", "Dmitri", "Elif",  "Farid", "Greta", "Hiro",
    "Ines",  "Jonas", "Kalani", "Lena",   "Mateo", "Noor",  "Oskar", "Priya"};
constexpr std::array<std::string_view, 12> kLastNames = {
    "Adler", "Brandt", "Costa", "Dahl",   "Eriksen", "Fontaine",
    "Garcia", "Hoang", "Ivanova", "Jensen", "Kowalski", "Lindqvist"};
constexpr std::array<std::string_view, 8> kCities = {
    "Leipzig", "Porto", "Tampere", "Ghent", "Brno", "Lyon", "Bergen", "Graz"};
constexpr std::array<std::string_view, 8> kModels = {
    "Aurora X2", "Nimbus 7", "Quill Pro", "Tessera S", "Vela Mini", "Orbit 3", "Lumen Go", "Kite 12"};
constexpr std::array<std::string_view, 6> kDescriptions = {
    "compact sensor hub", "portable projector", "smart thermostat",
    "e-ink reader", "noise cancelling headset", "handheld scanner"};

std::string Ex(std::string_view local) { return std::string(kNamespace) + std::string(local); }

std::string Xsd(std::string_view local) { return std::string(rdf::vocab::kXsd) + std::string(local); }

std::string Slug(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c == ' ') c = '-';
  }
  return s;
}

class ReferenceBuilder {
 public:
  ReferenceBuilder(std::uint64_t seed, std::size_t target)
      : rng_(HashCombine(seed, Fnv1a64("turtle-fix/reference"))), target_(target) {}

  rdf::Graph Build() {
    while (triples_.size() < target_) {
      if (persons_.empty() || devices_.size() >= persons_.size() || rng_.Chance(0.6)) {
        AddPerson();
      } else {
        AddDevice();
      }
    }
    rdf::Graph g;
    g.SetPrefix("ex", std::string(kNamespace));
    g.SetPrefix("xsd", std::string(rdf::vocab::kXsd));
    for (std::size_t i = 0; i < target_; ++i) g.Insert(triples_[i]);
    return g;
  }

 private:
  void Add(rdf::Term s, std::string_view p, rdf::Term o) {
    triples_.push_back({std::move(s), rdf::MakeIri(Ex(p)), std::move(o)});
  }

  void AddPerson() {
    std::size_t n = persons_.size() + 1;
    rdf::Term me = rdf::MakeIri(Ex("person" + std::to_string(n)));
    std::string first(rng_.Pick(kFirstNames));
    std::string last(rng_.Pick(kLastNames));
    triples_.push_back({me, rdf::MakeIri(rdf::vocab::kRdfType), rdf::MakeIri(Ex("Person"))});
    Add(me, "name", rdf::MakeLiteral(first + " " + last));
    Add(me, "age", rdf::MakeLiteral(std::to_string(rng_.Between(19, 87)), rdf::vocab::kXsdInteger));
    if (rng_.Chance(0.6)) {
      Add(me, "email", rdf::MakeLiteral(Slug(first) + "." + Slug(last) + "@example.org"));
    }
    if (rng_.Chance(0.5)) {
      Add(me, "homepage", rdf::MakeIri("https://people.example.org/" + Slug(first) + "-" +
                                       Slug(last) + "-" + std::to_string(n)));
    }
    if (rng_.Chance(0.4)) {
      rdf::Term address = rdf::MakeBlank("address" + std::to_string(n));
      Add(me, "address", address);
      Add(address, "city", rdf::MakeLiteral(rng_.Pick(kCities)));
      Add(address, "postalCode", rdf::MakeLiteral(std::to_string(rng_.Between(10000, 99999))));
    }
    if (!persons_.empty() && rng_.Chance(0.5)) Add(me, "knows", rng_.Pick(persons_));
    if (!devices_.empty() && rng_.Chance(0.5)) Add(me, "owns", rng_.Pick(devices_));
    persons_.push_back(me);
  }

  void AddDevice() {
    std::size_t n = devices_.size() + 1;
    rdf::Term me = rdf::MakeIri(Ex("device" + std::to_string(n)));
    triples_.push_back({me, rdf::MakeIri(rdf::vocab::kRdfType), rdf::MakeIri(Ex("Device"))});
    Add(me, "model", rdf::MakeLiteral(rng_.Pick(kModels)));
    std::int64_t grams = rng_.Between(120, 4800);
    std::string kg = std::to_string(grams / 1000) + "." + std::to_string((grams % 1000) / 100) +
                     std::to_string((grams % 100) / 10 == 0 ? 5 : (grams % 100) / 10);
    Add(me, "weightKg", rdf::MakeLiteral(kg, rdf::vocab::kXsdDecimal));
    char date[16];
    std::snprintf(date, sizeof date, "20%02d-%02d-%02d", static_cast<int>(rng_.Between(15, 24)),
                  static_cast<int>(rng_.Between(1, 12)), static_cast<int>(rng_.Between(1, 28)));
    Add(me, "released", rdf::MakeLiteral(date, Xsd("date")));
    if (rng_.Chance(0.5)) {
      Add(me, "active", rdf::MakeLiteral(rng_.Chance(0.5) ? "true" : "false", rdf::vocab::kXsdBoolean));
    }
    if (rng_.Chance(0.6)) Add(me, "description", rdf::MakeLangLiteral(rng_.Pick(kDescriptions), "en"));
    if (rng_.Chance(0.4)) {
      Add(me, "rating", rdf::MakeLiteral(std::to_string(rng_.Between(1, 4)) + "." +
                                              std::to_string(rng_.Between(0, 9)) + "E0",
                                          rdf::vocab::kXsdDouble));
    }
    devices_.push_back(me);
  }

  SeededRandom rng_;
  std::size_t target_;
  std::vector<rdf::Triple> triples_;
  std::vector<rdf::Term> persons_;
  std::vector<rdf::Term> devices_;
};

class TurtleFixCase : public TaskCase {
 public:
  explicit TurtleFixCase(Instance instance) : instance_(std::move(instance)) {}

  std::string Prompt() const override { return instance_.prompt; }
  std::string OracleAnswer() const override { return instance_.reference_text; }
  ScoreSet Evaluate(std::string_view response) const override {
    return turtle_fix::Evaluate(response, instance_).ToScoreSet();
  }
  nlohmann::json SizeParams() const override {
    return {{"triple_count", instance_.size.triple_count},
            {"error_count", instance_.size.error_count}};
  }

 private:
  Instance instance_;
};

Size SizeFromJson(const nlohmann::json& j) {
  Size size;
  size.triple_count = j.value("triple_count", size.triple_count);
  size.error_count = j.value("error_count", size.error_count);
  return size;
}

class TurtleFixTask : public Task {
 public:
  std::string_view id() const override { return kTaskId; }
  std::string_view version() const override { return kTaskVersion; }
  std::string_view prompt_template_version() const override { return kPromptTemplateId; }
  std::string_view description() const override {
    return "repair syntax errors injected into a generated Turtle document (F1 vs. reference)";
  }

  std::vector<nlohmann::json> DefaultSizes() const override {
    return {{{"triple_count", 20}, {"error_count", 3}}};
  }

  void ValidateSize(const nlohmann::json& size, const std::string& path) const override {
    if (!size.is_object()) throw ConfigError(path, "size must be an object");
    for (const auto& [key, value] : size.items()) {
      if (key != "triple_count" && key != "error_count") {
        throw ConfigError(path + "." + key, "unknown key '" + key + "'");
      }
      if (!IsNonNegativeInteger(value) || value.get<std::uint64_t>() == 0) {
        throw ConfigError(path + "." + key, "must be a positive integer");
      }
    }
  }

  std::unique_ptr<TaskCase> MakeCase(const nlohmann::json& size, std::uint64_t seed) const override {
    return std::make_unique<TurtleFixCase>(GenerateInstance(seed, SizeFromJson(size)));
  }

  std::unique_ptr<Task> Configure(const nlohmann::json& options,
                                  const std::string& path) const override {
    if (!options.empty()) {
      throw ConfigError(path + "." + options.items().begin().key(), "unknown option");
    }
    return std::make_unique<TurtleFixTask>();
  }
};

}  // namespace

rdf::Graph GenerateReferenceGraph(std::uint64_t seed, std::size_t triple_count) {
  return ReferenceBuilder(seed, triple_count).Build();
}

Instance GenerateInstance(std::uint64_t seed, const Size& size) {
  if (size.triple_count == 0) throw SizeError("triple_count must be at least 1");
  if (size.error_count == 0) throw SizeError("error_count must be at least 1");
  Instance instance;
  instance.seed = seed;
  instance.size = size;
  instance.reference = GenerateReferenceGraph(seed, size.triple_count);
  instance.reference_text = rdf::SerializeTurtle(instance.reference);
  Injection injection = InjectErrors(instance.reference_text, size.error_count, seed);
  instance.corrupted_text = std::move(injection.corrupted);
  instance.error_log = std::move(injection.error_log);
  instance.prompt = BuildPrompt(instance);
  return instance;
}

std::string BuildPrompt(const Instance& instance) {
  return RenderTemplate(GetPromptTemplate(kPromptTemplateId).text,
                        {{"document", instance.corrupted_text}});
}

ScoreSet Scores::ToScoreSet() const {
  return {{"f1", f1},
          {"precision", precision},
          {"recall", recall},
          {"answer_parsable", answer_parsable},
          {"exact_restore", exact_restore},
          {"failed_statements", static_cast<std::int64_t>(failed_statements)}};
}

Scores Evaluate(std::string_view response, const Instance& instance) {
  std::string candidate = rdf::ExtractTurtleCandidate(response);
  rdf::SalvageResult salvage = rdf::SalvageParseTurtle(candidate);
  rdf::DiffScores diff = rdf::GraphScores(salvage.graph, instance.reference);
  Scores scores;
  scores.f1 = diff.f1;
  scores.precision = diff.precision;
  scores.recall = diff.recall;
  scores.failed_statements = salvage.failed_statements;
  try {
    rdf::ParseTurtle(candidate);
    scores.answer_parsable = true;
  } catch (const ParseError&) {
    scores.answer_parsable = false;
  }
  scores.exact_restore = diff.f1 == 1.0 && diff.fp == 0 && diff.fn == 0;
  return scores;
}

void ExportInstance(const Instance& instance, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw IoError("cannot create " + directory.string() + ": " + ec.message());
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream out(directory / name, std::ios::binary);
    out << content;
    if (!out) throw IoError("cannot write " + (directory / name).string());
  };
  write("reference.ttl", instance.reference_text);
  write("corrupted.ttl", instance.corrupted_text);
  nlohmann::json log = {{"seed", instance.seed},
                        {"triple_count", instance.size.triple_count},
                        {"error_count", instance.size.error_count},
                        {"errors", ErrorLogToJson(instance.error_log)}};
  write("errors.json", log.dump(2) + "\n");
}

std::unique_ptr<Task> MakeTask() { return std::make_unique<TurtleFixTask>(); }

}  // namespace kgbench::tasks::turtle_fix
