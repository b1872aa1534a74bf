#include "kgbench/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "kgbench/error.hpp"

namespace kgbench::harness {
namespace {

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out.flush()) throw IoError("cannot write " + path.string());
}

}  // namespace

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string StatsCsv(std::span<const StatRow> rows) {
  std::string out(kStatsHeader);
  out += "\r\n";
  for (const StatRow& r : rows) {
    out += CsvField(r.task_id) + ',' + CsvField(r.model_id) + ',' + std::to_string(r.size_index) + ',' +
           CsvField(r.score_name) + ',' + std::to_string(r.n) + ',' + FormatNumber(r.mean) + ',' +
           FormatNumber(r.median) + ',' + FormatNumber(r.stddev) + ',' + FormatNumber(r.min) + ',' +
           FormatNumber(r.max) + "\r\n";
  }
  return out;
}

std::string PointsCsv(std::span<const RunRecord> records) {
  std::string out(kPointsHeader);
  out += "\r\n";
  for (const RunRecord& r : records) {
    std::string prefix = CsvField(r.run_id) + ',' + CsvField(r.task_id) + ',' + CsvField(r.model_id) +
                         ',' + std::to_string(r.size_index) + ',' + std::to_string(r.repetition) + ',' +
                         std::to_string(r.seed) + ',';
    for (const auto& [name, value] : r.scores) {
      out += prefix + CsvField(name) + ',' + FormatNumber(tasks::ScoreAsNumber(value)) + "\r\n";
    }
  }
  return out;
}

void EmitPlotData(std::span<const StatRow> stats, std::span<const RunRecord> records,
                  const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw IoError("cannot create " + directory.string() + ": " + ec.message());
  WriteFile(directory / "stats.csv", StatsCsv(stats));
  WriteFile(directory / "points.csv", PointsCsv(records));
}

}  // namespace kgbench::harness
