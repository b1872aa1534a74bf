#include "kgbench/harness/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace kgbench::harness {

// Shifted by the first value so that constant inputs average exactly.
double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const double shift = values.front();
  double sum = 0.0;
  for (double v : values) sum += v - shift;
  return shift + sum / static_cast<double>(values.size());
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

double SampleStddev(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  double mean = Mean(values);
  double squares = 0.0;
  for (double v : values) squares += (v - mean) * (v - mean);
  return std::sqrt(squares / static_cast<double>(values.size() - 1));
}

std::vector<StatRow> AggregateStats(std::span<const RunRecord> records) {
  using Key = std::tuple<std::string, std::string, std::size_t, std::string>;
  std::map<Key, std::vector<double>> groups;
  for (const RunRecord& r : records) {
    for (const auto& [name, value] : r.scores) {
      groups[{r.task_id, r.model_id, r.size_index, name}].push_back(tasks::ScoreAsNumber(value));
    }
  }
  std::vector<StatRow> rows;
  rows.reserve(groups.size());
  for (const auto& [key, values] : groups) {
    StatRow row;
    std::tie(row.task_id, row.model_id, row.size_index, row.score_name) = key;
    row.n = values.size();
    row.mean = Mean(values);
    row.median = Median(values);
    row.stddev = SampleStddev(values);
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    row.min = *lo;
    row.max = *hi;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kgbench::harness
