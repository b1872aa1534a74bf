#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kgbench/harness/records.hpp"

namespace kgbench::harness {

struct StatRow {
  std::string task_id;
  std::string model_id;
  std::size_t size_index = 0;
  std::string score_name;
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for n = 1
  double min = 0.0;
  double max = 0.0;
};

// Groups by (task_id, model_id, size_index, score_name) in that sort order.
// Booleans count as 0/1, so their mean is the rate of true.
std::vector<StatRow> AggregateStats(std::span<const RunRecord> records);

double Mean(std::span<const double> values);
double Median(std::vector<double> values);
double SampleStddev(std::span<const double> values);

}  // namespace kgbench::harness
