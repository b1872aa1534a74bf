#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgbench/harness/records.hpp"
#include "kgbench/harness/stats.hpp"

namespace kgbench::harness {

inline constexpr std::string_view kStatsHeader =
    "task_id,model_id,size_index,score_name,n,mean,median,stddev,min,max";
inline constexpr std::string_view kPointsHeader =
    "run_id,task_id,model_id,size_index,repetition,seed,score_name,value";

// Quotes fields containing commas, quotes, CR or LF.
std::string CsvField(std::string_view value);
// Shortest representation that reads back to the same double.
std::string FormatNumber(double value);

std::string StatsCsv(std::span<const StatRow> rows);
std::string PointsCsv(std::span<const RunRecord> records);

// Writes stats.csv and points.csv into `directory`. Throws IoError.
void EmitPlotData(std::span<const StatRow> stats, std::span<const RunRecord> records,
                  const std::filesystem::path& directory);

}  // namespace kgbench::harness
