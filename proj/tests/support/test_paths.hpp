#pragma once

#include <filesystem>

namespace kgbench::testing {

inline std::filesystem::path TestDataDir() { return KGBENCH_TEST_DATA_DIR; }
inline std::filesystem::path SourceDir() { return KGBENCH_SOURCE_DIR; }

}  // namespace kgbench::testing
