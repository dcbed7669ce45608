#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cga_mapf/metrics.hpp"
#include "cga_mapf/solver.hpp"

namespace cga {

struct BenchConfig {
  std::vector<std::filesystem::path> maps;
  std::vector<int> agent_counts;
  int instances = 15;
  double time_limit_s = 60.0;
  std::vector<Algorithm> algorithms;
  std::uint64_t base_seed = 0;
  std::filesystem::path out_csv;
  int workers = 1;
  std::optional<long> step_cap;

  // Throws std::invalid_argument on empty lists or non-positive counts/limits.
  void check() const;
};

// Instance seed: stable_hash of "base|map|n|instance" (FNV-1a 64 with a
// splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view map_name, int n, int instance);

inline constexpr std::string_view kCsvHeader = "map,algo,n,instance,seed,solved,runtime_s,soc,makespan";

std::string csv_row(const RunRecord& record);
std::vector<RunRecord> parse_csv(const std::string& text);
std::vector<RunRecord> read_csv(const std::filesystem::path& file);

// Everything one run needs that is shared across runs on the same map.
struct PreparedMap {
  GridMap map;
  GridGraph graph;
  SeparatingVertexSet svs;
};
PreparedMap prepare_map(GridMap map);

// Generates the instance from `seed`, solves it and validates the result.
// A solution that fails validation is recorded as unsolved and reported
// through `validation_failed`.
RunRecord run_one(const PreparedMap& prepared, Algorithm algo, int n, int instance, std::uint64_t seed,
                  const Limits& limits, bool* validation_failed = nullptr);

struct BenchSummary {
  int executed = 0;
  int skipped = 0;  // rows already present in the CSV
  int validation_failures = 0;
};

// Runs the map x n x algorithm x instance grid, appending one CSV row per run
// in grid order. Rows already in the CSV are skipped.
BenchSummary run_bench(const BenchConfig& config, std::ostream& log);

}  // namespace cga
