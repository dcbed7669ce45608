#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cga {

// One benchmark run; soc and makespan are present only for solved runs.
struct RunRecord {
  std::string map;
  std::string algo;
  int n = 0;
  int instance = 0;
  std::uint64_t seed = 0;
  bool solved = false;
  double runtime_s = 0.0;
  std::optional<int> soc;
  std::optional<int> makespan;

  bool operator==(const RunRecord&) const = default;
};

struct SummaryRow {
  std::string map;
  std::string algo;
  int n = 0;
  int runs = 0;
  int solved = 0;
  double success_rate = 0.0;
  std::optional<double> mean_runtime_s;    // over solved runs
  std::optional<double> median_runtime_s;  // over solved runs
  std::vector<int> makespans;              // solved runs, ascending
};

// Groups by (map, algo, n) in first-appearance order of maps and algorithms,
// agent counts ascending.
std::vector<SummaryRow> aggregate(const std::vector<RunRecord>& records);

}  // namespace cga
