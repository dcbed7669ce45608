#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cga_mapf/graph.hpp"
#include "cga_mapf/solution.hpp"
#include "cga_mapf/svs.hpp"

namespace cga {

struct Limits {
  double time_limit_s = 60.0;
  // Cap on simulated time steps; each solver picks its own default when unset.
  std::optional<long> step_cap;
};

enum class SolveStatus { Solved, Timeout };

struct SolveResult {
  SolveStatus status = SolveStatus::Timeout;
  std::vector<Path> paths;  // wait-padded; partial when not solved
  double runtime_s = 0.0;

  bool solved() const { return status == SolveStatus::Solved; }
};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : start_(std::chrono::steady_clock::now()), limit_s_(seconds) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  bool expired() const { return elapsed() >= limit_s_; }

 private:
  std::chrono::steady_clock::time_point start_;
  double limit_s_;
};

enum class Algorithm { Cga, Prp, Pibt };

std::optional<Algorithm> parse_algorithm(std::string_view name);
const char* to_string(Algorithm algo);

// Dispatches to the chosen solver. `svs` is only read by CGA; `seed` by PrP and PIBT.
SolveResult run_solver(Algorithm algo, const Instance& instance, const GridGraph& graph,
                       const SeparatingVertexSet& svs, const Limits& limits, std::uint64_t seed);

// Runs the solver and packages the result with its metadata.
Solution solve_to_solution(Algorithm algo, const Instance& instance, const GridGraph& graph,
                           const SeparatingVertexSet& svs, const Limits& limits, std::uint64_t seed);

}  // namespace cga
