#pragma once

#include <vector>

#include "cga_mapf/rng.hpp"
#include "cga_mapf/solver.hpp"

namespace cga {

// Priority Inheritance with Backtracking. Priorities grow by one per step
// while an agent is away from its goal and drop back to the agent's
// tie-breaker once it arrives. Candidate moves at equal distance to the goal
// are ordered randomly from `seed`.
class Pibt {
 public:
  Pibt(const GridGraph& graph, std::vector<Vertex> starts, std::vector<Vertex> goals,
       std::uint64_t seed = 0);

  // Computes and applies the next configuration; returns it.
  const std::vector<Vertex>& step();

  const std::vector<Vertex>& config() const { return config_; }
  const std::vector<double>& priorities() const { return priority_; }
  bool at_goals() const { return config_ == goals_; }

 private:
  bool plan(int agent, int parent);

  const GridGraph& graph_;
  std::vector<Vertex> goals_;
  std::vector<DistanceMap> dist_;
  std::vector<Vertex> config_;
  std::vector<Vertex> next_;
  std::vector<double> priority_;
  std::vector<double> tie_breaker_;
  std::vector<int> occupied_now_;
  std::vector<int> occupied_next_;
  Rng rng_;
};

// Iterates PIBT steps until every agent is on its goal at the same time, or
// the step cap (default 20 |V|) or time limit is hit.
SolveResult solve_pibt(const Instance& instance, const GridGraph& graph, const Limits& limits,
                       std::uint64_t seed = 0);

}  // namespace cga
