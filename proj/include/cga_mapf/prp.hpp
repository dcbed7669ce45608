#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "cga_mapf/solver.hpp"

namespace cga {

// Space-time occupancy committed by already-planned agents. A committed path
// occupies path[t] at time t and its last vertex for every later time.
class ReservationTable {
 public:
  explicit ReservationTable(int num_vertices);

  void add_path(const Path& path);
  bool vertex_free(Vertex v, int t) const;
  // False when moving from->to between t and t+1 swaps with a committed move.
  bool edge_free(Vertex from, Vertex to, int t) const;
  // Latest time at which v is occupied by a timed (non-resting) entry, -1 if none.
  int last_occupied(Vertex v) const { return last_occupied_[static_cast<std::size_t>(v)]; }
  int rest_time(Vertex v) const { return rest_time_[static_cast<std::size_t>(v)]; }
  // From this time on nothing changes: every entry is a permanent rest.
  int static_from() const { return static_from_; }

 private:
  static std::uint64_t key(Vertex a, Vertex b, int t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t)) << 40) ^
           (static_cast<std::uint64_t>(a) << 20) ^ static_cast<std::uint64_t>(b);
  }

  std::unordered_set<std::uint64_t> vertex_time_;
  std::unordered_set<std::uint64_t> edge_time_;
  std::vector<int> last_occupied_;
  std::vector<int> rest_time_;
  int static_from_ = 0;
};

// Temporal A* over (vertex, time) with waiting. The returned path reaches
// `goal` at the earliest time from which the agent can rest there for good.
// `heuristic` must be the BFS distance field toward `goal`.
std::optional<Path> space_time_astar(const GridGraph& graph, Vertex start, Vertex goal,
                                     const ReservationTable& reservations, int horizon,
                                     const DistanceMap& heuristic, const Deadline* deadline = nullptr);

// Prioritized planning with random restarts: a fresh seeded random order is
// drawn whenever some agent cannot be planned, until the time limit.
SolveResult solve_prp(const Instance& instance, const GridGraph& graph, const Limits& limits,
                      std::uint64_t seed);

}  // namespace cga
