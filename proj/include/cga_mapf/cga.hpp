#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "cga_mapf/solver.hpp"

namespace cga {

struct AgentState {
  int id = 0;
  Vertex goal = -1;       // active goal, possibly temporary
  Vertex init_goal = -1;
  bool temp_goal_active = false;
  Path path;              // path[t] = vertex at time t
  // distances to init_goal around the agents that stood in the way when
  // progress stalled; followed instead of the plain field until arrival
  std::shared_ptr<const DistanceMap> detour;

  Vertex at(long t) const {
    return t < static_cast<long>(path.size()) ? path[static_cast<std::size_t>(t)] : path.back();
  }
};

// Prefix of the agent's current shortest path to its goal whose interior
// vertices are all separating vertices. front() is the agent's position.
using Corridor = std::vector<Vertex>;

enum class EvacuationFailure { BlockedByPlan, UnsolvableLocally };

// One agent's leg of a push: `route` runs from its position to the vertex it
// must occupy afterwards.
struct ChainMove {
  int agent = -1;
  Path route;
};

// Evacuation path for one blocker. Agents standing on `path` outside the
// corridor are pushed one slot along it (chain), so the occupancy change of
// the whole move is: path.front() vacated, path.back() filled.
struct EvacuationPath {
  int blocker = -1;
  Path path;
  std::vector<ChainMove> chain;  // front-most agent first
};

struct EvacuationPlan {
  std::vector<EvacuationPath> evs;  // in processing order
};

struct FindEvsResult {
  std::optional<EvacuationFailure> failure;
  EvacuationPlan plan;

  bool ok() const { return !failure.has_value(); }
};

// Emitted for every find_evs call made by the main loop.
struct FindEvsEvent {
  long frontier = 0;
  int agent = -1;
  int order_position = 0;  // 0 = highest priority
  bool on_non_sv = false;  // agent stands on a non-separating vertex
  int corridor_length = 0;
  std::optional<EvacuationFailure> failure;
};

// Corridor-generating MAPF solver. Agents plan in priority order at a global
// frontier time; an agent whose step at the frontier+1 is already written is
// skipped. A planning agent builds a corridor toward its goal, evacuates the
// agents inside it, and is pushed through.
class CgaSolver {
 public:
  CgaSolver(const GridGraph& graph, const SeparatingVertexSet& svs, const Instance& instance,
            Limits limits = {});
  CgaSolver(const GridGraph& graph, const SeparatingVertexSet& svs, std::vector<Vertex> starts,
            std::vector<Vertex> goals, Limits limits = {});

  SolveResult solve();

  // One main-loop round at the current frontier, then the frontier advances.
  void iterate();
  bool all_at_goals() const;

  Corridor create_corridor(int agent);
  FindEvsResult find_evs(int agent, const Corridor& corridor);
  void evacuate_and_push(int agent, const Corridor& corridor, const EvacuationPlan& plan);
  // stalled: the finished round wrote no steps and assigned no temporary goal
  // while no plan is in flight.
  void update_order(bool stalled);

  const std::vector<AgentState>& agents() const { return agents_; }
  const std::vector<int>& order() const { return order_; }
  void set_order(std::vector<int> order) { order_ = std::move(order); }
  long frontier() const { return frontier_; }
  long step_cap() const { return step_cap_; }
  bool planned(int agent) const {
    return static_cast<long>(agents_[static_cast<std::size_t>(agent)].path.size()) > frontier_ + 1;
  }
  bool reserved(Vertex v) const { return reserved_count_[static_cast<std::size_t>(v)] > 0; }

  void set_observer(std::function<void(const FindEvsEvent&)> observer) {
    observer_ = std::move(observer);
  }

 private:
  const DistanceMap& distances_to(Vertex goal);
  void rebuild_index();
  void add_reservations(int agent);
  std::optional<Path> evacuation_search(Vertex start, Vertex main_pos, Vertex main_goal,
                                        bool respect_reservations, bool through_goal);
  void assign_temp_goal(AgentState& agent);
  // Gives the first unfinished agent with a real detour its detour field.
  bool start_detour();
  // Runs the routes under a shared clock; each actor advances when its next
  // vertex is free for the next step. nullopt when stuck or over max_steps.
  std::optional<std::vector<Path>> simulate(const std::vector<ChainMove>& actors, long max_steps);

  const GridGraph& graph_;
  const SeparatingVertexSet& svs_;
  Limits limits_;
  long step_cap_;
  std::vector<AgentState> agents_;
  std::vector<int> order_;
  long frontier_ = 0;

  std::vector<std::unique_ptr<DistanceMap>> dist_cache_;
  std::vector<int> reserved_count_;  // future steps of planned agents, t >= frontier
  std::vector<int> occupant_;        // unplanned agent standing on each vertex
  // scratch for searches: visited stamps, BFS distances, membership marks
  std::vector<unsigned> seen_;
  std::vector<int> bfs_dist_;
  std::vector<unsigned> corridor_mark_;
  std::vector<unsigned> claimed_mark_;
  std::vector<Vertex> queue_;
  std::vector<int> sim_occ_;
  unsigned stamp_ = 0;
  unsigned mark_ = 0;

  std::function<void(const FindEvsEvent&)> observer_;
  int current_order_position_ = 0;
  bool temp_goal_assigned_ = false;
  int steps_written_ = 0;
  // rounds without a new minimum of the summed distance to initial goals
  // before the order rotates as if the round had stalled
  static constexpr long kProgressWindow = 32;
  long best_remaining_ = std::numeric_limits<long>::max();
  long last_progress_ = 0;
};

inline SolveResult solve_cga(const Instance& instance, const GridGraph& graph,
                             const SeparatingVertexSet& svs, const Limits& limits) {
  return CgaSolver(graph, svs, instance, limits).solve();
}

}  // namespace cga
