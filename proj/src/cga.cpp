#include "cga_mapf/cga.hpp"

#include <algorithm>
#include <stdexcept>

namespace cga {

CgaSolver::CgaSolver(const GridGraph& graph, const SeparatingVertexSet& svs, const Instance& instance,
                     Limits limits)
    : CgaSolver(graph, svs, instance.starts(), instance.goals(), limits) {}

CgaSolver::CgaSolver(const GridGraph& graph, const SeparatingVertexSet& svs,
                     std::vector<Vertex> starts, std::vector<Vertex> goals, Limits limits)
    : graph_(graph), svs_(svs), limits_(limits) {
  if (svs.size() != graph.size()) throw std::invalid_argument("SVS does not match the graph");
  if (starts.size() != goals.size()) throw std::invalid_argument("starts and goals differ in length");
  step_cap_ = limits.step_cap.value_or(20L * graph.size());
  const std::size_t nv = static_cast<std::size_t>(graph.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    AgentState a;
    a.id = static_cast<int>(i);
    a.goal = a.init_goal = goals[i];
    a.path = {starts[i]};
    agents_.push_back(std::move(a));
    order_.push_back(static_cast<int>(i));
  }
  dist_cache_.resize(nv);
  reserved_count_.assign(nv, 0);
  occupant_.assign(nv, -1);
  seen_.assign(nv, 0);
  bfs_dist_.assign(nv, 0);
  corridor_mark_.assign(nv, 0);
  claimed_mark_.assign(nv, 0);
  sim_occ_.assign(nv, -1);
  queue_.reserve(nv);
  rebuild_index();
}

const DistanceMap& CgaSolver::distances_to(Vertex goal) {
  auto& slot = dist_cache_[static_cast<std::size_t>(goal)];
  if (!slot) slot = std::make_unique<DistanceMap>(bfs_distances(graph_, goal));
  return *slot;
}

void CgaSolver::rebuild_index() {
  std::fill(reserved_count_.begin(), reserved_count_.end(), 0);
  std::fill(occupant_.begin(), occupant_.end(), -1);
  for (const auto& a : agents_) {
    if (planned(a.id)) {
      for (std::size_t t = static_cast<std::size_t>(frontier_); t < a.path.size(); ++t)
        ++reserved_count_[a.path[t]];
    } else {
      occupant_[a.path.back()] = a.id;
    }
  }
}

void CgaSolver::add_reservations(int agent) {
  const auto& a = agents_[static_cast<std::size_t>(agent)];
  const Vertex here = a.path[static_cast<std::size_t>(frontier_)];
  if (occupant_[here] == agent) occupant_[here] = -1;
  for (std::size_t t = static_cast<std::size_t>(frontier_); t < a.path.size(); ++t)
    ++reserved_count_[a.path[t]];
}

bool CgaSolver::all_at_goals() const {
  for (const auto& a : agents_)
    if (planned(a.id) || a.path.back() != a.init_goal) return false;
  return true;
}

Corridor CgaSolver::create_corridor(int agent) {
  const auto& a = agents_[static_cast<std::size_t>(agent)];
  const Vertex start = a.at(frontier_);
  Corridor corridor{start};
  if (start == a.goal) return corridor;
  const bool use_detour = a.detour && !a.temp_goal_active && a.detour->reachable(start);
  const DistanceMap& to_goal = use_detour ? *a.detour : distances_to(a.goal);
  if (!to_goal.reachable(start))
    throw std::logic_error("agent " + std::to_string(agent) + " cannot reach its goal");
  // among shortest paths, step onto free vertices where there is a choice
  auto rank = [&](Vertex u) { return std::pair(occupant_[u] >= 0 || reserved(u), u); };
  Vertex v = start;
  do {
    Vertex next = -1;
    for (Vertex u : graph_.neighbors(v))
      if (to_goal[u] == to_goal[v] - 1 && (next < 0 || rank(u) < rank(next))) next = u;
    v = next;
    corridor.push_back(v);
  } while (v != a.goal && svs_.is_sv(v));
  for (std::size_t i = 1; i + 1 < corridor.size(); ++i)
    if (!svs_.is_sv(corridor[i])) throw std::logic_error("corridor interior vertex is not an SV");
  return corridor;
}

std::optional<Path> CgaSolver::evacuation_search(Vertex start, Vertex main_pos, Vertex main_goal,
                                                 bool respect_reservations, bool through_goal) {
  // equally near targets: the one closest to the evacuee's own goal, then lowest index
  const DistanceMap& evacuee_goal = distances_to(agents_[static_cast<std::size_t>(occupant_[start])].goal);
  auto blocked = [&](Vertex v) {
    return (v == main_goal && !through_goal) || v == main_pos || claimed_mark_[v] == mark_ ||
           (respect_reservations && reserved(v));
  };
  ++stamp_;
  queue_.clear();
  queue_.push_back(start);
  seen_[start] = stamp_;
  bfs_dist_[start] = 0;
  Vertex best = -1;
  int best_dist = kUnreachable;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex v = queue_[head];
    if (bfs_dist_[v] >= best_dist) break;
    for (Vertex u : graph_.neighbors(v)) {
      if (seen_[u] == stamp_ || blocked(u)) continue;
      seen_[u] = stamp_;
      bfs_dist_[u] = bfs_dist_[v] + 1;
      queue_.push_back(u);
      const bool target = corridor_mark_[u] != mark_ && occupant_[u] < 0 && u != main_goal;
      if (target && (bfs_dist_[u] < best_dist ||
                     (bfs_dist_[u] == best_dist &&
                      std::pair(evacuee_goal[u], u) < std::pair(evacuee_goal[best], best)))) {
        best = u;
        best_dist = bfs_dist_[u];
      }
    }
  }
  if (best < 0) return std::nullopt;
  Path path{best};
  Vertex v = best;
  while (v != start) {
    Vertex prev = -1;
    for (Vertex u : graph_.neighbors(v))
      if (seen_[u] == stamp_ && bfs_dist_[u] == bfs_dist_[v] - 1 && (prev < 0 || u < prev)) prev = u;
    v = prev;
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

void CgaSolver::assign_temp_goal(AgentState& agent) {
  const Vertex start = agent.at(frontier_);
  const DistanceMap from = bfs_distances(graph_, start);
  Vertex best = -1;
  for (Vertex v = 0; v < graph_.size(); ++v) {
    if (v == start || v == agent.init_goal || v == agent.goal || !from.reachable(v)) continue;
    if (svs_.is_sv(v) || occupant_[v] >= 0 || reserved(v)) continue;
    if (best < 0 || from[v] < from[best]) best = v;
  }
  if (best < 0) return;
  agent.goal = best;
  agent.temp_goal_active = true;
  temp_goal_assigned_ = true;
}

FindEvsResult CgaSolver::find_evs(int agent, const Corridor& corridor) {
  AgentState& main = agents_[static_cast<std::size_t>(agent)];
  FindEvsResult result;
  auto finish = [&](std::optional<EvacuationFailure> failure) {
    result.failure = failure;
    if (observer_) {
      observer_({frontier_, agent, current_order_position_, !svs_.is_sv(corridor.front()),
                 static_cast<int>(corridor.size()), failure});
    }
    return result;
  };
  const Vertex main_pos = corridor.front();
  for (std::size_t i = 1; i < corridor.size(); ++i)
    if (reserved(corridor[i])) return finish(EvacuationFailure::BlockedByPlan);

  ++mark_;
  for (Vertex v : corridor) corridor_mark_[v] = mark_;
  // occupant_ is edited in place while claims accumulate and restored at the end
  std::vector<std::pair<Vertex, int>> undo;
  auto set_occupant = [&](Vertex v, int who) {
    undo.emplace_back(v, occupant_[v]);
    occupant_[v] = who;
  };
  auto restore = [&]() {
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) occupant_[it->first] = it->second;
  };

  while (true) {
    // the blocker nearest the far end of the corridor goes first
    int idx = static_cast<int>(corridor.size()) - 1;
    while (idx >= 1 && occupant_[corridor[static_cast<std::size_t>(idx)]] < 0) --idx;
    if (idx < 1) break;
    const Vertex from = corridor[static_cast<std::size_t>(idx)];
    auto path = evacuation_search(from, main_pos, main.goal, true, false);
    // a blocker cornered behind the goal may still leave by walking over it
    if (!path) path = evacuation_search(from, main_pos, main.goal, true, true);
    if (!path) {
      const bool blocked_by_plan = evacuation_search(from, main_pos, main.goal, false, true).has_value();
      restore();
      if (blocked_by_plan) return finish(EvacuationFailure::BlockedByPlan);
      assign_temp_goal(main);
      return finish(EvacuationFailure::UnsolvableLocally);
    }
    EvacuationPath ev;
    ev.blocker = occupant_[from];
    ev.path = *path;
    std::vector<std::size_t> occupied;
    for (std::size_t j = 0; j + 1 < path->size(); ++j)
      if (occupant_[(*path)[j]] >= 0) occupied.push_back(j);
    for (std::size_t m = occupied.size(); m-- > 0;) {
      const std::size_t begin = occupied[m];
      const std::size_t end = m + 1 < occupied.size() ? occupied[m + 1] : path->size() - 1;
      ev.chain.push_back({occupant_[(*path)[begin]],
                          Path(path->begin() + static_cast<std::ptrdiff_t>(begin),
                               path->begin() + static_cast<std::ptrdiff_t>(end) + 1)});
    }
    for (const auto& move : ev.chain) set_occupant(move.route.front(), -1);
    for (const auto& move : ev.chain) set_occupant(move.route.back(), move.agent);
    claimed_mark_[path->back()] = mark_;
    result.plan.evs.push_back(std::move(ev));
  }
  restore();
  return finish(std::nullopt);
}

std::optional<std::vector<Path>> CgaSolver::simulate(const std::vector<ChainMove>& actors,
                                                     long max_steps) {
  enum class Decision : char { Undecided, Wait, Move };
  const std::size_t k = actors.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<Path> out(k);
  std::vector<Decision> decision(k);
  std::vector<Vertex> claims;
  for (std::size_t i = 0; i < k; ++i) {
    out[i].push_back(actors[i].route.front());
    sim_occ_[actors[i].route.front()] = static_cast<int>(i);
  }
  auto cleanup = [&]() {
    for (std::size_t i = 0; i < k; ++i) sim_occ_[actors[i].route[idx[i]]] = -1;
  };
  auto done = [&](std::size_t i) { return idx[i] + 1 == actors[i].route.size(); };
  // claims are tracked with the stamp array shared with the searches
  for (long step = 0;; ++step) {
    bool all_done = true;
    for (std::size_t i = 0; i < k; ++i) all_done = all_done && done(i);
    if (all_done) break;
    if (step >= max_steps) {
      cleanup();
      return std::nullopt;
    }
    ++stamp_;
    auto claim = [&](Vertex v) { seen_[v] = stamp_; };
    auto claimed = [&](Vertex v) { return seen_[v] == stamp_; };
    for (std::size_t i = 0; i < k; ++i) {
      decision[i] = Decision::Undecided;
      if (done(i)) {
        decision[i] = Decision::Wait;
        claim(actors[i].route[idx[i]]);
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (decision[i] != Decision::Undecided) continue;
        const Vertex cur = actors[i].route[idx[i]];
        const Vertex next = actors[i].route[idx[i] + 1];
        Decision d = Decision::Undecided;
        const int o = sim_occ_[next];
        if (claimed(next)) {
          d = Decision::Wait;
        } else if (o < 0) {
          d = Decision::Move;
        } else if (decision[static_cast<std::size_t>(o)] == Decision::Wait) {
          d = Decision::Wait;
        } else if (decision[static_cast<std::size_t>(o)] == Decision::Move) {
          const auto& other = actors[static_cast<std::size_t>(o)];
          d = other.route[idx[static_cast<std::size_t>(o)] + 1] == cur ? Decision::Wait : Decision::Move;
        }
        if (d == Decision::Undecided) continue;
        decision[i] = d;
        claim(d == Decision::Move ? next : cur);
        changed = true;
      }
    }
    bool moved = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (decision[i] != Decision::Move) continue;
      moved = true;
      if (sim_occ_[actors[i].route[idx[i]]] == static_cast<int>(i)) sim_occ_[actors[i].route[idx[i]]] = -1;
    }
    if (!moved) {
      cleanup();
      return std::nullopt;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (decision[i] == Decision::Move) {
        ++idx[i];
        sim_occ_[actors[i].route[idx[i]]] = static_cast<int>(i);
      }
      out[i].push_back(actors[i].route[idx[i]]);
    }
  }
  cleanup();
  return out;
}

void CgaSolver::evacuate_and_push(int agent, const Corridor& corridor, const EvacuationPlan& plan) {
  // each agent's legs concatenated in plan order, main agent last
  std::vector<ChainMove> actors;
  std::vector<int> slot(agents_.size(), -1);
  long bound = static_cast<long>(corridor.size());
  for (const auto& ev : plan.evs) {
    bound += static_cast<long>(ev.path.size());
    for (const auto& move : ev.chain) {
      int& s = slot[static_cast<std::size_t>(move.agent)];
      if (s < 0) {
        s = static_cast<int>(actors.size());
        actors.push_back(move);
      } else {
        auto& route = actors[static_cast<std::size_t>(s)].route;
        route.insert(route.end(), move.route.begin() + 1, move.route.end());
      }
    }
  }
  slot[static_cast<std::size_t>(agent)] = static_cast<int>(actors.size());
  actors.push_back({agent, corridor});

  auto timeline = simulate(actors, bound);
  if (!timeline) {
    // one evacuation path at a time, then the main agent
    std::vector<Path> lines(actors.size());
    for (std::size_t i = 0; i < actors.size(); ++i) lines[i] = {actors[i].route.front()};
    auto run_phase = [&](const std::vector<ChainMove>& phase) {
      auto part = simulate(phase, static_cast<long>(graph_.size()));
      if (!part) throw std::logic_error("evacuation phase could not be scheduled");
      const std::size_t len = part->front().size();
      for (auto& line : lines) line.resize(line.size() + len - 1, line.back());
      for (std::size_t p = 0; p < phase.size(); ++p) {
        auto& line = lines[static_cast<std::size_t>(slot[static_cast<std::size_t>(phase[p].agent)])];
        std::copy((*part)[p].begin() + 1, (*part)[p].end(), line.end() - static_cast<std::ptrdiff_t>(len - 1));
      }
    };
    for (const auto& ev : plan.evs) run_phase(ev.chain);
    run_phase({ChainMove{agent, corridor}});
    timeline = std::move(lines);
  }
  if (static_cast<long>(timeline->front().size()) - 1 > bound)
    throw std::logic_error("evacuate_and_push exceeded its step bound");

  for (std::size_t i = 0; i < actors.size(); ++i) {
    auto& a = agents_[static_cast<std::size_t>(actors[i].agent)];
    const Path& line = (*timeline)[i];
    const int last_move = path_cost(line);
    a.path.insert(a.path.end(), line.begin() + 1, line.begin() + last_move + 1);
    if (planned(a.id)) add_reservations(a.id);
  }
  ++steps_written_;
}

bool CgaSolver::start_detour() {
  for (int id : order_) {
    AgentState& a = agents_[static_cast<std::size_t>(id)];
    const Vertex here = a.at(frontier_);
    if (here == a.init_goal || a.temp_goal_active || a.detour) continue;
    std::vector<char> blocked(static_cast<std::size_t>(graph_.size()), 0);
    // in the way: agents still travelling, and anyone on the direct route
    std::vector<char> occupied(blocked.size(), 0);
    for (const auto& other : agents_) {
      if (other.id == id) continue;
      const auto v = static_cast<std::size_t>(other.at(frontier_));
      occupied[v] = 1;
      if (other.at(frontier_) != other.init_goal) blocked[v] = 1;
    }
    const DistanceMap& direct = distances_to(a.init_goal);
    const Path route = *descend(graph_, direct, here);
    bool route_blocked = false;
    for (Vertex v : route) {
      if (v == a.init_goal || !occupied[static_cast<std::size_t>(v)]) continue;
      blocked[static_cast<std::size_t>(v)] = 1;
      route_blocked = true;
    }
    blocked[static_cast<std::size_t>(a.init_goal)] = 0;
    auto around = std::make_shared<DistanceMap>(bfs_distances(graph_, a.init_goal, blocked));
    if (!around->reachable(here) || (!route_blocked && (*around)[here] == direct[here])) continue;
    a.detour = std::move(around);
    return true;
  }
  return false;
}

void CgaSolver::update_order(bool stalled) {
  auto finished = [&](int id) {
    const auto& a = agents_[static_cast<std::size_t>(id)];
    return !a.temp_goal_active && a.at(frontier_) == a.init_goal;
  };
  auto mid = std::stable_partition(order_.begin(), order_.end(), [&](int id) { return !finished(id); });
  if (stalled && mid != order_.begin()) std::rotate(order_.begin(), order_.begin() + 1, mid);
}

void CgaSolver::iterate() {
  temp_goal_assigned_ = false;
  steps_written_ = 0;
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    const int id = order_[pos];
    current_order_position_ = static_cast<int>(pos);
    if (planned(id)) continue;
    AgentState& a = agents_[static_cast<std::size_t>(id)];
    if (a.path.back() == a.goal && a.temp_goal_active) {
      a.temp_goal_active = false;
      a.goal = a.init_goal;
    }
    if (a.path.back() == a.init_goal) a.detour.reset();
    if (a.path.back() == a.goal) continue;
    const Corridor corridor = create_corridor(id);
    const FindEvsResult evs = find_evs(id, corridor);
    if (!evs.ok()) continue;
    evacuate_and_push(id, corridor, evs.plan);
  }
  ++frontier_;
  bool in_flight = false;
  for (auto& a : agents_) {
    if (static_cast<long>(a.path.size()) <= frontier_) a.path.push_back(a.path.back());
    in_flight = in_flight || planned(a.id);
  }
  bool stalled = steps_written_ == 0 && !temp_goal_assigned_ && !in_flight;
  // livelock guard: agents can push each other back and forth forever
  long remaining = 0;
  for (const auto& a : agents_) remaining += distances_to(a.init_goal)[a.at(frontier_)];
  if (remaining < best_remaining_) {
    best_remaining_ = remaining;
    last_progress_ = frontier_;
  } else if (frontier_ - last_progress_ >= kProgressWindow) {
    // retried every round since a livelock can cycle through states where no
    // agent has a way around; rotate the order if none turns up for a while
    if (start_detour()) {
      last_progress_ = frontier_;
    } else if (frontier_ - last_progress_ >= 2 * kProgressWindow) {
      stalled = true;
      last_progress_ = frontier_;
    }
  }
  update_order(stalled);
  rebuild_index();
}

SolveResult CgaSolver::solve() {
  Deadline deadline(limits_.time_limit_s);
  SolveResult result;
  while (!all_at_goals()) {
    if (frontier_ >= step_cap_ || deadline.expired()) {
      result.status = SolveStatus::Timeout;
      break;
    }
    iterate();
  }
  if (all_at_goals()) result.status = SolveStatus::Solved;
  for (const auto& a : agents_) result.paths.push_back(a.path);
  pad_paths(result.paths);
  result.runtime_s = deadline.elapsed();
  return result;
}

}  // namespace cga
