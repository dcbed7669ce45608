#include "cga_mapf/prp.hpp"

#include <algorithm>
#include <queue>

#include "cga_mapf/rng.hpp"

namespace cga {

ReservationTable::ReservationTable(int num_vertices)
    : last_occupied_(static_cast<std::size_t>(num_vertices), -1),
      rest_time_(static_cast<std::size_t>(num_vertices), kUnreachable) {}

void ReservationTable::add_path(const Path& path) {
  const int last = static_cast<int>(path.size()) - 1;
  for (int t = 0; t < last; ++t) {
    const Vertex v = path[static_cast<std::size_t>(t)];
    vertex_time_.insert(key(v, 0, t));
    last_occupied_[v] = std::max(last_occupied_[v], t);
    const Vertex next = path[static_cast<std::size_t>(t) + 1];
    if (next != v) edge_time_.insert(key(next, v, t));
  }
  const Vertex rest = path.back();
  rest_time_[rest] = std::min(rest_time_[rest], last);
  static_from_ = std::max(static_from_, last);
}

bool ReservationTable::vertex_free(Vertex v, int t) const {
  if (t >= rest_time_[static_cast<std::size_t>(v)]) return false;
  return !vertex_time_.contains(key(v, 0, t));
}

bool ReservationTable::edge_free(Vertex from, Vertex to, int t) const {
  return !edge_time_.contains(key(from, to, t));
}

std::optional<Path> space_time_astar(const GridGraph& graph, Vertex start, Vertex goal,
                                     const ReservationTable& reservations, int horizon,
                                     const DistanceMap& heuristic, const Deadline* deadline) {
  if (!heuristic.reachable(start) || !reservations.vertex_free(start, 0)) return std::nullopt;
  struct Node {
    Vertex v;
    int t;
    int f;
    int parent;
  };
  std::vector<Node> nodes;
  auto worse = [&nodes](int a, int b) {
    const Node& x = nodes[static_cast<std::size_t>(a)];
    const Node& y = nodes[static_cast<std::size_t>(b)];
    if (x.f != y.f) return x.f > y.f;
    if (x.t != y.t) return x.t < y.t;  // deeper first among equal f
    return x.v > y.v;
  };
  std::priority_queue<int, std::vector<int>, decltype(worse)> open(worse);
  std::unordered_set<std::uint64_t> closed;
  auto state_key = [](Vertex v, int t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t)) << 32) | static_cast<std::uint32_t>(v);
  };
  const int goal_free_from = reservations.last_occupied(goal) + 1;
  // states past the last timed reservation differ only in time, so they share
  // one closed entry; this keeps failing searches small
  const int settle = std::max(reservations.static_from(), goal_free_from);
  auto closed_key = [&](Vertex v, int t) { return state_key(v, std::min(t, settle)); };
  nodes.push_back({start, 0, heuristic[start], -1});
  open.push(0);
  std::size_t expansions = 0;
  while (!open.empty()) {
    const int id = open.top();
    open.pop();
    const Node node = nodes[static_cast<std::size_t>(id)];
    if (!closed.insert(closed_key(node.v, node.t)).second) continue;
    if (node.v == goal && node.t >= goal_free_from) {
      Path path;
      for (int cur = id; cur >= 0; cur = nodes[static_cast<std::size_t>(cur)].parent)
        path.push_back(nodes[static_cast<std::size_t>(cur)].v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    if (deadline && (++expansions & 4095) == 0 && deadline->expired()) return std::nullopt;
    if (node.t >= horizon) continue;
    auto push = [&](Vertex u) {
      const int t = node.t + 1;
      if (!reservations.vertex_free(u, t) || !reservations.edge_free(node.v, u, node.t)) return;
      if (closed.contains(closed_key(u, t))) return;
      // goal arrival before goal_free_from still needs the later wait steps
      const int h = std::max(heuristic[u], u == goal ? goal_free_from - t : 0);
      nodes.push_back({u, t, t + h, id});
      open.push(static_cast<int>(nodes.size()) - 1);
    };
    push(node.v);
    for (Vertex u : graph.neighbors(node.v)) push(u);
  }
  return std::nullopt;
}

SolveResult solve_prp(const Instance& instance, const GridGraph& graph, const Limits& limits,
                      std::uint64_t seed) {
  Deadline deadline(limits.time_limit_s);
  const int n = instance.num_agents();
  const int horizon = static_cast<int>(limits.step_cap.value_or(4L * (graph.size() + n)));
  std::vector<DistanceMap> heuristics;
  heuristics.reserve(static_cast<std::size_t>(n));
  for (Vertex g : instance.goals()) heuristics.push_back(bfs_distances(graph, g));

  Rng rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  SolveResult result;
  while (!deadline.expired()) {
    rng.shuffle(order);
    ReservationTable table(graph.size());
    std::vector<Path> paths(static_cast<std::size_t>(n));
    bool ok = true;
    for (int id : order) {
      const auto i = static_cast<std::size_t>(id);
      auto path = space_time_astar(graph, instance.starts()[i], instance.goals()[i], table, horizon,
                                   heuristics[i], &deadline);
      if (!path) {
        ok = false;
        break;
      }
      table.add_path(*path);
      paths[i] = std::move(*path);
    }
    if (ok) {
      pad_paths(paths);
      result.status = SolveStatus::Solved;
      result.paths = std::move(paths);
      break;
    }
  }
  if (!result.solved())
    for (Vertex s : instance.starts()) result.paths.push_back({s});
  result.runtime_s = deadline.elapsed();
  return result;
}

}  // namespace cga
