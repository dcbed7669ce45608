#include "cga_mapf/validate.hpp"

#include <algorithm>
#include <tuple>

namespace cga {

ConflictReport validate(const Solution& solution, const GridGraph& graph) {
  ConflictReport report;
  const int n = solution.num_agents();
  std::vector<Path> paths = solution.paths;
  std::size_t len = 0;
  for (const auto& p : paths) len = std::max(len, p.size());
  for (int i = 0; i < n; ++i) {
    auto& p = paths[static_cast<std::size_t>(i)];
    if (p.size() != len) report.errors.push_back({StructuralKind::Length, i, static_cast<int>(p.size())});
    if (p.empty()) continue;
    for (std::size_t t = 0; t < p.size(); ++t) {
      if (p[t] < 0 || p[t] >= graph.size()) {
        report.errors.push_back({StructuralKind::BadVertex, i, static_cast<int>(t)});
        p[t] = -1;
      }
    }
    for (std::size_t t = 0; t + 1 < p.size(); ++t) {
      if (p[t] < 0 || p[t + 1] < 0 || p[t] == p[t + 1]) continue;
      if (!graph.adjacent(p[t], p[t + 1]))
        report.errors.push_back({StructuralKind::IllegalMove, i, static_cast<int>(t)});
    }
  }
  pad_paths(paths);

  // occupants[v] lists the agents at v at the current time step
  std::vector<std::vector<int>> occupants(static_cast<std::size_t>(graph.size()));
  std::vector<Vertex> touched;
  for (std::size_t t = 0; t < len; ++t) {
    for (Vertex v : touched) occupants[v].clear();
    touched.clear();
    for (int i = 0; i < n; ++i) {
      const auto& p = paths[static_cast<std::size_t>(i)];
      if (p.empty() || p[t] < 0) continue;
      if (occupants[p[t]].empty()) touched.push_back(p[t]);
      occupants[p[t]].push_back(i);
    }
    for (Vertex v : touched) {
      const auto& who = occupants[v];
      for (std::size_t x = 0; x < who.size(); ++x)
        for (std::size_t y = x + 1; y < who.size(); ++y)
          report.conflicts.push_back(
              {ConflictKind::Vertex, who[x], who[y], static_cast<int>(t), v, -1, -1});
    }
    if (t + 1 == len) break;
    for (int i = 0; i < n; ++i) {
      const auto& p = paths[static_cast<std::size_t>(i)];
      if (p.empty()) continue;
      const Vertex from = p[t], to = p[t + 1];
      if (from < 0 || to < 0 || from == to) continue;
      for (int j : occupants[to]) {
        if (j <= i) continue;
        const auto& q = paths[static_cast<std::size_t>(j)];
        if (q[t + 1] == from)
          report.conflicts.push_back(
              {ConflictKind::Swapping, i, j, static_cast<int>(t), -1, from, to});
      }
    }
  }
  // a swap with j < i is found from j's side; keep one canonical order
  std::sort(report.conflicts.begin(), report.conflicts.end(), [](const Conflict& x, const Conflict& y) {
    return std::tie(x.time, x.kind, x.a, x.b) < std::tie(y.time, y.kind, y.a, y.b);
  });
  std::sort(report.errors.begin(), report.errors.end());
  return report;
}

ConflictReport validate(const Solution& solution, const GridGraph& graph, const Instance& instance) {
  ConflictReport report = validate(solution, graph);
  if (solution.num_agents() != instance.num_agents()) {
    report.errors.push_back({StructuralKind::Length, -1, 0});
    return report;
  }
  for (int i = 0; i < instance.num_agents(); ++i) {
    const auto& p = solution.paths[static_cast<std::size_t>(i)];
    if (p.empty() || p.front() != instance.starts()[static_cast<std::size_t>(i)])
      report.errors.push_back({StructuralKind::WrongStart, i, 0});
    if (solution.solved && (p.empty() || p.back() != instance.goals()[static_cast<std::size_t>(i)]))
      report.errors.push_back(
          {StructuralKind::WrongGoal, i, p.empty() ? 0 : static_cast<int>(p.size()) - 1});
  }
  std::sort(report.errors.begin(), report.errors.end());
  return report;
}

}  // namespace cga
