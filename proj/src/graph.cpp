#include "cga_mapf/graph.hpp"

#include <algorithm>

namespace cga {

GridGraph::GridGraph(const GridMap& map)
    : width_(map.width()), height_(map.height()) {
  const int n = map.num_passable();
  cells_.resize(static_cast<std::size_t>(n));
  adjacency_.resize(static_cast<std::size_t>(n));
  constexpr int kDr[4] = {-1, 0, 1, 0};
  constexpr int kDc[4] = {0, 1, 0, -1};
  for (Vertex v = 0; v < n; ++v) {
    cells_[v] = map.cell_of(v);
    const int r = map.row_of(v), c = map.col_of(v);
    for (int d = 0; d < 4; ++d) {
      Vertex u = map.vertex_at(r + kDr[d], c + kDc[d]);
      if (u >= 0) adjacency_[v].push_back(u);
    }
    num_edges_ += static_cast<int>(adjacency_[v].size());
  }
  num_edges_ /= 2;
}

bool GridGraph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

DistanceMap bfs_distances(const GridGraph& graph, Vertex source, std::span<const char> blocked) {
  DistanceMap out{source, std::vector<int>(static_cast<std::size_t>(graph.size()), kUnreachable)};
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(graph.size()));
  out.dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex u : graph.neighbors(v)) {
      if (out.dist[u] != kUnreachable) continue;
      if (!blocked.empty() && blocked[u]) continue;
      out.dist[u] = out.dist[v] + 1;
      queue.push_back(u);
    }
  }
  return out;
}

std::optional<Path> descend(const GridGraph& graph, const DistanceMap& to_goal, Vertex from) {
  if (!to_goal.reachable(from)) return std::nullopt;
  Path path{from};
  Vertex v = from;
  while (to_goal[v] > 0) {
    Vertex next = -1;
    for (Vertex u : graph.neighbors(v))
      if (to_goal[u] == to_goal[v] - 1 && (next < 0 || u < next)) next = u;
    v = next;
    path.push_back(v);
  }
  return path;
}

std::optional<Path> shortest_path(const GridGraph& graph, Vertex from, Vertex to) {
  return descend(graph, bfs_distances(graph, to), from);
}

}  // namespace cga
