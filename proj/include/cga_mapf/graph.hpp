#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cga_mapf/grid_map.hpp"

namespace cga {

using Path = std::vector<Vertex>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Undirected 4-connected grid graph. Neighbor lists are stored in the fixed
// order up, right, down, left; every BFS in the project expands in that order.
class GridGraph {
 public:
  GridGraph() = default;
  explicit GridGraph(const GridMap& map);

  int size() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }
  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const;
  int row(Vertex v) const { return cells_[static_cast<std::size_t>(v)] / width_; }
  int col(Vertex v) const { return cells_[static_cast<std::size_t>(v)] % width_; }

 private:
  int width_ = 0;
  int height_ = 0;
  int num_edges_ = 0;
  std::vector<int> cells_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline GridGraph build_graph(const GridMap& map) { return GridGraph(map); }

struct DistanceMap {
  Vertex source = -1;
  std::vector<int> dist;  // kUnreachable where not reachable

  int operator[](Vertex v) const { return dist[static_cast<std::size_t>(v)]; }
  bool reachable(Vertex v) const { return dist[static_cast<std::size_t>(v)] != kUnreachable; }
};

// Hop distances from `source` in the graph with `blocked` vertices removed.
// `blocked` is either empty or has one entry per vertex (nonzero = removed).
DistanceMap bfs_distances(const GridGraph& graph, Vertex source,
                          std::span<const char> blocked = {});

// Walks down a distance field toward its source, taking the lowest-index
// neighbor one step closer at every vertex. nullopt when `from` is unreachable.
std::optional<Path> descend(const GridGraph& graph, const DistanceMap& to_goal, Vertex from);

// Minimal-hop path; among all shortest paths the lexicographically smallest.
std::optional<Path> shortest_path(const GridGraph& graph, Vertex from, Vertex to);

}  // namespace cga
