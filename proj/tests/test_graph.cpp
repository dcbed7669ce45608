#include <doctest.h>

#include <functional>

#include "cga_mapf/benchmark_maps.hpp"
#include "cga_mapf/graph.hpp"
#include "helpers.hpp"

using namespace cga;

TEST_CASE("build_graph") {
  CHECK(GridGraph(test::open_grid(1, 1)).size() == 1);
  CHECK(GridGraph(test::open_grid(1, 1)).num_edges() == 0);
  GridGraph g(test::open_grid(2, 2));
  CHECK(g.size() == 4);
  CHECK(g.num_edges() == 4);

  GridMap maze = make_benchmark_map("maze-32-32-2");
  GridGraph mg(maze);
  CHECK(mg.size() == maze.num_passable());
  for (Vertex v = 0; v < mg.size(); ++v)
    for (Vertex u : mg.neighbors(v)) {
      CHECK(u != v);
      CHECK(mg.adjacent(u, v));
      CHECK(std::abs(mg.row(u) - mg.row(v)) + std::abs(mg.col(u) - mg.col(v)) == 1);
    }
}

TEST_CASE("bfs_distances") {
  GridGraph row(test::open_grid(1, 5));
  DistanceMap d = bfs_distances(row, 0);
  for (int v = 0; v < 5; ++v) CHECK(d[v] == v);
  std::vector<char> blocked(5, 0);
  blocked[2] = 1;
  DistanceMap cut = bfs_distances(row, 0, blocked);
  CHECK(cut[1] == 1);
  CHECK_FALSE(cut.reachable(2));
  CHECK_FALSE(cut.reachable(3));
  CHECK_FALSE(cut.reachable(4));
}

TEST_CASE("bfs_distances agrees with an independent relaxation on maze-32-32-4") {
  GridMap maze = make_benchmark_map("maze-32-32-4");
  GridGraph g(maze);
  const Vertex corner = maze.vertex_at(0, 0);
  REQUIRE(corner >= 0);
  DistanceMap d = bfs_distances(g, corner);
  // Bellman-Ford style relaxation over the raw cell grid
  std::vector<int> ref(static_cast<std::size_t>(maze.width() * maze.height()), 1 << 29);
  ref[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int r = 0; r < maze.height(); ++r)
      for (int c = 0; c < maze.width(); ++c) {
        if (!maze.passable(r, c)) continue;
        const int drs[] = {-1, 0, 1, 0}, dcs[] = {0, 1, 0, -1};
        for (int k = 0; k < 4; ++k) {
          const int rr = r + drs[k], cc = c + dcs[k];
          if (!maze.passable(rr, cc)) continue;
          int& mine = ref[static_cast<std::size_t>(r * maze.width() + c)];
          const int other = ref[static_cast<std::size_t>(rr * maze.width() + cc)] + 1;
          if (other < mine) mine = other, changed = true;
        }
      }
  }
  int max_d = 0, max_ref = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    const int expect = ref[static_cast<std::size_t>(maze.cell_of(v))];
    CHECK(d[v] == expect);
    max_d = std::max(max_d, d[v]);
    max_ref = std::max(max_ref, expect);
  }
  CHECK(max_d == max_ref);
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex u : g.neighbors(v)) CHECK(std::abs(d[u] - d[v]) <= 1);
}

TEST_CASE("shortest_path") {
  GridGraph row(test::open_grid(1, 5));
  CHECK(*shortest_path(row, 3, 3) == Path{3});
  CHECK(*shortest_path(row, 0, 4) == Path{0, 1, 2, 3, 4});

  // enumerate all shortest corner-to-corner paths in an open 3x3 grid
  GridGraph g(test::open_grid(3, 3));
  const DistanceMap to = bfs_distances(g, 8);
  std::vector<Path> all;
  std::function<void(Path&)> walk = [&](Path& p) {
    if (p.back() == 8) {
      all.push_back(p);
      return;
    }
    for (Vertex u : g.neighbors(p.back()))
      if (to[u] == to[p.back()] - 1) {
        p.push_back(u);
        walk(p);
        p.pop_back();
      }
  };
  Path start{0};
  walk(start);
  CHECK(all.size() == 6);
  const Path got = *shortest_path(g, 0, 8);
  CHECK(got.size() == 5);
  CHECK(got == *std::min_element(all.begin(), all.end()));
  CHECK(got == Path{0, 1, 2, 5, 8});

  GridGraph split(test::grid({".@."}));
  CHECK_FALSE(shortest_path(split, 0, 1).has_value());
}

TEST_CASE("shortest_path length matches BFS on random grids") {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    GridMap m = test::random_grid(12, 12, 0.25, rng);
    GridGraph g(m);
    const Vertex a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.size())));
    const Vertex b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.size())));
    DistanceMap d = bfs_distances(g, a);
    auto p = shortest_path(g, a, b);
    CHECK(p.has_value() == d.reachable(b));
    if (p) {
      CHECK(static_cast<int>(p->size()) - 1 == d[b]);
      for (std::size_t i = 0; i + 1 < p->size(); ++i) CHECK(g.adjacent((*p)[i], (*p)[i + 1]));
    }
  }
}
