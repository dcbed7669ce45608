#include "cga_mapf/benchmark_maps.hpp"

#include <numeric>
#include <stdexcept>

#include "cga_mapf/rng.hpp"

namespace cga {

namespace {

constexpr int kSide = 32;

struct Span {
  int begin;
  int end;  // exclusive
};

GridMap finish(std::vector<bool> cells, std::string_view name) {
  return GridMap(kSide, kSide, std::move(cells), std::string(name));
}

GridMap random_map(std::string_view name, int percent) {
  std::vector<int> cells(kSide * kSide);
  std::iota(cells.begin(), cells.end(), 0);
  Rng rng(stable_hash(name));
  rng.shuffle(cells);
  const int blocked = (kSide * kSide * percent + 50) / 100;
  std::vector<bool> open(kSide * kSide, true);
  for (int i = 0; i < blocked; ++i) open[static_cast<std::size_t>(cells[static_cast<std::size_t>(i)])] = false;
  return finish(std::move(open), name);
}

// Random spanning tree over a rows x cols lattice of rooms; returns the
// opened walls as (cell, neighbor) pairs with neighbor right of or below cell.
std::vector<std::pair<int, int>> spanning_tree(int rows, int cols, Rng& rng) {
  std::vector<std::pair<int, int>> walls;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) walls.emplace_back(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) walls.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  rng.shuffle(walls);
  std::vector<int> parent(static_cast<std::size_t>(rows * cols));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<std::pair<int, int>> tree;
  for (auto [a, b] : walls) {
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    parent[static_cast<std::size_t>(ra)] = rb;
    tree.emplace_back(a, b);
  }
  return tree;
}

// Lays out blocks along one axis: cells of `width`, one wall between them,
// the last block stretched to `last_width`.
std::vector<Span> blocks(int count, int width, int last_width) {
  std::vector<Span> out;
  int pos = 0;
  for (int i = 0; i < count; ++i) {
    const int w = i + 1 == count ? last_width : width;
    out.push_back({pos, pos + w});
    pos += w + 1;
  }
  return out;
}

GridMap room_map(std::string_view name) {
  const auto spans = blocks(8, 3, 4);  // 7 x (3 + wall) + 4 = 32
  std::vector<bool> open(kSide * kSide, false);
  auto set = [&open](int r, int c) { open[static_cast<std::size_t>(r * kSide + c)] = true; };
  for (const auto& rs : spans)
    for (const auto& cs : spans)
      for (int r = rs.begin; r < rs.end; ++r)
        for (int c = cs.begin; c < cs.end; ++c) set(r, c);
  Rng rng(stable_hash(name));
  auto doors = spanning_tree(8, 8, rng);
  // extra doors close some loops
  for (int a = 0; a < 64; ++a) {
    if (a % 8 + 1 < 8 && rng.below(100) < 12) doors.emplace_back(a, a + 1);
    if (a / 8 + 1 < 8 && rng.below(100) < 12) doors.emplace_back(a, a + 8);
  }
  for (auto [a, b] : doors) {
    const Span& ra = spans[static_cast<std::size_t>(a / 8)];
    const Span& ca = spans[static_cast<std::size_t>(a % 8)];
    if (b == a + 1) {
      const int r = ra.begin + static_cast<int>(rng.below(static_cast<std::uint64_t>(ra.end - ra.begin)));
      set(r, ca.end);
    } else {
      const int c = ca.begin + static_cast<int>(rng.below(static_cast<std::uint64_t>(ca.end - ca.begin)));
      set(ra.end, c);
    }
  }
  return finish(std::move(open), name);
}

GridMap maze_map(std::string_view name, int corridor) {
  const int count = (kSide + 1) / (corridor + 1);
  const int used = count * (corridor + 1) - 1;
  // leftover rows/columns widen the last corridor by at most one cell; the
  // rest stays blocked along the far border
  const int last = corridor + std::min(1, kSide - used);
  const auto spans = blocks(count, corridor, last);
  std::vector<bool> open(kSide * kSide, false);
  auto fill = [&open](Span rows, Span cols) {
    for (int r = rows.begin; r < rows.end; ++r)
      for (int c = cols.begin; c < cols.end; ++c) open[static_cast<std::size_t>(r * kSide + c)] = true;
  };
  for (const auto& rs : spans)
    for (const auto& cs : spans) fill(rs, cs);
  Rng rng(stable_hash(name));
  for (auto [a, b] : spanning_tree(count, count, rng)) {
    const Span& ra = spans[static_cast<std::size_t>(a / count)];
    const Span& ca = spans[static_cast<std::size_t>(a % count)];
    if (b == a + 1)
      fill(ra, {ca.end, ca.end + 1});
    else
      fill({ra.end, ra.end + 1}, ca);
  }
  return finish(std::move(open), name);
}

}  // namespace

const std::vector<std::string>& benchmark_map_names() {
  static const std::vector<std::string> names = {"empty-32-32",  "random-32-32-10", "random-32-32-20",
                                                 "room-32-32-4", "maze-32-32-2",    "maze-32-32-4"};
  return names;
}

GridMap make_benchmark_map(std::string_view name) {
  if (name == "empty-32-32") return finish(std::vector<bool>(kSide * kSide, true), name);
  if (name == "random-32-32-10") return random_map(name, 10);
  if (name == "random-32-32-20") return random_map(name, 20);
  if (name == "room-32-32-4") return room_map(name);
  if (name == "maze-32-32-2") return maze_map(name, 2);
  if (name == "maze-32-32-4") return maze_map(name, 4);
  throw std::invalid_argument("unknown benchmark map '" + std::string(name) + "'");
}

}  // namespace cga
