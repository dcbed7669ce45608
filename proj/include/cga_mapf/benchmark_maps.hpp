#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cga_mapf/grid_map.hpp"

namespace cga {

// The six 32x32 evaluation grids: empty-32-32, random-32-32-10,
// random-32-32-20, room-32-32-4, maze-32-32-2, maze-32-32-4.
const std::vector<std::string>& benchmark_map_names();

// Deterministic 32x32 grid with the named layout. Random layouts are seeded
// from the name, so every build produces the same cells.
//   empty-*      all open
//   random-*-P   P percent of the cells blocked, chosen uniformly
//   room-*       3x3 rooms behind one-cell walls, doors on a random spanning
//                tree of the rooms plus a few extra doors
//   maze-*-W     perfect maze with corridors W cells wide and one-cell walls
GridMap make_benchmark_map(std::string_view name);

}  // namespace cga
