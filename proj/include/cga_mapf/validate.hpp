#pragma once

#include "cga_mapf/grid_map.hpp"
#include "cga_mapf/solution.hpp"

namespace cga {

// Reports every vertex conflict (one entry per colliding pair), every swapping
// conflict, and structural problems: paths of unequal length, vertex ids out
// of range, and moves between non-adjacent vertices. Paths of unequal length
// are wait-padded before the conflict scan. Following another agent into a
// vertex it vacates in the same step is legal.
ConflictReport validate(const Solution& solution, const GridGraph& graph);

// As above, plus: each path starts at the instance start, and, when the
// solution claims to be solved, ends at the instance goal.
ConflictReport validate(const Solution& solution, const GridGraph& graph, const Instance& instance);

}  // namespace cga
