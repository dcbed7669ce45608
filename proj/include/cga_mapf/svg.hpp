#pragma once

#include <filesystem>
#include <vector>

#include "cga_mapf/metrics.hpp"
#include "cga_mapf/solution.hpp"
#include "cga_mapf/svs.hpp"

namespace cga {

// One chart per (map, metric): success rate vs n, mean runtime over solved
// runs vs n, and each algorithm's makespans sorted ascending. One polyline per
// algorithm. Files are named <map>_<sr|runtime|makespan>.svg; returns them.
std::vector<std::filesystem::path> write_plots(const std::vector<RunRecord>& records,
                                               const std::filesystem::path& out_dir);

// Draws a single time step: blocked cells dark, SV cells shaded, goals as
// squares, agents as numbered disks.
std::string render_frame(const GridMap& map, const SeparatingVertexSet& svs, const Solution& solution,
                         std::size_t time);

// One frame_NNNN.svg per time step (makespan + 1 frames). Throws
// std::invalid_argument when the solution does not fit the map.
std::vector<std::filesystem::path> render_frames(const GridMap& map, const SeparatingVertexSet& svs,
                                                 const Solution& solution,
                                                 const std::filesystem::path& out_dir);

}  // namespace cga
