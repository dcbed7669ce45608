#pragma once

#include <string>
#include <vector>

#include "cga_mapf/grid_map.hpp"
#include "cga_mapf/rng.hpp"

namespace cga::test {

// Builds a map from rows of '.' and '@'.
inline GridMap grid(const std::vector<std::string>& rows, std::string name = "fixture") {
  std::string text = "type octile\nheight " + std::to_string(rows.size()) + "\nwidth " +
                     std::to_string(rows.front().size()) + "\nmap\n";
  for (const auto& r : rows) text += r + "\n";
  GridMap map = parse_map(text);
  map.set_name(std::move(name));
  return map;
}

inline GridMap open_grid(int height, int width) {
  return grid(std::vector<std::string>(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), '.')));
}

// Uniform obstacles with the given density; may be disconnected.
inline GridMap random_grid(int height, int width, double density, Rng& rng) {
  std::vector<bool> cells(static_cast<std::size_t>(height * width));
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = rng.unit() >= density;
  cells[0] = true;
  return GridMap(width, height, std::move(cells), "random");
}

}  // namespace cga::test
