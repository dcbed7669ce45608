#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cga {

using Vertex = int;

// Thrown by the map/scenario readers. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Rectangular 4-connected grid. Vertices are the passable cells numbered in
// row-major order, so vertex ids are dense in [0, num_passable()).
class GridMap {
 public:
  GridMap() = default;
  GridMap(int width, int height, std::vector<bool> passable, std::string name = {});

  int width() const { return width_; }
  int height() const { return height_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool passable(int row, int col) const {
    return row >= 0 && col >= 0 && row < height_ && col < width_ &&
           passable_[static_cast<std::size_t>(row * width_ + col)];
  }
  const std::vector<bool>& cells() const { return passable_; }
  int num_passable() const { return static_cast<int>(vertex_to_cell_.size()); }

  // -1 for blocked or out-of-range cells.
  Vertex vertex_at(int row, int col) const;
  int cell_of(Vertex v) const { return vertex_to_cell_[static_cast<std::size_t>(v)]; }
  int row_of(Vertex v) const { return cell_of(v) / width_; }
  int col_of(Vertex v) const { return cell_of(v) % width_; }

  bool operator==(const GridMap& other) const {
    return width_ == other.width_ && height_ == other.height_ && passable_ == other.passable_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<bool> passable_;
  std::vector<int> cell_to_vertex_;
  std::vector<int> vertex_to_cell_;
  std::string name_;
};

// A MAPF problem on a grid. The constructor enforces the invariants: distinct
// starts, distinct goals, all on passable cells of one connected component.
class Instance {
 public:
  Instance(GridMap map, std::vector<Vertex> starts, std::vector<Vertex> goals);

  const GridMap& map() const { return map_; }
  int num_agents() const { return static_cast<int>(starts_.size()); }
  const std::vector<Vertex>& starts() const { return starts_; }
  const std::vector<Vertex>& goals() const { return goals_; }

 private:
  GridMap map_;
  std::vector<Vertex> starts_;
  std::vector<Vertex> goals_;
};

GridMap parse_map(std::string_view text);
std::string serialize_map(const GridMap& map);
GridMap load_map(const std::filesystem::path& file);

Instance parse_scen(std::string_view text, const GridMap& map, int n);
Instance load_scen(const std::filesystem::path& file, const GridMap& map, int n);

// Samples n distinct starts and, independently, n distinct goals from the
// largest connected component. Pure in (map, n, seed).
Instance generate_instance(const GridMap& map, int n, std::uint64_t seed);

// Connected components of the passable cells; result[v] is the component id
// of vertex v, ids numbered by first appearance in vertex order.
std::vector<int> component_labels(const GridMap& map);

std::string read_text_file(const std::filesystem::path& file);

}  // namespace cga
