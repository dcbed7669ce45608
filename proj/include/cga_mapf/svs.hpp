#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cga_mapf/graph.hpp"

namespace cga {

// Per-vertex separating-vertex flags: v is an SV iff removing it leaves more
// connected components than the graph had.
class SeparatingVertexSet {
 public:
  SeparatingVertexSet() = default;
  explicit SeparatingVertexSet(std::vector<char> flags) : flags_(std::move(flags)) {}

  bool is_sv(Vertex v) const { return flags_[static_cast<std::size_t>(v)] != 0; }
  int size() const { return static_cast<int>(flags_.size()); }
  int count() const;
  std::vector<Vertex> members() const;
  const std::vector<char>& flags() const { return flags_; }

  bool operator==(const SeparatingVertexSet&) const = default;

 private:
  std::vector<char> flags_;
};

// Articulation points via iterative DFS lowlink, O(|V| + |E|).
SeparatingVertexSet compute_svs(const GridGraph& graph);

// Direct check of the definition: count components with and without each
// vertex. O(|V| (|V| + |E|)); used as a test oracle.
SeparatingVertexSet svs_oracle(const GridGraph& graph);

// Sidecar cache: {map_name, width, height, sv_flags} with sv_flags a '0'/'1'
// string over vertices (passable cells in row-major order).
std::string svs_to_json(const SeparatingVertexSet& svs, const std::string& map_name, int width,
                        int height);
SeparatingVertexSet svs_from_json(const std::string& text, const GridGraph& graph);
void save_svs(const std::filesystem::path& file, const SeparatingVertexSet& svs,
              const std::string& map_name, const GridGraph& graph);
SeparatingVertexSet load_svs(const std::filesystem::path& file, const GridGraph& graph);

}  // namespace cga
