#include "cga_mapf/svs.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace cga {

int SeparatingVertexSet::count() const {
  return static_cast<int>(std::count(flags_.begin(), flags_.end(), 1));
}

std::vector<Vertex> SeparatingVertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < flags_.size(); ++v)
    if (flags_[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

SeparatingVertexSet compute_svs(const GridGraph& graph) {
  const int n = graph.size();
  std::vector<char> flags(static_cast<std::size_t>(n), 0);
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next_edge;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = graph.neighbors(f.v);
      if (f.next_edge < nb.size()) {
        Vertex u = nb[f.next_edge++];
        if (u == f.parent) continue;  // grid graphs have no parallel edges
        if (disc[u] >= 0) {
          low[f.v] = std::min(low[f.v], disc[u]);
        } else {
          disc[u] = low[u] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({u, f.v, 0});
        }
        continue;
      }
      const Vertex v = f.v, parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (parent != root && low[v] >= disc[parent]) flags[parent] = 1;
    }
    if (root_children > 1) flags[root] = 1;
  }
  return SeparatingVertexSet(std::move(flags));
}

namespace {

int count_components(const GridGraph& graph, Vertex removed) {
  const int n = graph.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  int components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (s == removed || seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : graph.neighbors(v)) {
        if (u == removed || seen[u]) continue;
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return components;
}

}  // namespace

SeparatingVertexSet svs_oracle(const GridGraph& graph) {
  const int base = count_components(graph, -1);
  std::vector<char> flags(static_cast<std::size_t>(graph.size()), 0);
  for (Vertex v = 0; v < graph.size(); ++v)
    flags[v] = count_components(graph, v) > base ? 1 : 0;
  return SeparatingVertexSet(std::move(flags));
}

std::string svs_to_json(const SeparatingVertexSet& svs, const std::string& map_name, int width,
                        int height) {
  std::string bits;
  bits.reserve(svs.flags().size());
  for (char f : svs.flags()) bits.push_back(f ? '1' : '0');
  nlohmann::ordered_json doc;
  doc["map_name"] = map_name;
  doc["width"] = width;
  doc["height"] = height;
  doc["sv_flags"] = bits;
  return doc.dump(2) + "\n";
}

SeparatingVertexSet svs_from_json(const std::string& text, const GridGraph& graph) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed SVS cache: ") + e.what());
  }
  if (!doc.contains("sv_flags") || !doc.contains("width") || !doc.contains("height"))
    throw std::runtime_error("malformed SVS cache: missing fields");
  if (doc["width"].get<int>() != graph.width() || doc["height"].get<int>() != graph.height())
    throw std::runtime_error("SVS cache dimensions do not match the map");
  const auto bits = doc["sv_flags"].get<std::string>();
  if (bits.size() != static_cast<std::size_t>(graph.size()))
    throw std::runtime_error("SVS cache has " + std::to_string(bits.size()) + " flags, map has " +
                             std::to_string(graph.size()) + " passable cells");
  std::vector<char> flags(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw std::runtime_error("SVS cache: bad flag character");
    flags[i] = bits[i] == '1' ? 1 : 0;
  }
  return SeparatingVertexSet(std::move(flags));
}

void save_svs(const std::filesystem::path& file, const SeparatingVertexSet& svs,
              const std::string& map_name, const GridGraph& graph) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << svs_to_json(svs, map_name, graph.width(), graph.height());
}

SeparatingVertexSet load_svs(const std::filesystem::path& file, const GridGraph& graph) {
  return svs_from_json(read_text_file(file), graph);
}

}  // namespace cga
