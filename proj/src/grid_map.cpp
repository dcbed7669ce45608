#include "cga_mapf/grid_map.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "cga_mapf/rng.hpp"

namespace cga {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

GridMap::GridMap(int width, int height, std::vector<bool> passable, std::string name)
    : width_(width), height_(height), passable_(std::move(passable)), name_(std::move(name)) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("map dimensions must be positive");
  if (passable_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("cell count does not match width x height");
  cell_to_vertex_.assign(passable_.size(), -1);
  for (std::size_t c = 0; c < passable_.size(); ++c) {
    if (!passable_[c]) continue;
    cell_to_vertex_[c] = static_cast<int>(vertex_to_cell_.size());
    vertex_to_cell_.push_back(static_cast<int>(c));
  }
}

Vertex GridMap::vertex_at(int row, int col) const {
  if (row < 0 || col < 0 || row >= height_ || col >= width_) return -1;
  return cell_to_vertex_[static_cast<std::size_t>(row * width_ + col)];
}

std::vector<int> component_labels(const GridMap& map) {
  const int n = map.num_passable();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<Vertex> stack;
  constexpr int kDr[4] = {-1, 0, 1, 0};
  constexpr int kDc[4] = {0, 1, 0, -1};
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (int d = 0; d < 4; ++d) {
        Vertex u = map.vertex_at(map.row_of(v) + kDr[d], map.col_of(v) + kDc[d]);
        if (u >= 0 && label[u] < 0) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return label;
}

Instance::Instance(GridMap map, std::vector<Vertex> starts, std::vector<Vertex> goals)
    : map_(std::move(map)), starts_(std::move(starts)), goals_(std::move(goals)) {
  if (starts_.size() != goals_.size())
    throw std::invalid_argument("starts and goals differ in length");
  const int nv = map_.num_passable();
  auto check_distinct = [nv](const std::vector<Vertex>& vs, const char* what) {
    std::vector<bool> seen(static_cast<std::size_t>(nv), false);
    for (Vertex v : vs) {
      if (v < 0 || v >= nv)
        throw std::invalid_argument(std::string(what) + " vertex " + std::to_string(v) +
                                    " is not a passable cell");
      if (seen[v])
        throw std::invalid_argument(std::string("duplicate ") + what + " vertex " + std::to_string(v));
      seen[v] = true;
    }
  };
  check_distinct(starts_, "start");
  check_distinct(goals_, "goal");
  if (starts_.empty()) return;
  auto label = component_labels(map_);
  const int comp = label[starts_.front()];
  for (std::size_t i = 0; i < starts_.size(); ++i) {
    if (label[starts_[i]] != comp || label[goals_[i]] != comp)
      throw std::invalid_argument("agent " + std::to_string(i) +
                                  " has start or goal outside the common connected component");
  }
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

int parse_positive(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size() || v <= 0) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a positive integer, got '" + token + "'");
  }
}

int parse_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
}

}  // namespace

GridMap parse_map(std::string_view text) {
  auto lines = split_lines(text);
  int height = -1;
  int width = -1;
  std::size_t i = 0;
  bool saw_type = false;
  for (; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    std::string key, value;
    in >> key;
    const int lineno = static_cast<int>(i) + 1;
    if (key == "map") break;
    in >> value;
    if (key == "type") {
      saw_type = true;
    } else if (key == "height") {
      height = parse_positive(value, lineno);
    } else if (key == "width") {
      width = parse_positive(value, lineno);
    } else {
      throw ParseError(lineno, "unexpected header line '" + lines[i] + "'");
    }
  }
  if (i == lines.size()) throw ParseError(static_cast<int>(i), "missing 'map' header line");
  if (!saw_type) throw ParseError(1, "missing 'type' header line");
  if (height < 0 || width < 0) throw ParseError(static_cast<int>(i) + 1, "missing height or width");
  ++i;
  if (lines.size() - i != static_cast<std::size_t>(height))
    throw ParseError(static_cast<int>(lines.size()),
                     "expected " + std::to_string(height) + " map rows, found " +
                         std::to_string(lines.size() - i));
  std::vector<bool> cells;
  cells.reserve(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (int r = 0; r < height; ++r, ++i) {
    const std::string& row = lines[i];
    const int lineno = static_cast<int>(i) + 1;
    if (row.size() != static_cast<std::size_t>(width))
      throw ParseError(lineno, "row " + std::to_string(r) + " has length " +
                                   std::to_string(row.size()) + ", expected " + std::to_string(width));
    for (char ch : row) {
      switch (ch) {
        case '.':
        case 'G':
        case 'S':
          cells.push_back(true);
          break;
        case '@':
        case 'O':
        case 'T':
        case 'W':
          cells.push_back(false);
          break;
        default:
          throw ParseError(lineno, std::string("unknown cell character '") + ch + "'");
      }
    }
  }
  return GridMap(width, height, std::move(cells));
}

std::string serialize_map(const GridMap& map) {
  std::string out = "type octile\nheight " + std::to_string(map.height()) + "\nwidth " +
                    std::to_string(map.width()) + "\nmap\n";
  for (int r = 0; r < map.height(); ++r) {
    for (int c = 0; c < map.width(); ++c) out.push_back(map.passable(r, c) ? '.' : '@');
    out.push_back('\n');
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GridMap load_map(const std::filesystem::path& file) {
  GridMap map = parse_map(read_text_file(file));
  map.set_name(file.stem().string());
  return map;
}

Instance parse_scen(std::string_view text, const GridMap& map, int n) {
  if (n <= 0) throw ParseError(0, "no agents requested");
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty scenario");
  {
    std::istringstream in(lines[0]);
    std::string key, value;
    in >> key >> value;
    if (key != "version" || (value != "1" && value != "1.0"))
      throw ParseError(1, "expected 'version 1' header");
  }
  std::vector<Vertex> starts, goals;
  for (std::size_t i = 1; i < lines.size() && static_cast<int>(starts.size()) < n; ++i) {
    if (lines[i].empty()) continue;
    const int lineno = static_cast<int>(i) + 1;
    std::vector<std::string> fields;
    std::istringstream in(lines[i]);
    for (std::string f; in >> f;) fields.push_back(f);
    if (fields.size() != 9)
      throw ParseError(lineno, "expected 9 fields, found " + std::to_string(fields.size()));
    // bucket (0), map name (1) and optimal distance (8) are not used
    const int sx = parse_int(fields[4], lineno), sy = parse_int(fields[5], lineno);
    const int gx = parse_int(fields[6], lineno), gy = parse_int(fields[7], lineno);
    const Vertex s = map.vertex_at(sy, sx);
    const Vertex g = map.vertex_at(gy, gx);
    if (s < 0) throw ParseError(lineno, "start is out of bounds or blocked");
    if (g < 0) throw ParseError(lineno, "goal is out of bounds or blocked");
    starts.push_back(s);
    goals.push_back(g);
  }
  if (static_cast<int>(starts.size()) < n)
    throw ParseError(0, "requested " + std::to_string(n) + " agents but the scenario has " +
                            std::to_string(starts.size()) + " records");
  return Instance(map, std::move(starts), std::move(goals));
}

Instance load_scen(const std::filesystem::path& file, const GridMap& map, int n) {
  return parse_scen(read_text_file(file), map, n);
}

Instance generate_instance(const GridMap& map, int n, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("no agents requested");
  auto label = component_labels(map);
  int num_components = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> sizes(static_cast<std::size_t>(num_components), 0);
  for (int l : label) ++sizes[l];
  // ties go to the component holding the lowest vertex id
  int best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < map.num_passable(); ++v)
    if (label[v] == best) pool.push_back(v);
  if (n > static_cast<int>(pool.size()))
    throw std::invalid_argument("requested " + std::to_string(n) +
                                " agents but the largest component has " +
                                std::to_string(pool.size()) + " cells");
  Rng rng(seed);
  auto sample = [&]() {
    std::vector<Vertex> items = pool;
    // partial Fisher-Yates: the first n slots are a uniform sample
    for (int i = 0; i < n; ++i) {
      std::size_t j = static_cast<std::size_t>(i) + rng.below(items.size() - static_cast<std::size_t>(i));
      std::swap(items[static_cast<std::size_t>(i)], items[j]);
    }
    items.resize(static_cast<std::size_t>(n));
    return items;
  };
  auto starts = sample();
  auto goals = sample();
  return Instance(map, std::move(starts), std::move(goals));
}

}  // namespace cga
