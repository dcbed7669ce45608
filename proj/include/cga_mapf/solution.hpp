#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cga_mapf/graph.hpp"

namespace cga {

enum class ConflictKind { Vertex, Swapping };

// Two agents at `vertex` at `time` (Vertex), or agent a moving from->to while
// agent b moves to->from between `time` and `time + 1` (Swapping). a < b.
struct Conflict {
  ConflictKind kind = ConflictKind::Vertex;
  int a = 0;
  int b = 0;
  int time = 0;
  Vertex vertex = -1;
  Vertex from = -1;
  Vertex to = -1;

  auto operator<=>(const Conflict&) const = default;
};

enum class StructuralKind { Length, BadVertex, IllegalMove, WrongStart, WrongGoal };

struct StructuralError {
  StructuralKind kind = StructuralKind::Length;
  int agent = 0;
  int time = 0;

  auto operator<=>(const StructuralError&) const = default;
};

struct ConflictReport {
  std::vector<Conflict> conflicts;
  std::vector<StructuralError> errors;

  bool ok() const { return conflicts.empty() && errors.empty(); }
  bool operator==(const ConflictReport&) const = default;
};

// Timed paths for every agent: paths[i][t] is agent i's vertex at time t.
struct Solution {
  std::string map;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::vector<Path> paths;
  double runtime_seconds = 0.0;
  bool solved = false;
  std::optional<ConflictReport> validation;

  int num_agents() const { return static_cast<int>(paths.size()); }
  bool operator==(const Solution&) const = default;
};

// Time after which the path stays on its final vertex for good; 0 if it
// never leaves it. Waiting at the goal at the end is free.
int path_cost(const Path& path);
int soc(const Solution& solution);
int makespan(const Solution& solution);

// Extends every path with waits at its last vertex to a common length.
void pad_paths(std::vector<Path>& paths);
// Drops trailing time steps at which no agent moves anymore.
void trim_paths(std::vector<Path>& paths);

std::string write_solution(const Solution& solution);
Solution read_solution(const std::string& text);

const char* to_string(ConflictKind kind);
const char* to_string(StructuralKind kind);

}  // namespace cga
