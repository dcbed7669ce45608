#include "cga_mapf/solution.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

namespace cga {

using nlohmann::ordered_json;

int path_cost(const Path& path) {
  if (path.empty()) return 0;
  const Vertex last = path.back();
  for (int t = static_cast<int>(path.size()) - 1; t >= 0; --t)
    if (path[static_cast<std::size_t>(t)] != last) return t + 1;
  return 0;
}

int soc(const Solution& solution) {
  int total = 0;
  for (const auto& p : solution.paths) total += path_cost(p);
  return total;
}

int makespan(const Solution& solution) {
  int worst = 0;
  for (const auto& p : solution.paths) worst = std::max(worst, path_cost(p));
  return worst;
}

void pad_paths(std::vector<Path>& paths) {
  std::size_t len = 0;
  for (const auto& p : paths) len = std::max(len, p.size());
  for (auto& p : paths)
    if (!p.empty()) p.resize(len, p.back());
}

void trim_paths(std::vector<Path>& paths) {
  int horizon = 0;
  for (const auto& p : paths) horizon = std::max(horizon, path_cost(p));
  for (auto& p : paths)
    if (p.size() > static_cast<std::size_t>(horizon) + 1) p.resize(static_cast<std::size_t>(horizon) + 1);
  pad_paths(paths);
}

const char* to_string(ConflictKind kind) {
  return kind == ConflictKind::Vertex ? "vertex" : "swapping";
}

const char* to_string(StructuralKind kind) {
  switch (kind) {
    case StructuralKind::Length: return "length";
    case StructuralKind::BadVertex: return "bad_vertex";
    case StructuralKind::IllegalMove: return "illegal_move";
    case StructuralKind::WrongStart: return "wrong_start";
    case StructuralKind::WrongGoal: return "wrong_goal";
  }
  return "?";
}

namespace {

ConflictKind conflict_kind_from(const std::string& s) {
  if (s == "vertex") return ConflictKind::Vertex;
  if (s == "swapping") return ConflictKind::Swapping;
  throw std::runtime_error("unknown conflict kind '" + s + "'");
}

StructuralKind structural_kind_from(const std::string& s) {
  for (auto k : {StructuralKind::Length, StructuralKind::BadVertex, StructuralKind::IllegalMove,
                 StructuralKind::WrongStart, StructuralKind::WrongGoal})
    if (s == to_string(k)) return k;
  throw std::runtime_error("unknown structural error '" + s + "'");
}

ordered_json report_to_json(const ConflictReport& report) {
  ordered_json conflicts = ordered_json::array();
  for (const auto& c : report.conflicts) {
    ordered_json j;
    j["kind"] = to_string(c.kind);
    j["agents"] = {c.a, c.b};
    j["time"] = c.time;
    if (c.kind == ConflictKind::Vertex)
      j["vertex"] = c.vertex;
    else
      j["edge"] = {c.from, c.to};
    conflicts.push_back(std::move(j));
  }
  ordered_json errors = ordered_json::array();
  for (const auto& e : report.errors)
    errors.push_back({{"kind", to_string(e.kind)}, {"agent", e.agent}, {"time", e.time}});
  return {{"conflicts", std::move(conflicts)}, {"errors", std::move(errors)}};
}

ConflictReport report_from_json(const nlohmann::json& j) {
  ConflictReport report;
  for (const auto& c : j.at("conflicts")) {
    Conflict conflict;
    conflict.kind = conflict_kind_from(c.at("kind").get<std::string>());
    conflict.a = c.at("agents").at(0).get<int>();
    conflict.b = c.at("agents").at(1).get<int>();
    conflict.time = c.at("time").get<int>();
    if (conflict.kind == ConflictKind::Vertex) {
      conflict.vertex = c.at("vertex").get<int>();
    } else {
      conflict.from = c.at("edge").at(0).get<int>();
      conflict.to = c.at("edge").at(1).get<int>();
    }
    report.conflicts.push_back(conflict);
  }
  for (const auto& e : j.at("errors"))
    report.errors.push_back({structural_kind_from(e.at("kind").get<std::string>()),
                             e.at("agent").get<int>(), e.at("time").get<int>()});
  return report;
}

}  // namespace

std::string write_solution(const Solution& solution) {
  ordered_json doc;
  doc["map"] = solution.map;
  doc["n"] = solution.num_agents();
  doc["algorithm"] = solution.algorithm;
  doc["seed"] = solution.seed;
  // one compact line per agent keeps large solutions diffable
  doc["paths"] = ordered_json::array();
  for (const auto& p : solution.paths) doc["paths"].push_back(p);
  if (solution.solved) {
    doc["soc"] = soc(solution);
    doc["makespan"] = makespan(solution);
  } else {
    doc["soc"] = nullptr;
    doc["makespan"] = nullptr;
  }
  doc["runtime_seconds"] = solution.runtime_seconds;
  doc["solved"] = solution.solved;
  if (solution.validation) doc["validation"] = report_to_json(*solution.validation);

  std::string out = "{\n";
  bool first = true;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + ordered_json(it.key()).dump() + ": ";
    if (it.key() == "paths") {
      out += "[";
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        out += i == 0 ? "\n    " : ",\n    ";
        out += it.value()[i].dump();
      }
      out += it.value().empty() ? "]" : "\n  ]";
    } else {
      out += it.value().dump();
    }
  }
  out += "\n}\n";
  return out;
}

Solution read_solution(const std::string& text) {
  try {
    auto doc = nlohmann::json::parse(text);
    Solution s;
    s.map = doc.at("map").get<std::string>();
    s.algorithm = doc.at("algorithm").get<std::string>();
    s.seed = doc.at("seed").get<std::uint64_t>();
    s.paths = doc.at("paths").get<std::vector<Path>>();
    s.runtime_seconds = doc.at("runtime_seconds").get<double>();
    s.solved = doc.at("solved").get<bool>();
    if (doc.at("n").get<int>() != s.num_agents())
      throw std::runtime_error("field n does not match the number of paths");
    if (doc.contains("validation")) s.validation = report_from_json(doc["validation"]);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed solution document: ") + e.what());
  }
}

}  // namespace cga
