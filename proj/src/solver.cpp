#include "cga_mapf/solver.hpp"

#include "cga_mapf/cga.hpp"
#include "cga_mapf/pibt.hpp"
#include "cga_mapf/prp.hpp"

namespace cga {

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "cga") return Algorithm::Cga;
  if (name == "prp") return Algorithm::Prp;
  if (name == "pibt") return Algorithm::Pibt;
  return std::nullopt;
}

const char* to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::Cga: return "cga";
    case Algorithm::Prp: return "prp";
    case Algorithm::Pibt: return "pibt";
  }
  return "?";
}

SolveResult run_solver(Algorithm algo, const Instance& instance, const GridGraph& graph,
                       const SeparatingVertexSet& svs, const Limits& limits, std::uint64_t seed) {
  switch (algo) {
    case Algorithm::Cga: return solve_cga(instance, graph, svs, limits);
    case Algorithm::Prp: return solve_prp(instance, graph, limits, seed);
    case Algorithm::Pibt: return solve_pibt(instance, graph, limits, seed);
  }
  return {};
}

Solution solve_to_solution(Algorithm algo, const Instance& instance, const GridGraph& graph,
                           const SeparatingVertexSet& svs, const Limits& limits, std::uint64_t seed) {
  SolveResult r = run_solver(algo, instance, graph, svs, limits, seed);
  Solution s;
  s.map = instance.map().name();
  s.algorithm = to_string(algo);
  s.seed = seed;
  s.paths = std::move(r.paths);
  s.runtime_seconds = r.runtime_s;
  s.solved = r.solved();
  return s;
}

}  // namespace cga
