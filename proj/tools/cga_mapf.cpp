#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cga_mapf/bench.hpp"
#include "cga_mapf/benchmark_maps.hpp"
#include "cga_mapf/svg.hpp"
#include "cga_mapf/validate.hpp"

namespace fs = std::filesystem;
using namespace cga;

namespace {

// exit codes
constexpr int kOk = 0, kUsage = 1, kIo = 2, kUnsolved = 3;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

fs::path default_svs_path(const fs::path& map) { return fs::path(map.string() + ".svs.json"); }

void write_text(const fs::path& file, const std::string& text) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << text;
}

SeparatingVertexSet svs_for(const fs::path& map_file, const std::string& explicit_cache, const GridGraph& graph) {
  const fs::path cache = explicit_cache.empty() ? default_svs_path(map_file) : fs::path(explicit_cache);
  if (fs::exists(cache)) {
    try {
      return load_svs(cache, graph);
    } catch (const std::exception& e) {
      std::cerr << "ignoring stale SVS cache " << cache << ": " << e.what() << "\n";
    }
  }
  return compute_svs(graph);
}

int cmd_svs(const std::string& map_file, std::string out) {
  GridMap map = load_map(map_file);
  GridGraph graph(map);
  SeparatingVertexSet svs = compute_svs(graph);
  if (out.empty()) out = default_svs_path(map_file).string();
  save_svs(out, svs, map.name(), graph);
  std::cout << map.name() << ": " << svs.count() << " separating vertices of " << graph.size()
            << " -> " << out << "\n";
  return kOk;
}

struct SolveArgs {
  std::string map, scen, out, svs;
  std::uint64_t seed = 0;
  int agents = 0;
  std::string algo;
  double time_limit = 60.0;
  bool validate = false;
  long step_cap = 0;
};

int cmd_solve(const SolveArgs& a) {
  auto algo = parse_algorithm(a.algo);
  if (!algo) {
    std::cerr << "unknown algorithm: " << a.algo << "\n";
    return kUsage;
  }
  if (!(a.time_limit > 0) || a.agents <= 0) {
    std::cerr << "--agents and --time-limit must be positive\n";
    return kUsage;
  }
  GridMap map = load_map(a.map);
  const Instance inst = a.scen.empty() ? generate_instance(map, a.agents, a.seed) : load_scen(a.scen, map, a.agents);
  GridGraph graph(map);
  const SeparatingVertexSet svs = svs_for(a.map, a.svs, graph);
  Limits limits{a.time_limit, {}};
  if (a.step_cap > 0) limits.step_cap = a.step_cap;
  Solution sol = solve_to_solution(*algo, inst, graph, svs, limits, a.seed);

  bool invalid = false;
  if (a.validate) {
    ConflictReport report = validate(sol, graph, inst);
    invalid = !report.ok();
    for (const auto& c : report.conflicts)
      std::cerr << to_string(c.kind) << " conflict: agents " << c.a << "," << c.b << " at t=" << c.time << "\n";
    for (const auto& e : report.errors)
      std::cerr << to_string(e.kind) << " error: agent " << e.agent << " at t=" << e.time << "\n";
    sol.validation = std::move(report);
  }
  if (!a.out.empty()) write_text(a.out, write_solution(sol));

  char line[256];
  if (sol.solved)
    std::snprintf(line, sizeof line, "%s %s n=%d solved soc=%d makespan=%d runtime=%.3fs", map.name().c_str(),
                  to_string(*algo), inst.num_agents(), soc(sol), makespan(sol), sol.runtime_seconds);
  else
    std::snprintf(line, sizeof line, "%s %s n=%d timeout soc=- makespan=- runtime=%.3fs", map.name().c_str(),
                  to_string(*algo), inst.num_agents(), sol.runtime_seconds);
  std::cout << line << (invalid ? " INVALID" : "") << "\n";
  if (invalid) return kIo;
  return sol.solved ? kOk : kUnsolved;
}

struct BenchArgs {
  std::string maps, agents, algos, out;
  int instances = 15;
  double time_limit = 60.0;
  std::uint64_t seed = 0;
  int workers = 1;
  long step_cap = 0;
};

int cmd_bench(const BenchArgs& a) {
  BenchConfig config;
  for (const auto& m : split_list(a.maps)) config.maps.emplace_back(m);
  try {
    for (const auto& n : split_list(a.agents)) config.agent_counts.push_back(std::stoi(n));
  } catch (const std::logic_error&) {
    std::cerr << "bad agent list: " << a.agents << "\n";
    return kUsage;
  }
  for (const auto& name : split_list(a.algos)) {
    auto algo = parse_algorithm(name);
    if (!algo) {
      std::cerr << "unknown algorithm: " << name << "\n";
      return kUsage;
    }
    config.algorithms.push_back(*algo);
  }
  config.instances = a.instances;
  config.time_limit_s = a.time_limit;
  config.base_seed = a.seed;
  config.out_csv = a.out;
  config.workers = a.workers;
  if (a.step_cap > 0) config.step_cap = a.step_cap;
  try {
    config.check();
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  BenchSummary s = run_bench(config, std::cerr);
  std::cout << "executed " << s.executed << ", skipped " << s.skipped << ", validation failures "
            << s.validation_failures << "\n";
  return s.validation_failures ? kIo : kOk;
}

int cmd_plot(const std::string& csv, const std::string& out) {
  auto records = read_csv(csv);
  if (records.empty()) {
    std::cerr << csv << ": no data rows\n";
    return kUsage;
  }
  for (const auto& f : write_plots(records, out)) std::cout << f.string() << "\n";
  return kOk;
}

int cmd_render(const std::string& map_file, const std::string& solution_file, const std::string& out) {
  GridMap map = load_map(map_file);
  Solution sol = read_solution(read_text_file(solution_file));
  if (!sol.map.empty() && sol.map != map.name()) {
    std::cerr << "solution is for map " << sol.map << ", not " << map.name() << "\n";
    return kIo;
  }
  GridGraph graph(map);
  if (!validate(sol, graph).errors.empty()) {
    std::cerr << "solution does not fit the map\n";
    return kIo;
  }
  auto frames = render_frames(map, compute_svs(graph), sol, out);
  std::cout << frames.size() << " frames -> " << out << "\n";
  return kOk;
}

int cmd_genmaps(const std::string& out) {
  fs::create_directories(out);
  for (const auto& name : benchmark_map_names()) {
    const fs::path file = fs::path(out) / (name + ".map");
    write_text(file, serialize_map(make_benchmark_map(name)));
    std::cout << file.string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corridor-generating multi-agent pathfinding on grid maps"};
  app.require_subcommand(1);

  std::string svs_map, svs_out;
  auto* svs = app.add_subcommand("svs", "compute and cache the separating vertices of a map");
  svs->add_option("--map", svs_map, "map file")->required();
  svs->add_option("--out", svs_out, "cache file (default: <map>.svs.json)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("--map", sa.map, "map file")->required();
  auto* scen_opt = solve->add_option("--scen", sa.scen, "scenario file");
  auto* seed_opt = solve->add_option("--seed", sa.seed, "seed for a random instance");
  scen_opt->excludes(seed_opt);
  solve->add_option("--agents", sa.agents, "number of agents")->required();
  solve->add_option("--algo", sa.algo, "cga, prp or pibt")->required();
  solve->add_option("--time-limit", sa.time_limit, "seconds")->required();
  solve->add_option("--out", sa.out, "solution JSON");
  solve->add_flag("--validate", sa.validate, "check the result for conflicts");
  solve->add_option("--svs", sa.svs, "SVS cache (default: <map>.svs.json when present)");
  solve->add_option("--step-cap", sa.step_cap, "cap on simulated time steps");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "run a benchmark grid into a CSV");
  bench->add_option("--maps", ba.maps, "comma-separated map files")->required();
  bench->add_option("--agents", ba.agents, "comma-separated agent counts")->required();
  bench->add_option("--algos", ba.algos, "comma-separated algorithms")->required();
  bench->add_option("--instances", ba.instances, "instances per point");
  bench->add_option("--time-limit", ba.time_limit, "seconds per run");
  bench->add_option("--seed", ba.seed, "base seed");
  bench->add_option("--out", ba.out, "CSV file (appended, resumable)")->required();
  bench->add_option("--workers", ba.workers, "parallel runs");
  bench->add_option("--step-cap", ba.step_cap, "cap on simulated time steps");

  std::string plot_in, plot_out;
  auto* plot = app.add_subcommand("plot", "SVG charts from a benchmark CSV");
  plot->add_option("--in", plot_in, "CSV file")->required();
  plot->add_option("--out", plot_out, "output directory")->required();

  std::string render_map, render_solution, render_out;
  auto* render = app.add_subcommand("render", "one SVG frame per time step");
  render->add_option("--map", render_map, "map file")->required();
  render->add_option("--solution", render_solution, "solution JSON")->required();
  render->add_option("--out", render_out, "output directory")->required();

  std::string genmaps_out;
  auto* genmaps = app.add_subcommand("genmaps", "write the built-in 32x32 evaluation maps");
  genmaps->add_option("--out", genmaps_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*svs) return cmd_svs(svs_map, svs_out);
    if (*solve) return cmd_solve(sa);
    if (*bench) return cmd_bench(ba);
    if (*plot) return cmd_plot(plot_in, plot_out);
    if (*render) return cmd_render(render_map, render_solution, render_out);
    if (*genmaps) return cmd_genmaps(genmaps_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
