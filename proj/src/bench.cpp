#include "cga_mapf/bench.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "cga_mapf/rng.hpp"
#include "cga_mapf/validate.hpp"

namespace cga {

void BenchConfig::check() const {
  if (maps.empty()) throw std::invalid_argument("no maps given");
  if (agent_counts.empty()) throw std::invalid_argument("no agent counts given");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms given");
  for (int n : agent_counts)
    if (n <= 0) throw std::invalid_argument("agent counts must be positive");
  if (instances <= 0) throw std::invalid_argument("instances must be positive");
  if (!(time_limit_s > 0)) throw std::invalid_argument("time limit must be positive");
  if (workers <= 0) throw std::invalid_argument("workers must be positive");
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view map_name, int n, int instance) {
  std::string key = std::to_string(base_seed) + "|" + std::string(map_name) + "|" + std::to_string(n) +
                    "|" + std::to_string(instance);
  return stable_hash(key);
}

std::string csv_row(const RunRecord& r) {
  char runtime[32];
  std::snprintf(runtime, sizeof runtime, "%.6f", r.runtime_s);
  std::string row = r.map + "," + r.algo + "," + std::to_string(r.n) + "," + std::to_string(r.instance) +
                    "," + std::to_string(r.seed) + "," + (r.solved ? "1" : "0") + "," + runtime + ",";
  if (r.soc) row += std::to_string(*r.soc);
  row += ",";
  if (r.makespan) row += std::to_string(*r.makespan);
  return row;
}

std::vector<RunRecord> parse_csv(const std::string& text) {
  std::vector<RunRecord> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kCsvHeader) continue;
    std::vector<std::string> f;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = line.find(',', pos);
      f.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (f.size() != 9) throw ParseError(lineno, "expected 9 CSV fields, found " + std::to_string(f.size()));
    try {
      RunRecord r;
      r.map = f[0];
      r.algo = f[1];
      r.n = std::stoi(f[2]);
      r.instance = std::stoi(f[3]);
      r.seed = std::stoull(f[4]);
      r.solved = f[5] == "1";
      r.runtime_s = std::stod(f[6]);
      if (!f[7].empty()) r.soc = std::stoi(f[7]);
      if (!f[8].empty()) r.makespan = std::stoi(f[8]);
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "malformed CSV row");
    }
  }
  return out;
}

std::vector<RunRecord> read_csv(const std::filesystem::path& file) {
  return parse_csv(read_text_file(file));
}

PreparedMap prepare_map(GridMap map) {
  GridGraph graph(map);
  SeparatingVertexSet svs = compute_svs(graph);
  return {std::move(map), std::move(graph), std::move(svs)};
}

RunRecord run_one(const PreparedMap& prepared, Algorithm algo, int n, int instance, std::uint64_t seed,
                  const Limits& limits, bool* validation_failed) {
  RunRecord record;
  record.map = prepared.map.name();
  record.algo = to_string(algo);
  record.n = n;
  record.instance = instance;
  record.seed = seed;
  if (validation_failed) *validation_failed = false;
  const Instance inst = generate_instance(prepared.map, n, seed);
  Solution sol = solve_to_solution(algo, inst, prepared.graph, prepared.svs, limits, seed);
  record.runtime_s = sol.runtime_seconds;
  if (sol.solved) {
    if (!validate(sol, prepared.graph, inst).ok()) {
      if (validation_failed) *validation_failed = true;
      return record;
    }
    record.solved = true;
    record.soc = soc(sol);
    record.makespan = makespan(sol);
  }
  return record;
}

BenchSummary run_bench(const BenchConfig& config, std::ostream& log) {
  config.check();
  std::set<std::tuple<std::string, std::string, int, int>> done;
  const bool exists = std::filesystem::exists(config.out_csv);
  if (exists)
    for (const auto& r : read_csv(config.out_csv)) done.insert({r.map, r.algo, r.n, r.instance});

  std::vector<PreparedMap> maps;
  for (const auto& file : config.maps) maps.push_back(prepare_map(load_map(file)));

  struct Job {
    std::size_t map;
    int n;
    Algorithm algo;
    int instance;
  };
  BenchSummary summary;
  std::vector<Job> jobs;
  for (std::size_t m = 0; m < maps.size(); ++m)
    for (int n : config.agent_counts)
      for (Algorithm algo : config.algorithms)
        for (int k = 0; k < config.instances; ++k) {
          if (done.contains({maps[m].map.name(), to_string(algo), n, k})) {
            ++summary.skipped;
            continue;
          }
          jobs.push_back({m, n, algo, k});
        }

  std::ofstream out(config.out_csv, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + config.out_csv.string());
  if (!exists) out << kCsvHeader << "\n";

  Limits limits{config.time_limit_s, config.step_cap};
  std::vector<std::optional<RunRecord>> results(jobs.size());
  std::vector<char> invalid(jobs.size(), 0);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const Job& job = jobs[j];
      const auto& pm = maps[job.map];
      const std::uint64_t seed = derive_seed(config.base_seed, pm.map.name(), job.n, job.instance);
      RunRecord record;
      bool failed_validation = false;
      try {
        record = run_one(pm, job.algo, job.n, job.instance, seed, limits, &failed_validation);
      } catch (const std::exception& e) {
        record = {pm.map.name(), to_string(job.algo), job.n, job.instance, seed, false, 0.0, {}, {}};
        std::lock_guard lock(mu);
        log << "run " << csv_row(record) << " failed: " << e.what() << "\n";
      }
      std::lock_guard lock(mu);
      results[j] = std::move(record);
      invalid[j] = failed_validation ? 1 : 0;
      ready.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  const int threads = std::min<int>(config.workers, static_cast<int>(jobs.size()));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);

  // rows are written in grid order no matter which worker finishes first
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[j].has_value(); });
    const RunRecord& r = *results[j];
    out << csv_row(r) << "\n";
    out.flush();
    ++summary.executed;
    if (invalid[j]) {
      ++summary.validation_failures;
      log << "validation failed: " << csv_row(r) << "\n";
    }
    log << r.map << " " << r.algo << " n=" << r.n << " #" << r.instance
        << (r.solved ? " solved" : " unsolved") << " " << r.runtime_s << "s\n";
  }
  return summary;
}

}  // namespace cga
