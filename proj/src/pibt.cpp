#include "cga_mapf/pibt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <tuple>

namespace cga {

Pibt::Pibt(const GridGraph& graph, std::vector<Vertex> starts, std::vector<Vertex> goals,
           std::uint64_t seed)
    : graph_(graph), goals_(std::move(goals)), config_(std::move(starts)), rng_(seed) {
  const std::size_t n = config_.size();
  const std::size_t nv = static_cast<std::size_t>(graph.size());
  occupied_now_.assign(nv, -1);
  occupied_next_.assign(nv, -1);
  next_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    dist_.push_back(bfs_distances(graph, goals_[i]));
    // farther agents start ahead; the fraction stays below one
    tie_breaker_.push_back(static_cast<double>(dist_[i][config_[i]]) / (graph.size() + 1.0));
  }
  priority_ = tie_breaker_;
}

bool Pibt::plan(int agent, int parent) {
  const auto i = static_cast<std::size_t>(agent);
  const Vertex here = config_[i];
  // (distance to goal, random tie-break, vertex)
  std::array<std::tuple<int, std::uint64_t, Vertex>, 5> candidates{};
  std::size_t count = 0;
  const DistanceMap& d = dist_[i];
  for (Vertex u : graph_.neighbors(here)) candidates[count++] = {d[u], rng_.next(), u};
  candidates[count++] = {d[here], rng_.next(), here};
  std::sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count));

  for (std::size_t c = 0; c < count; ++c) {
    const Vertex u = std::get<2>(candidates[c]);
    if (occupied_next_[u] >= 0) continue;
    if (parent >= 0 && u == config_[static_cast<std::size_t>(parent)]) continue;
    const int other = occupied_now_[u];
    // no swapping with an agent that already decided to come here
    if (other >= 0 && other != agent && next_[static_cast<std::size_t>(other)] == here) continue;
    occupied_next_[u] = agent;
    next_[i] = u;
    if (other < 0 || u == here) return true;
    if (next_[static_cast<std::size_t>(other)] < 0 && !plan(other, agent)) continue;
    return true;
  }
  occupied_next_[here] = agent;
  next_[i] = here;
  return false;
}

const std::vector<Vertex>& Pibt::step() {
  const std::size_t n = config_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (config_[i] == goals_[i])
      priority_[i] = tie_breaker_[i];
    else
      priority_[i] += 1.0;
    occupied_now_[config_[i]] = static_cast<int>(i);
    next_[i] = -1;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
    return priority_[static_cast<std::size_t>(a)] > priority_[static_cast<std::size_t>(b)];
  });
  for (int id : order)
    if (next_[static_cast<std::size_t>(id)] < 0) plan(id, -1);
  for (std::size_t i = 0; i < n; ++i) {
    occupied_now_[config_[i]] = -1;
    occupied_next_[next_[i]] = -1;
    config_[i] = next_[i];
  }
  return config_;
}

SolveResult solve_pibt(const Instance& instance, const GridGraph& graph, const Limits& limits,
                       std::uint64_t seed) {
  Deadline deadline(limits.time_limit_s);
  const long cap = limits.step_cap.value_or(20L * graph.size());
  Pibt pibt(graph, instance.starts(), instance.goals(), seed);
  std::vector<Path> paths;
  for (Vertex s : instance.starts()) paths.push_back({s});
  SolveResult result;
  for (long t = 0; !pibt.at_goals(); ++t) {
    if (t >= cap || deadline.expired()) break;
    const auto& config = pibt.step();
    for (std::size_t i = 0; i < config.size(); ++i) paths[i].push_back(config[i]);
  }
  result.status = pibt.at_goals() ? SolveStatus::Solved : SolveStatus::Timeout;
  result.paths = std::move(paths);
  result.runtime_s = deadline.elapsed();
  return result;
}

}  // namespace cga
