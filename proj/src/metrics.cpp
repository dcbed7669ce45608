#include "cga_mapf/metrics.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace cga {

std::vector<SummaryRow> aggregate(const std::vector<RunRecord>& records) {
  std::vector<std::string> map_order, algo_order;
  auto rank = [](std::vector<std::string>& order, const std::string& key) {
    auto it = std::find(order.begin(), order.end(), key);
    if (it != order.end()) return static_cast<int>(it - order.begin());
    order.push_back(key);
    return static_cast<int>(order.size()) - 1;
  };
  std::map<std::tuple<int, int, int>, std::vector<const RunRecord*>> groups;
  for (const auto& r : records)
    groups[{rank(map_order, r.map), rank(algo_order, r.algo), r.n}].push_back(&r);

  std::vector<SummaryRow> rows;
  for (const auto& [key, members] : groups) {
    SummaryRow row;
    row.map = members.front()->map;
    row.algo = members.front()->algo;
    row.n = members.front()->n;
    row.runs = static_cast<int>(members.size());
    std::vector<double> runtimes;
    for (const RunRecord* r : members) {
      if (!r->solved) continue;
      ++row.solved;
      runtimes.push_back(r->runtime_s);
      if (r->makespan) row.makespans.push_back(*r->makespan);
    }
    row.success_rate = static_cast<double>(row.solved) / row.runs;
    if (!runtimes.empty()) {
      double sum = 0.0;
      for (double x : runtimes) sum += x;
      row.mean_runtime_s = sum / static_cast<double>(runtimes.size());
      std::sort(runtimes.begin(), runtimes.end());
      const std::size_t m = runtimes.size();
      row.median_runtime_s = m % 2 ? runtimes[m / 2] : 0.5 * (runtimes[m / 2 - 1] + runtimes[m / 2]);
    }
    std::sort(row.makespans.begin(), row.makespans.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cga
