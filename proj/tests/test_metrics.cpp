#include <doctest.h>

#include "cga_mapf/metrics.hpp"
#include "cga_mapf/solution.hpp"

using namespace cga;

namespace {

Solution with_paths(std::vector<Path> paths) {
  Solution s;
  s.paths = std::move(paths);
  return s;
}

RunRecord record(const std::string& algo, int n, bool solved, double runtime, int makespan = 0) {
  RunRecord r;
  r.map = "m";
  r.algo = algo;
  r.n = n;
  r.solved = solved;
  r.runtime_s = runtime;
  if (solved) {
    r.soc = makespan;
    r.makespan = makespan;
  }
  return r;
}

}  // namespace

TEST_CASE("soc and makespan") {
  CHECK(soc(with_paths({{3}, {5}})) == 0);
  CHECK(makespan(with_paths({{3}, {5}})) == 0);
  CHECK(soc(with_paths({{0, 1, 2, 3, 4}})) == 4);
  CHECK(makespan(with_paths({{0, 1, 2, 3, 4}})) == 4);
  CHECK(soc(with_paths({{0, 1, 2, 3}, {0, 1, 2, 3, 4, 5}})) == 8);
  CHECK(makespan(with_paths({{0, 1, 2, 3}, {0, 1, 2, 3, 4, 5}})) == 5);
  // leaving the goal and coming back costs again
  CHECK(path_cost({2, 2, 3, 2, 2}) == 3);
  CHECK(path_cost({1, 2, 2, 2}) == 1);
}

TEST_CASE("padding and trimming keep the costs") {
  std::vector<Path> paths{{0, 1}, {4, 3, 2, 1, 0}, {7}};
  const Solution before = with_paths(paths);
  pad_paths(paths);
  for (const auto& p : paths) CHECK(p.size() == 5);
  const Solution padded = with_paths(paths);
  CHECK(soc(padded) == soc(before));
  CHECK(makespan(padded) == makespan(before));
  CHECK(soc(padded) >= makespan(padded));
  CHECK(soc(padded) <= padded.num_agents() * makespan(padded));
  paths.push_back({5, 5, 5, 5, 5, 5, 5, 5});
  pad_paths(paths);
  trim_paths(paths);
  for (const auto& p : paths) CHECK(p.size() == 5);
}

TEST_CASE("aggregate") {
  std::vector<RunRecord> all_solved, none, mixed;
  for (int i = 0; i < 15; ++i) {
    all_solved.push_back(record("cga", 50, true, 1.0 + i, 20 - i));
    none.push_back(record("prp", 50, false, 60.0));
    mixed.push_back(record("pibt", 50, i < 9, 2.0, 10));
  }
  auto rows = aggregate(all_solved);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].success_rate == 1.0);
  CHECK(*rows[0].mean_runtime_s == doctest::Approx(8.0));
  CHECK(*rows[0].median_runtime_s == doctest::Approx(8.0));
  CHECK(std::is_sorted(rows[0].makespans.begin(), rows[0].makespans.end()));
  CHECK(rows[0].makespans.front() == 6);

  rows = aggregate(none);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].success_rate == 0.0);
  CHECK_FALSE(rows[0].mean_runtime_s.has_value());
  CHECK(rows[0].makespans.empty());

  rows = aggregate(mixed);
  CHECK(rows[0].success_rate == doctest::Approx(0.6));
  CHECK(aggregate({}).empty());

  std::vector<RunRecord> grouped{record("b", 100, true, 1, 1), record("a", 50, true, 1, 1),
                                 record("b", 50, false, 1)};
  rows = aggregate(grouped);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].algo == "b");
  CHECK(rows[0].n == 50);
  CHECK(rows[1].n == 100);
  CHECK(rows[2].algo == "a");
}
