#include <doctest.h>

#include "cga_mapf/cga.hpp"
#include "cga_mapf/validate.hpp"
#include "helpers.hpp"

using namespace cga;

namespace {

struct Setup {
  GridMap map;
  GridGraph graph;
  SeparatingVertexSet svs;

  explicit Setup(GridMap m) : map(std::move(m)), graph(map), svs(compute_svs(graph)) {}
};

ConflictReport check_paths(const CgaSolver& solver, const GridGraph& graph) {
  Solution s;
  for (const auto& a : solver.agents()) s.paths.push_back(a.path);
  pad_paths(s.paths);
  return validate(s, graph);
}

// open 3x3 area on the left, dead-end corridor to the right along row 1
GridMap dead_end() { return test::grid({"...@@@@@", "........", "...@@@@@"}); }

}  // namespace

TEST_CASE("create_corridor") {
  Setup row(test::open_grid(1, 5));
  CgaSolver s(row.graph, row.svs, {0}, {4});
  CHECK(s.create_corridor(0) == Corridor{0, 1, 2, 3, 4});

  Setup open(test::open_grid(3, 3));
  CgaSolver o(open.graph, open.svs, {0}, {8});
  CHECK(o.create_corridor(0) == Corridor{0, 1});

  Setup de(dead_end());
  CgaSolver d(de.graph, de.svs, {4}, {10});
  // runs from the open area through the passage up to the goal
  CHECK(d.create_corridor(0) == Corridor{4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("find_evs: empty corridor and plus-shaped graph") {
  Setup row(test::open_grid(1, 5));
  CgaSolver s(row.graph, row.svs, {0}, {4});
  auto r = s.find_evs(0, s.create_corridor(0));
  CHECK(r.ok());
  CHECK(r.plan.evs.empty());

  Setup plus(test::grid({"@.@", "...", "@.@"}));
  CgaSolver p(plus.graph, plus.svs, {1, 2}, {3, 4});
  const Corridor c = p.create_corridor(0);
  CHECK(c == Corridor{1, 2, 3});
  r = p.find_evs(0, c);
  REQUIRE(r.ok());
  REQUIRE(r.plan.evs.size() == 1);
  CHECK(r.plan.evs[0].blocker == 1);
  CHECK(r.plan.evs[0].path == Path{2, 4});
}

TEST_CASE("find_evs: dead end without escape sets a temporary goal") {
  Setup de(dead_end());
  // vertices: row 0 is 0..2, row 1 is 3..10, row 2 is 11..13
  CgaSolver s(de.graph, de.svs, {6, 8, 9}, {10, 0, 11});
  const Corridor c = s.create_corridor(0);
  CHECK(c == Corridor{6, 7, 8, 9, 10});
  std::vector<FindEvsEvent> events;
  s.set_observer([&](const FindEvsEvent& e) { events.push_back(e); });
  auto r = s.find_evs(0, c);
  REQUIRE_FALSE(r.ok());
  CHECK(*r.failure == EvacuationFailure::UnsolvableLocally);
  const AgentState& a = s.agents()[0];
  CHECK(a.temp_goal_active);
  CHECK(a.goal == 2);
  CHECK_FALSE(de.svs.is_sv(a.goal));
  REQUIRE(events.size() == 1);
  CHECK(events[0].corridor_length == 5);

  // the whole instance still gets solved once the blockers leave
  Instance inst(de.map, {6, 8, 9}, {10, 0, 11});
  SolveResult res = solve_cga(inst, de.graph, de.svs, Limits{5.0, {}});
  CHECK(res.solved());
  Solution sol;
  sol.paths = res.paths;
  sol.solved = true;
  CHECK(validate(sol, de.graph, inst).ok());
}

TEST_CASE("evacuate_and_push: two blockers into two side cells") {
  Setup g(test::grid({"@@..@@", "......"}));
  // vertices: side cells 0 and 1, the line is 2..7
  CgaSolver s(g.graph, g.svs, {2, 4, 5}, {7, 0, 1});
  const Corridor c = s.create_corridor(0);
  CHECK(c == Corridor{2, 3, 4, 5, 6, 7});
  auto r = s.find_evs(0, c);
  REQUIRE(r.ok());
  REQUIRE(r.plan.evs.size() == 2);
  CHECK(r.plan.evs[0].path == Path{5, 1});
  CHECK(r.plan.evs[1].path == Path{4, 0});
  s.evacuate_and_push(0, c, r.plan);
  CHECK(s.agents()[0].path.back() == 7);
  CHECK(s.agents()[1].path.back() == 0);
  CHECK(s.agents()[2].path.back() == 1);
  long bound = static_cast<long>(c.size());
  for (const auto& ev : r.plan.evs) bound += static_cast<long>(ev.path.size());
  CHECK(static_cast<long>(s.agents()[0].path.size()) - 1 <= bound);
  CHECK(check_paths(s, g.graph).ok());
}

TEST_CASE("evacuate_and_push: empty corridor is walked in full") {
  Setup row(test::open_grid(1, 5));
  CgaSolver s(row.graph, row.svs, {0}, {4});
  const Corridor c = s.create_corridor(0);
  s.evacuate_and_push(0, c, {});
  CHECK(s.agents()[0].path == Path{0, 1, 2, 3, 4});
}

TEST_CASE("update_order") {
  Setup row(test::open_grid(1, 6));
  CgaSolver s(row.graph, row.svs, {0, 2, 4}, {1, 3, 5});
  s.update_order(false);
  CHECK(s.order() == std::vector<int>{0, 1, 2});
  s.update_order(true);
  CHECK(s.order() == std::vector<int>{1, 2, 0});

  CgaSolver d(row.graph, row.svs, {0, 2, 4}, {0, 3, 4});
  d.update_order(false);
  CHECK(d.order() == std::vector<int>{1, 0, 2});
  d.update_order(true);  // the only unfinished agent rotates onto itself
  CHECK(d.order() == std::vector<int>{1, 0, 2});
}

TEST_CASE("solve_cga") {
  Setup open(test::open_grid(3, 3));
  Instance one(open.map, {0}, {8});
  auto r = solve_cga(one, open.graph, open.svs, Limits{5.0, {}});
  REQUIRE(r.solved());
  Solution sol;
  sol.paths = r.paths;
  CHECK(makespan(sol) == 4);
  CHECK(r.paths[0].size() == 5);

  Setup row3(test::open_grid(1, 3));
  Instance opposing(row3.map, {0, 2}, {2, 0});
  auto t = solve_cga(opposing, row3.graph, row3.svs, Limits{2.0, {}});
  CHECK(t.status == SolveStatus::Timeout);
  Solution partial;
  partial.paths = t.paths;
  CHECK(validate(partial, row3.graph, opposing).ok());
}

TEST_CASE("solve_cga on random small instances stays conflict-free") {
  Rng rng(31);
  int solved = 0;
  for (int k = 0; k < 60; ++k) {
    GridMap m = test::random_grid(8, 8, 0.2, rng);
    Setup s(m);
    const int n = 1 + static_cast<int>(rng.below(10));
    std::optional<Instance> maybe;
    try {
      maybe.emplace(generate_instance(m, n, rng.next()));
    } catch (const std::invalid_argument&) {
      continue;  // largest component too small
    }
    const Instance& inst = *maybe;
    auto r = solve_cga(inst, s.graph, s.svs, Limits{5.0, {}});
    Solution sol;
    sol.paths = r.paths;
    sol.solved = r.solved();
    CHECK(validate(sol, s.graph, inst).ok());
    solved += r.solved();
  }
  CHECK(solved > 30);
}
