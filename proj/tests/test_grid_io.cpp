#include <doctest.h>

#include <set>

#include "cga_mapf/benchmark_maps.hpp"
#include "cga_mapf/solution.hpp"
#include "helpers.hpp"

using namespace cga;

TEST_CASE("parse_map: smallest mixed map") {
  GridMap m = parse_map("type octile\nheight 2\nwidth 2\nmap\n..\n.@\n");
  CHECK(m.width() == 2);
  CHECK(m.height() == 2);
  CHECK(m.num_passable() == 3);
  CHECK(m.vertex_at(1, 1) == -1);
  CHECK(m.vertex_at(1, 0) == 2);
}

TEST_CASE("parse_map: cell alphabet") {
  GridMap m = parse_map("type octile\nheight 1\nwidth 7\nmap\n.GS@OTW\n");
  CHECK(m.num_passable() == 3);
  CHECK_THROWS_AS(parse_map("type octile\nheight 1\nwidth 2\nmap\n.x\n"), ParseError);
}

TEST_CASE("parse_map: errors carry line numbers") {
  try {
    parse_map("type octile\nheight 2\nwidth 3\nmap\n...\n..\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_map("height 1\nwidth 1\nmap\n.\n"), ParseError);
  CHECK_THROWS_AS(parse_map("type octile\nheight 3\nwidth 1\nmap\n.\n.\n"), ParseError);
  CHECK_THROWS_AS(parse_map("type octile\nheight x\nwidth 1\nmap\n.\n"), ParseError);
}

TEST_CASE("benchmark maps round-trip through the text format") {
  for (const auto& name : benchmark_map_names()) {
    CAPTURE(name);
    GridMap m = make_benchmark_map(name);
    CHECK(m.width() == 32);
    CHECK(m.height() == 32);
    CHECK(parse_map(serialize_map(m)) == m);
    CHECK(make_benchmark_map(name) == m);
  }
  CHECK(make_benchmark_map("empty-32-32").num_passable() == 1024);
  CHECK(make_benchmark_map("random-32-32-20").num_passable() == 1024 - 205);
}

TEST_CASE("parse_scen") {
  GridMap row = test::open_grid(1, 2);
  const std::string scen = "version 1\n0\tx.map\t2\t1\t0\t0\t1\t0\t1\n";
  Instance inst = parse_scen(scen, row, 1);
  CHECK(inst.starts() == std::vector<Vertex>{0});
  CHECK(inst.goals() == std::vector<Vertex>{1});
  CHECK_THROWS_WITH_AS(parse_scen(scen, row, 0), doctest::Contains("no agents requested"), ParseError);
  CHECK_THROWS_AS(parse_scen(scen, row, 2), ParseError);
  CHECK_THROWS_AS(parse_scen("version 1\n0\tx.map\t2\t1\t0\t0\t5\t0\t1\n", row, 1), ParseError);
  CHECK_NOTHROW(parse_scen("version 1.0\n0\tx.map\t2\t1\t1\t0\t0\t0\t1\n", row, 1));
}

TEST_CASE("Instance invariants are enforced") {
  GridMap m = test::grid({"..@", "@.."});
  CHECK_THROWS_AS(Instance(m, {0, 0}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(m, {0, 1}, {2, 2}), std::invalid_argument);
  GridMap split = test::grid({".@."});
  CHECK_THROWS_AS(Instance(split, {0}, {1}), std::invalid_argument);
  CHECK_NOTHROW(Instance(m, {0, 1}, {3, 2}));
}

TEST_CASE("generate_instance") {
  GridMap row = test::open_grid(1, 3);
  Instance inst = generate_instance(row, 3, 11);
  CHECK(std::set<Vertex>(inst.starts().begin(), inst.starts().end()) == std::set<Vertex>{0, 1, 2});

  GridMap empty = make_benchmark_map("empty-32-32");
  Instance a = generate_instance(empty, 600, 7);
  Instance b = generate_instance(empty, 600, 7);
  CHECK(a.starts() == b.starts());
  CHECK(a.goals() == b.goals());
  CHECK(std::set<Vertex>(a.starts().begin(), a.starts().end()).size() == 600);
  CHECK(std::set<Vertex>(a.goals().begin(), a.goals().end()).size() == 600);
  CHECK(generate_instance(empty, 600, 8).starts() != a.starts());
  CHECK_THROWS_AS(generate_instance(row, 4, 1), std::invalid_argument);

  // samples only the largest component
  GridMap split = test::grid({"..@....", "..@...."});
  const auto labels = component_labels(split);
  for (int seed = 0; seed < 20; ++seed) {
    Instance inst2 = generate_instance(split, 3, static_cast<std::uint64_t>(seed));
    for (Vertex v : inst2.starts()) CHECK(labels[static_cast<std::size_t>(v)] == labels[2]);
  }
}

TEST_CASE("solution documents round-trip") {
  Solution empty;
  empty.map = "m";
  empty.algorithm = "cga";
  CHECK(read_solution(write_solution(empty)) == empty);

  Solution one = empty;
  one.paths = {{0, 1}};
  one.solved = true;
  one.runtime_seconds = 0.25;
  const std::string text = write_solution(one);
  CHECK(text.find("\"soc\": 1") != std::string::npos);
  CHECK(read_solution(text) == one);

  Solution big;
  big.map = "empty-32-32";
  big.algorithm = "pibt";
  big.seed = 12345678901234ULL;
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Path p;
    for (int t = 0; t < 30; ++t) p.push_back(static_cast<Vertex>(rng.below(1024)));
    big.paths.push_back(p);
  }
  big.solved = true;
  big.validation = ConflictReport{{{ConflictKind::Swapping, 1, 2, 3, -1, 4, 5}}, {{StructuralKind::Length, 0, 0}}};
  const std::string once = write_solution(big);
  CHECK(write_solution(read_solution(once)) == once);
  CHECK(read_solution(once) == big);

  Solution unsolved = one;
  unsolved.solved = false;
  CHECK(write_solution(unsolved).find("\"soc\": null") != std::string::npos);
  CHECK_THROWS(read_solution("{\"paths\": 3}"));
}
