#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "domgame/edge_list.hpp"
#include "domgame/generate.hpp"
#include "domgame/graph.hpp"

using namespace domgame;

TEST_CASE("cycle generator") {
  Graph c5 = make_cycle(5);
  REQUIRE(c5.n() == 5);
  REQUIRE(c5.m() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK(is_cycle_graph(c5));
  CHECK(min_degree(c5) == 2);
  CHECK_THROWS_AS(make_cycle(2), ParamError);
}

TEST_CASE("path and complete generators") {
  Graph p5 = make_path(5);
  CHECK(p5.m() == 4);
  CHECK(min_degree(p5) == 1);
  CHECK(is_path_graph(p5));
  CHECK(min_degree(make_cycle(7)) == 2);

  Graph k4 = make_complete(4);
  CHECK(k4.m() == 6);
  CHECK(is_complete_graph(k4));
}

TEST_CASE("legs of a single vertex is the five-vertex path") {
  Graph g = make_legs(Graph::from_edges(1, {}));
  REQUIRE(g.n() == 5);
  CHECK(is_path_graph(g));
}

TEST_CASE("legs of K2") {
  Graph g = make_legs(make_complete(2));
  REQUIRE(g.n() == 10);
  CHECK(g.m() == 9);  // one hub edge plus four legs of two edges
  CHECK(g.has_edge(0, 1));
  CHECK(min_degree(g) == 1);
  CHECK_THROWS_AS(make_legs(Graph::from_edges(0, {})), ParamError);
}

TEST_CASE("legs size law holds for random bases") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int nb = 1 + int(rng() % 5);
    std::vector<Edge> edges;
    for (int u = 0; u < nb; ++u)
      for (int v = u + 1; v < nb; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    Graph base = Graph::from_edges(nb, edges);
    Graph g = make_legs(base);
    CHECK(g.n() == 5 * nb);
    CHECK(g.m() == base.m() + 4 * nb);
  }
}

TEST_CASE("random min-degree-2 generator") {
  Graph g = make_random_min_deg2(14, 5, 1);
  CHECK(g.n() == 14);
  CHECK(g.m() == 19);
  CHECK(min_degree(g) >= 2);
  // deterministic per seed
  CHECK(emit_edge_list(g) == emit_edge_list(make_random_min_deg2(14, 5, 1)));
  CHECK(emit_edge_list(g) != emit_edge_list(make_random_min_deg2(14, 5, 2)));
  for (uint64_t seed = 0; seed < 10; ++seed)
    CHECK(min_degree(make_random_min_deg2(12, 3, seed)) >= 2);
  CHECK_THROWS_AS(make_random_min_deg2(3, 1, 0), ParamError);
}

TEST_CASE("theta and disjoint copies") {
  Graph th = make_theta(1, 2, 2);
  CHECK(th.n() == 7);
  CHECK(th.m() == 8);
  CHECK(min_degree(th) == 2);

  Graph two_c5 = make_disjoint_copies(make_cycle(5), 2);
  CHECK(two_c5.n() == 10);
  CHECK(two_c5.m() == 10);
  CHECK(components(two_c5).size() == 2);
  CHECK_THROWS_AS(make_disjoint_copies(make_cycle(5), 0), ParamError);
}

TEST_CASE("edge list parses a triangle") {
  Graph g = parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
  CHECK(g.n() == 3);
  CHECK(is_cycle_graph(g));
  CHECK(emit_edge_list(g) == "3 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("edge list: K2 and comments") {
  CHECK(emit_edge_list(parse_edge_list("2 1\n0 1\n")) == "2 1\n0 1\n");
  Graph g = parse_edge_list("# comment\n3 2\n0 1\n# another\n1 2\n");
  CHECK(g.m() == 2);
}

TEST_CASE("edge list rejects malformed input") {
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), ParseError);   // self-loop
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 2\n"), ParseError);   // out of range
  CHECK_THROWS_AS(parse_edge_list("2 1\n1 0\n"), ParseError);   // not u < v
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);   // missing edge
  CHECK_THROWS_AS(parse_edge_list("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  try {
    parse_edge_list("3 2\n0 1\n0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("parse/emit round-trip on generated graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + int(rng() % 14);
    Graph g = make_random_min_deg2(n, int(rng() % 4), rng());
    std::string text = emit_edge_list(g);
    Graph back = parse_edge_list(text);
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());
    CHECK(emit_edge_list(back) == text);
  }
}

TEST_CASE("generate dispatches by family") {
  GraphFamily f;
  f.kind = FamilyKind::Cycle;
  f.n = 6;
  CHECK(generate(f).n() == 6);
  f.kind = FamilyKind::Legs;
  f.base_n = 2;
  f.base_edges = {{0, 1}};
  CHECK(generate(f).n() == 10);
  f.kind = FamilyKind::Explicit;
  f.base_n = 3;
  f.base_edges = {{0, 1}};
  CHECK(generate(f).m() == 1);
}

TEST_CASE("components and structure predicates") {
  Graph g = make_disjoint_union({make_cycle(4), make_path(3)});
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 4);
  CHECK(comps[1].size() == 3);
  CHECK(!is_cycle_graph(g));

  VertexSet sub(g.n());
  for (int v : {4, 5, 6}) sub.set(v);
  auto inner = components(g, &sub);
  REQUIRE(inner.size() == 1);
  CHECK(inner[0] == std::vector<int>({4, 5, 6}));
}

TEST_CASE("vertex set basics") {
  VertexSet a(100);
  a.set(0);
  a.set(63);
  a.set(64);
  a.set(99);
  CHECK(a.count() == 4);
  std::vector<int> got(a.begin(), a.end());
  CHECK(got == std::vector<int>({0, 63, 64, 99}));
  VertexSet b = VertexSet::full(100);
  CHECK(b.count() == 100);
  CHECK(b.contains_all(a));
  CHECK(!a.contains_all(b));
  CHECK((b - a).count() == 96);
  CHECK(a.complement().count() == 96);
  CHECK(a.intersects(b));
  CHECK(a.first() == 0);
  CHECK(VertexSet(10).first() == -1);
}
