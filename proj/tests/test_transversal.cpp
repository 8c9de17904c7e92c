#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "domgame/generate.hpp"
#include "domgame/solver.hpp"
#include "domgame/transversal.hpp"

using namespace domgame;

TEST_CASE("closed-neighborhood hypergraph deduplicates") {
  Graph k2 = make_complete(2);
  Hypergraph h2 = cnh(k2);
  CHECK(h2.edge_count() == 1);  // N[0] = N[1]

  Graph c3 = make_cycle(3);
  CHECK(cnh(c3).edge_count() == 1);

  Graph c5 = make_cycle(5);
  Hypergraph h5 = cnh(c5);
  CHECK(h5.edge_count() == 5);
  for (int i = 0; i < 5; ++i) CHECK(h5.edge(i).count() == 3);
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph(3, {{}}), ParamError);
  CHECK_THROWS_AS(Hypergraph(3, {{3}}), ParamError);
  Hypergraph h(3, {{0, 1}, {1, 0}, {2}});
  CHECK(h.edge_count() == 2);  // duplicate collapsed
}

TEST_CASE("single edge takes one move") {
  Hypergraph h(2, {{0, 1}});
  CHECK(tau_g(h, TMover::EdgeHitter) == 1);
  CHECK(tau_g(h, TMover::Staller) == 1);
}

TEST_CASE("tau_g of cnh(C5) is three") {
  Graph c5 = make_cycle(5);
  CHECK(tau_g(cnh(c5), TMover::EdgeHitter) == 3);
  CHECK(tau_g(cnh(c5), TMover::Staller) == 2);
}

TEST_CASE("disjoint copies") {
  Hypergraph h(2, {{0, 1}});
  Hypergraph h3 = disjoint_copies(h, 3);
  CHECK(h3.n() == 6);
  CHECK(h3.edge_count() == 3);
  CHECK(tau_g(h3, TMover::EdgeHitter) == 3);

  Hypergraph h1 = disjoint_copies(h, 1);
  CHECK(h1.n() == h.n());
  CHECK(h1.edge_lists() == h.edge_lists());
  CHECK_THROWS_AS(disjoint_copies(h, 0), ParamError);
}

TEST_CASE("reduction identity: tau_g(cnh(G)) = gamma_g(G) on a corpus") {
  std::mt19937_64 rng(3);
  std::vector<Graph> corpus;
  for (int n = 4; n <= 9; ++n) corpus.push_back(make_cycle(n));
  corpus.push_back(make_path(7));
  corpus.push_back(make_theta(1, 2, 2));
  corpus.push_back(make_legs(make_complete(2)));
  corpus.push_back(make_complete(5));
  for (int i = 0; i < 4; ++i)
    corpus.push_back(make_random_min_deg2(10 + i, int(rng() % 4), rng()));
  for (const Graph& g : corpus) {
    REQUIRE(g.n() <= 14);
    Hypergraph h = cnh(g);
    CHECK(tau_g(h, TMover::EdgeHitter) == game_value(g, Mover::Dominator));
    CHECK(tau_g(h, TMover::Staller) == game_value(g, Mover::Staller));
  }
}

TEST_CASE("duplicate edges never change tau_g") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 4 + int(rng() % 5);
    Graph g = make_random_min_deg2(n, int(rng() % 3), rng());
    auto lists = cnh(g).edge_lists();
    size_t original = lists.size();
    for (size_t i = 0; i < original; ++i)
      if (rng() % 2) lists.push_back(lists[i]);
    Hypergraph doubled(n, lists);
    CHECK(tau_g(doubled, TMover::EdgeHitter) ==
          tau_g(cnh(g), TMover::EdgeHitter));
  }
}

TEST_CASE("monotone state: game length is bounded by edge count") {
  Hypergraph h(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(tau_g(h, TMover::Staller) <= h.edge_count());
}

TEST_CASE("hypergraph text round-trip") {
  Graph c5 = make_cycle(5);
  Hypergraph h = cnh(c5);
  std::string text = emit_hypergraph(h);
  Hypergraph back = parse_hypergraph(text);
  CHECK(back.n() == h.n());
  CHECK(back.edge_lists() == h.edge_lists());
  CHECK(emit_hypergraph(back) == text);

  Hypergraph commented = parse_hypergraph("# cnh of K2\n2 1\n0 1\n");
  CHECK(commented.edge_count() == 1);
  CHECK_THROWS_AS(parse_hypergraph("2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("2 1\n0 5\n"), ParseError);
}

TEST_CASE("transversal capacity error") {
  Graph big = make_cycle(30);
  CHECK_THROWS_AS(TransversalSolver(cnh(big)), CapacityError);
}
