#include <catch2/catch_amalgamated.hpp>

#include "domgame/generate.hpp"
#include "domgame/trace.hpp"

using namespace domgame;

namespace {

MatchTrace paper_vs_stingy(const Graph& g) {
  return run_match(g, make_paper_dominator(), make_stingy_staller(),
                   {"paper", "stingy", {}, 24});
}

}  // namespace

TEST_CASE("trace JSON round-trip is lossless") {
  Graph g = make_random_min_deg2(12, 3, 4);
  MatchTrace tr = paper_vs_stingy(g);
  json j = trace_to_json(tr);
  MatchTrace back = trace_from_json(j);
  CHECK(back.n == tr.n);
  CHECK(back.m == tr.m);
  CHECK(back.edges == tr.edges);
  CHECK(back.total == tr.total);
  CHECK(back.bound_ok == tr.bound_ok);
  CHECK(back.t1 == tr.t1);
  CHECK(back.k == tr.k);
  REQUIRE(back.moves.size() == tr.moves.size());
  for (size_t i = 0; i < tr.moves.size(); ++i) {
    CHECK(back.moves[i].t == tr.moves[i].t);
    CHECK(back.moves[i].player == tr.moves[i].player);
    CHECK(back.moves[i].vertex == tr.moves[i].vertex);
    CHECK(back.moves[i].pi_after == tr.moves[i].pi_after);
    CHECK(back.moves[i].drop == tr.moves[i].drop);
    CHECK(back.moves[i].detail == tr.moves[i].detail);
  }
  CHECK(trace_to_json(back) == j);
}

TEST_CASE("trace schema uses the agreed field names") {
  Graph c5 = make_cycle(5);
  json j = trace_to_json(paper_vs_stingy(c5));
  for (const char* key : {"n", "m", "moves", "total", "bound_ok", "t1", "k"})
    CHECK(j.contains(key));
  const json& mv = j.at("moves").at(0);
  for (const char* key : {"t", "player", "vertex", "pi_after", "drop", "phase", "detail"})
    CHECK(mv.contains(key));
  CHECK(j.at("meta").contains("seed"));
  CHECK(j.at("t1") == 0);
  CHECK(j.at("k") == 1);
}

TEST_CASE("audit passes clean traces") {
  for (int n : {5, 8, 11}) {
    Graph g = make_cycle(n);
    AuditReport rep = audit_trace(paper_vs_stingy(g));
    INFO((rep.problems.empty() ? "" : rep.problems.front()));
    CHECK(rep.ok);
  }
  Graph mixed = make_disjoint_union({make_cycle(5), make_random_min_deg2(9, 2, 3)});
  AuditReport rep = audit_trace(paper_vs_stingy(mixed));
  INFO((rep.problems.empty() ? "" : rep.problems.front()));
  CHECK(rep.ok);
}

TEST_CASE("audit accepts an external graph and rejects a wrong one") {
  Graph g = make_cycle(7);
  MatchTrace tr = paper_vs_stingy(g);
  CHECK(audit_trace(tr, &g).ok);
  Graph wrong = make_cycle(8);
  CHECK_FALSE(audit_trace(tr, &wrong).ok);
}

TEST_CASE("audit flags tampered pi_after at the right move") {
  Graph g = make_random_min_deg2(10, 2, 9);
  MatchTrace tr = paper_vs_stingy(g);
  tr.moves[1].pi_after -= 1;
  AuditReport rep = audit_trace(tr);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.problems.front().rfind("t=2:", 0) == 0);
}

TEST_CASE("audit flags inconsistent totals, bounds and phases") {
  Graph g = make_cycle(9);
  MatchTrace tr = paper_vs_stingy(g);
  SECTION("bound flag") {
    tr.bound_ok = !tr.bound_ok;
    CHECK_FALSE(audit_trace(tr).ok);
  }
  SECTION("forged k") {
    if (tr.k) {
      tr.k = *tr.k + 1;
      CHECK_FALSE(audit_trace(tr).ok);
    }
  }
  SECTION("truncated trace") {
    tr.moves.pop_back();
    tr.total -= 1;
    CHECK_FALSE(audit_trace(tr).ok);  // replay does not reach game over
  }
}

TEST_CASE("audit of a C5 match reports the reactive accounting") {
  Graph c5 = make_cycle(5);
  MatchTrace tr = paper_vs_stingy(c5);
  CHECK(tr.t1 == 0);
  CHECK(tr.k == 1);
  CHECK(tr.total == 3);  // 3 <= 2k+1
  CHECK(audit_trace(tr).ok);
}

TEST_CASE("audit checks non-paper traces for legality and minimum drop only") {
  Graph g = make_cycle(10);
  auto solver = std::make_shared<Solver>(g);
  MatchTrace tr = run_match(g, make_optimal_policy(solver), make_optimal_policy(solver),
                            {"optimal", "optimal", {}, 24});
  CHECK(audit_trace(tr).ok);
  tr.moves[0].drop += 1;
  CHECK_FALSE(audit_trace(tr).ok);
}
