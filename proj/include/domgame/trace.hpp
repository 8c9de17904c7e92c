#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "domgame/strategy.hpp"

namespace domgame {

using json = nlohmann::json;

inline json trace_to_json(const MatchTrace& tr) {
  json moves = json::array();
  for (const MoveRecord& m : tr.moves) {
    moves.push_back({{"t", m.t},
                     {"player", std::string(1, m.player)},
                     {"vertex", m.vertex},
                     {"pi_after", m.pi_after},
                     {"drop", m.drop},
                     {"phase", m.phase == Phase::Active ? "active" : "reactive"},
                     {"detail", m.detail}});
  }
  json edges = json::array();
  for (auto [u, v] : tr.edges) edges.push_back({u, v});
  json j = {{"n", tr.n},
            {"m", tr.m},
            {"edges", edges},
            {"moves", moves},
            {"total", tr.total},
            {"bound_ok", tr.bound_ok},
            {"t1", tr.t1 ? json(*tr.t1) : json(nullptr)},
            {"k", tr.k ? json(*tr.k) : json(nullptr)}};
  j["meta"] = {{"dominator", tr.meta.dominator},
               {"staller", tr.meta.staller},
               {"seed", tr.meta.seed ? json(*tr.meta.seed) : json(nullptr)},
               {"cap", tr.meta.cap}};
  if (tr.violation_fallback) j["violation_fallback"] = true;
  return j;
}

inline MatchTrace trace_from_json(const json& j) {
  MatchTrace tr;
  tr.n = j.at("n").get<int>();
  tr.m = j.at("m").get<int>();
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      tr.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  for (const auto& m : j.at("moves")) {
    MoveRecord r;
    r.t = m.at("t").get<int>();
    r.player = m.at("player").get<std::string>().at(0);
    r.vertex = m.at("vertex").get<int>();
    r.pi_after = m.at("pi_after").get<int>();
    r.drop = m.at("drop").get<int>();
    r.phase = m.at("phase").get<std::string>() == "reactive" ? Phase::Reactive
                                                             : Phase::Active;
    r.detail = m.value("detail", "");
    tr.moves.push_back(std::move(r));
  }
  tr.total = j.at("total").get<int>();
  tr.bound_ok = j.at("bound_ok").get<bool>();
  if (!j.at("t1").is_null()) tr.t1 = j.at("t1").get<int>();
  if (!j.at("k").is_null()) tr.k = j.at("k").get<int>();
  if (j.contains("meta")) {
    const auto& mt = j.at("meta");
    tr.meta.dominator = mt.value("dominator", "");
    tr.meta.staller = mt.value("staller", "");
    if (mt.contains("seed") && !mt.at("seed").is_null())
      tr.meta.seed = mt.at("seed").get<uint64_t>();
    tr.meta.cap = mt.value("cap", Solver::kDefaultCap);
  }
  tr.violation_fallback = j.value("violation_fallback", false);
  return tr;
}

struct AuditReport {
  bool ok = true;
  std::vector<std::string> problems;

  void fail(int t, const std::string& msg) {
    ok = false;
    problems.push_back("t=" + std::to_string(t) + ": " + msg);
  }
};

// Independently replays a trace: every color and potential is recomputed
// from scratch, so a trace that was tampered with (or produced by a buggy
// writer) diverges loudly. For paper-Dominator traces the discharging
// invariants are re-verified as well: drop >= 20 everywhere, surplus >= 0
// at stable checkpoints, a clean terminal structure at t1 with pi(t1) =
// 100k, and a reactive phase of at most 2k+1 moves.
inline AuditReport audit_trace(const MatchTrace& tr, const Graph* graph = nullptr) {
  AuditReport rep;
  Graph local;
  const Graph* g = graph;
  if (!g) {
    if (int(tr.edges.size()) != tr.m) {
      rep.fail(0, "trace carries no usable edge list; pass the graph explicitly");
      return rep;
    }
    local = Graph::from_edges(tr.n, tr.edges);
    g = &local;
  }
  if (g->n() != tr.n || g->m() != tr.m) {
    rep.fail(0, "graph size differs from trace header");
    return rep;
  }
  if (!tr.edges.empty() && g->edges() != tr.edges) {
    rep.fail(0, "graph edges differ from the trace");
    return rep;
  }

  const bool paper = tr.meta.dominator == "paper";
  GameState state = GameState::initial(*g);
  const int pi0 = 20 * g->n();
  int prev_pi = pi0;
  std::optional<int> t1;

  for (size_t i = 0; i < tr.moves.size(); ++i) {
    const MoveRecord& m = tr.moves[i];
    int t = int(i) + 1;
    if (m.t != t) {
      rep.fail(t, "move index out of sequence");
      return rep;
    }
    char expect = t % 2 == 1 ? 'D' : 'S';
    if (m.player != expect) rep.fail(t, "wrong player to move");
    if (!state.is_legal(m.vertex)) {
      rep.fail(t, "illegal move " + std::to_string(m.vertex));
      return rep;
    }
    state = state.apply(m.vertex);
    if (state.pi() != m.pi_after)
      rep.fail(t, "pi_after is " + std::to_string(m.pi_after) +
                      ", replay gives " + std::to_string(state.pi()));
    if (prev_pi - state.pi() != m.drop)
      rep.fail(t, "drop is " + std::to_string(m.drop) + ", replay gives " +
                      std::to_string(prev_pi - state.pi()));
    if (prev_pi - state.pi() < 20) rep.fail(t, "move drops potential by less than 20");
    prev_pi = state.pi();

    if (m.phase == Phase::Reactive && !t1) t1 = t - 1;
    if (m.phase == Phase::Active && t1) rep.fail(t, "active move after reactive phase");
    if (paper && m.phase == Phase::Active && t % 2 == 0) {
      // Mid-plan even positions (the next move continues a plan) may dip.
      bool mid_plan = i + 1 < tr.moves.size() &&
                      tr.moves[i + 1].detail.rfind("plan:cont", 0) == 0;
      int surplus = pi0 - state.pi() - 34 * t;
      if (!mid_plan && surplus < 0 && !tr.violation_fallback)
        rep.fail(t, "negative surplus " + std::to_string(surplus) +
                        " at a stable checkpoint");
    }
  }

  if (!state.over()) rep.fail(tr.total, "trace ends before the game is over");
  if (tr.total != int(tr.moves.size())) rep.fail(tr.total, "total differs from move count");
  if (tr.bound_ok != check_main_bound(tr.n, tr.total))
    rep.fail(tr.total, "bound_ok flag is inconsistent");

  if (paper && !tr.violation_fallback) {
    int claimed_t1 = tr.t1.value_or(tr.total);
    int claimed_k = tr.k.value_or(0);
    if (t1 && *t1 != claimed_t1)
      rep.fail(claimed_t1, "t1 differs from first reactive move");
    if (!t1 && tr.t1 && *tr.t1 != tr.total)
      rep.fail(*tr.t1, "trace claims t1 but has no reactive phase");
    if (!t1 && claimed_k != 0)
      rep.fail(tr.total, "trace claims k > 0 but has no reactive phase");
    // Re-derive the terminal structure at t1.
    GameState replay = GameState::initial(*g);
    for (int i = 0; i < claimed_t1; ++i) replay = replay.apply(tr.moves[i].vertex);
    if (t1) {
      TerminalReport term = verify_terminal_structure(replay);
      if (!term.clean())
        rep.fail(claimed_t1, "terminal structure violated: " +
                                 term.violations.front().claim);
      if (term.k() != claimed_k) rep.fail(claimed_t1, "k differs from structure");
      if (replay.pi() != 100 * claimed_k)
        rep.fail(claimed_t1, "pi(t1) is not 100k");
      int reactive_len = tr.total - claimed_t1;
      if (reactive_len > 2 * claimed_k + 1)
        rep.fail(tr.total, "reactive phase longer than 2k+1");
    }
    int end_surplus = pi0 - 0 - 34 * tr.total;
    if (!t1 && end_surplus < 0)
      rep.fail(tr.total, "game ended in active phase with negative surplus");
  }
  return rep;
}

}  // namespace domgame
