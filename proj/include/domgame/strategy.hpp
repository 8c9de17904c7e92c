#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "domgame/solver.hpp"
#include "domgame/state.hpp"

namespace domgame {

// ---------------------------------------------------------------------------
// Stable-state plan search
// ---------------------------------------------------------------------------

// A contingent Dominator move tree of depth at most 3 (D, S, D). `responses`
// maps every legal Staller reply to the first move to either "stable now"
// (nullopt) or a second Dominator vertex. The guarantee is the minimum
// cumulative potential drop over all branches, verified by replay.
struct Plan {
  int first = -1;
  std::map<int, std::optional<int>> responses;
  int guarantee = 0;
  int length = 1;  // 1, 2 or 3
};

// Exact integer form of the main bound: 17*T <= 10*n + 1.
inline bool check_main_bound(int n, int total_moves) {
  return 17 * total_moves <= 10 * n + 1;
}

namespace detail {

struct SearchNode {
  VertexSet dom;
  int pi = 0;
};

inline SearchNode search_apply(const Graph& g, const VertexSet& dom, int v) {
  SearchNode out;
  out.dom = dom | g.closed_neighborhood(v);
  out.pi = compute_colors(g, out.dom).pi;
  return out;
}

inline bool search_legal(const Graph& g, const VertexSet& dom, int v) {
  return !dom.contains_all(g.closed_neighborhood(v));
}

}  // namespace detail

// Searches for a plan that advances the game from one stable state to the
// next. A branch that ends after d further moves with cumulative drop D is
// acceptable iff
//   D >= 34*d - surplus            when the game is over or d is even,
//   D >= 34*(d+1) - 20 - surplus   when d is odd and the game goes on
// (Staller's forced reply costs at least 20 more). With surplus = 0 these
// are the thresholds 34, 48, 68 and 116. Staller branching is exhaustive;
// preference is shortest length, then maximum guarantee, then lowest
// vertices. Absence of a plan is a normal result and marks t1.
inline std::optional<Plan> find_stable_plan(const GameState& s, int surplus) {
  const Graph& g = s.graph();
  const int n = g.n();
  const int pi0 = s.pi();
  const int need1_over = 34 - surplus;
  const int need1_end = 48 - surplus;
  const int need2 = 68 - surplus;
  const int need3_over = 102 - surplus;
  const int need3_end = 116 - surplus;

  struct FirstMove {
    int v;
    detail::SearchNode node;
    bool over;
    int drop;
  };
  std::vector<FirstMove> firsts;
  for (int v = 0; v < n; ++v) {
    if (!detail::search_legal(g, s.dominated(), v)) continue;
    detail::SearchNode nd = detail::search_apply(g, s.dominated(), v);
    firsts.push_back({v, nd, nd.dom.is_full(), pi0 - nd.pi});
  }

  std::optional<Plan> best1;
  for (const FirstMove& f : firsts) {
    if (f.drop < (f.over ? need1_over : need1_end)) continue;
    if (best1 && f.drop <= best1->guarantee) continue;
    Plan p;
    p.first = f.v;
    p.length = 1;
    p.guarantee = f.drop;
    for (int r = 0; r < n; ++r)
      if (detail::search_legal(g, f.node.dom, r)) p.responses[r] = std::nullopt;
    best1 = std::move(p);
  }
  if (best1) return best1;

  std::optional<Plan> best2, best3;
  for (const FirstMove& f : firsts) {
    if (f.over) continue;  // a game-ending first move below need1_over is dead
    Plan p;
    p.first = f.v;
    p.length = 2;
    p.guarantee = std::numeric_limits<int>::max();
    bool ok = true;
    for (int r = 0; r < n && ok; ++r) {
      if (!detail::search_legal(g, f.node.dom, r)) continue;
      detail::SearchNode nd2 = detail::search_apply(g, f.node.dom, r);
      int cum2 = pi0 - nd2.pi;
      if (cum2 >= need2) {
        p.responses[r] = std::nullopt;
        p.guarantee = std::min(p.guarantee, cum2);
        continue;
      }
      if (nd2.dom.is_full()) {
        ok = false;  // game over below the even-move bar: unsalvageable
        break;
      }
      p.length = 3;
      if (cum2 + nd2.pi < need3_over) {
        ok = false;  // even ending the game cannot reach the bar
        break;
      }
      int best_w = -1, best_cum = -1;
      for (int w = 0; w < n; ++w) {
        if (!detail::search_legal(g, nd2.dom, w)) continue;
        detail::SearchNode nd3 = detail::search_apply(g, nd2.dom, w);
        int cum3 = pi0 - nd3.pi;
        if (cum3 >= (nd3.dom.is_full() ? need3_over : need3_end) && cum3 > best_cum) {
          best_cum = cum3;
          best_w = w;
        }
      }
      if (best_w == -1) {
        ok = false;
        break;
      }
      p.responses[r] = best_w;
      p.guarantee = std::min(p.guarantee, best_cum);
    }
    if (!ok) continue;
    std::optional<Plan>& slot = p.length == 2 ? best2 : best3;
    if (!slot || p.guarantee > slot->guarantee) slot = std::move(p);
  }
  if (best2) return best2;
  return best3;
}

// ---------------------------------------------------------------------------
// Terminal structure predicates
// ---------------------------------------------------------------------------

struct Violation {
  std::string claim;
  std::vector<int> witness;
};

struct Configuration {
  enum class Kind { WhiteC5, SixCycle };
  Kind kind;
  // WhiteC5: the cycle in order. SixCycle: u, x, y, v, y', x' where u-x-y-v
  // closes through y'-x' and u, v are the blue anchors.
  std::vector<int> vertices;
};

struct TerminalReport {
  std::vector<Configuration> configs;
  std::vector<Violation> violations;
  int k() const { return int(configs.size()); }
  bool clean() const { return violations.empty(); }
};

// Evaluates every terminal-structure predicate on the current position. At
// t1 (no stable plan exists) on a minimum-degree-2 graph, all of them must
// hold, leaving the white vertices partitioned into isolated white
// five-cycles and two-pair six-cycles. Violations are data, not errors; at
// most one witness per claim id is reported.
inline TerminalReport verify_terminal_structure(const GameState& s) {
  const Graph& g = s.graph();
  const int n = g.n();
  const ColorAssignment& col = s.colors();
  const VertexSet& W = col.whites;
  WhiteStructure ws = white_structure(s);
  TerminalReport rep;

  auto violate = [&](const std::string& claim, std::vector<int> witness) {
    for (const Violation& v : rep.violations)
      if (v.claim == claim) return;
    rep.violations.push_back({claim, std::move(witness)});
  };
  auto is_blue = [&](int v) { return col.colors[v] == Color::Blue; };
  auto is_orange = [&](int v) { return col.colors[v] == Color::Orange; };

  // White vertices of three or more white neighbors, blues of four or more.
  for (int v = 0; v < n; ++v) {
    int wd = g.neighbors(v).count_and(W);
    if (W.test(v) && wd >= 3) violate("white-three-white-neighbours", {v});
    if (is_blue(v) && wd >= 4) violate("blue-four-white-neighbours", {v});
    if (is_blue(v) && wd >= 3) violate("blue-three-white-neighbours", {v});
  }

  // H is the white part of G minus the excluded white 4-/5-cycle components.
  VertexSet hset = W;
  for (const auto& comp : ws.excluded)
    for (int v : comp) hset.reset(v);

  // No path xyz in H with x's white neighbors contained in {y, z}.
  for (int x : hset) {
    VertexSet nx = g.neighbors(x) & hset;
    for (int y : nx) {
      VertexSet nz = g.neighbors(y) & hset;
      for (int z : nz) {
        if (z == x) continue;
        VertexSet yz(n);
        yz.set(y);
        yz.set(z);
        if (yz.contains_all(nx)) violate("path-xyz", {x, y, z});
      }
    }
  }

  // Cycle components of H.
  VertexSet c5_vertices(n);
  for (const WhiteComponent& c : ws.components) {
    if (c.kind != ComponentKind::Cycle) continue;
    int len = c.cycle_length;
    if (len >= 9) violate("cycle-nine-or-longer", c.vertices);
    else if (len == 8) violate("cycle-eight", c.vertices);
    else if (len == 7) violate("cycle-seven", c.vertices);
    else if (len == 6) violate("cycle-six", c.vertices);
    else if (len == 5) violate("five-cycle-in-h", c.vertices);
    else if (len == 4) violate("cycle-four", c.vertices);
    if (len == 5)
      for (int v : c.vertices) c5_vertices.set(v);
  }

  // No two vertices on white five-cycles of H with a common blue neighbor.
  for (int u = 0; u < n; ++u)
    if (is_blue(u) && g.neighbors(u).count_and(c5_vertices) >= 2)
      violate("five-cycle-common-blue", {u});

  // Doubles, singles, oranges.
  for (int d : col.doubles) {
    VertexSet nb = g.neighbors(d);
    for (int u : nb)
      if (is_orange(u)) violate("double-orange-neighbour", {d, u});
    int blues = 0;
    for (int u : nb)
      if (is_blue(u)) ++blues;
    if (blues >= 2) violate("double-two-blue-neighbours", {d});
  }
  for (int x : col.singles) {
    bool b = false, o = false;
    int bw = -1;
    for (int u : g.neighbors(x)) {
      if (is_blue(u)) b = true, bw = u;
      if (is_orange(u)) o = true;
    }
    if (b && o) violate("single-blue-and-orange", {x});
    if (b) violate("single-blue-neighbour", {x, bw});
  }
  for (int v = 0; v < n; ++v) {
    if (g.neighbors(v).count_and(col.singles) >= 2) violate("two-single-neighbours", {v});
    if (is_orange(v)) violate("orange-exists", {v});
  }
  for (int x : col.singles) {
    violate("single-exists", {x});
    break;
  }

  // No blue adjacent to both members of one pair; pairs must close into the
  // unique six-cycle u x y v y' x' with x', y' white.
  std::vector<std::pair<int, int>> pairs;
  for (const WhiteComponent& c : ws.components)
    if (c.kind == ComponentKind::Pair)
      pairs.emplace_back(c.vertices[0], c.vertices[1]);

  std::vector<std::vector<int>> six_cycles;
  std::vector<VertexSet> six_sets;
  for (auto [x, y] : pairs) {
    VertexSet both = g.neighbors(x) & g.neighbors(y);
    for (int u : both)
      if (is_blue(u)) violate("blue-adjacent-to-both-doubles", {u, x, y});

    auto sole_blue = [&](int d) {
      int found = -1, cnt = 0;
      for (int u : g.neighbors(d))
        if (is_blue(u)) ++cnt, found = u;
      return cnt == 1 ? found : -1;
    };
    int u = sole_blue(x), v = sole_blue(y);
    bool ok = u != -1 && v != -1 && u != v;
    int x2 = -1, y2 = -1;
    if (ok) {
      auto other_white = [&](int anchor, int self) {
        VertexSet wn = g.neighbors(anchor) & W;
        wn.reset(self);
        return wn.count() == 1 ? wn.first() : -1;
      };
      x2 = other_white(u, x);
      y2 = other_white(v, y);
      ok = x2 != -1 && y2 != -1 && x2 != y2 && x2 != y && y2 != x &&
           g.has_edge(x2, y2) && col.doubles.test(x2) && col.doubles.test(y2);
    }
    if (!ok) {
      violate("pair-not-in-six-cycle", {x, y});
      continue;
    }
    std::vector<int> cyc = {u, x, y, v, y2, x2};
    VertexSet cs(n);
    for (int w : cyc) cs.set(w);
    bool seen = false;
    for (const VertexSet& prev : six_sets)
      if (prev == cs) seen = true;
    if (!seen) {
      six_cycles.push_back(cyc);
      six_sets.push_back(cs);
    }
  }

  // Isolated all-white four-cycles must not survive to t1.
  for (const auto& comp : ws.excluded)
    if (comp.size() == 4) violate("isolated-white-four-cycle", comp);

  // Assemble configurations: excluded white five-cycles plus six-cycles.
  for (const auto& comp : ws.excluded)
    if (comp.size() == 5)
      rep.configs.push_back({Configuration::Kind::WhiteC5, comp});
  // Canonicalize the six-cycle so its lowest double is the pair anchor x.
  for (auto& cyc : six_cycles) {
    int lo = std::min({cyc[1], cyc[2], cyc[4], cyc[5]});
    std::vector<int> c = cyc;
    if (lo == cyc[2]) c = {cyc[3], cyc[2], cyc[1], cyc[0], cyc[5], cyc[4]};
    if (lo == cyc[4]) c = {cyc[3], cyc[4], cyc[5], cyc[0], cyc[1], cyc[2]};
    if (lo == cyc[5]) c = {cyc[0], cyc[5], cyc[4], cyc[3], cyc[2], cyc[1]};
    rep.configs.push_back({Configuration::Kind::SixCycle, c});
  }
  std::sort(rep.configs.begin(), rep.configs.end(),
            [](const Configuration& a, const Configuration& b) {
              return *std::min_element(a.vertices.begin(), a.vertices.end()) <
                     *std::min_element(b.vertices.begin(), b.vertices.end());
            });

  // When clean, every white vertex must sit in exactly one configuration.
  if (rep.clean()) {
    VertexSet covered(n);
    bool overlap = false;
    for (const Configuration& c : rep.configs)
      for (int v : c.vertices) {
        if (W.test(v)) {
          if (covered.test(v)) overlap = true;
          covered.set(v);
        }
      }
    if (overlap || !(covered == W)) violate("unclassified-white", {});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Session and policies
// ---------------------------------------------------------------------------

enum class Phase { Active, Reactive };

// Running totals of the discharging argument. pi(0) = 20n and the active
// phase maintains pi(0) - pi(t) >= 34t at its checkpoints; surplus is the
// slack, which may dip below zero mid-plan but never at a checkpoint.
struct Ledger {
  int pi0 = 0;
  int t = 0;
  int pi_t = 0;
  std::optional<int> t1;
  int surplus() const { return pi0 - pi_t - 34 * t; }
};

struct Session {
  GameState state;
  Ledger ledger;
  Phase phase = Phase::Active;
  std::optional<TerminalReport> terminal;
  std::optional<Plan> pending;  // plan whose first move has been played
  int k = 0;

  std::vector<VertexSet> config_sets;
  std::vector<bool> config_touched;
  int last_move = -1;
  bool used_paper_strategy = false;
  bool violation_fallback = false;

  // One record per stable checkpoint seen by the paper Dominator; feeds the
  // plan-soundness tests.
  struct Checkpoint {
    int t;
    int surplus;
    VertexSet dominated;
    std::optional<Plan> plan;
  };
  std::vector<Checkpoint> checkpoints;

  static Session start(const Graph& g) {
    Session s;
    s.state = GameState::initial(g);
    s.ledger.pi0 = 20 * g.n();
    s.ledger.pi_t = s.ledger.pi0;
    return s;
  }

  void advance(int v) {
    state = state.apply(v);
    ledger.t += 1;
    ledger.pi_t = state.pi();
    last_move = v;
    if (phase == Phase::Reactive)
      for (size_t c = 0; c < config_sets.size(); ++c)
        if (config_sets[c].test(v)) config_touched[c] = true;
  }
};

struct Choice {
  int vertex;
  std::string detail;
};

using PolicyFn = std::function<Choice(Session&)>;

// Reactive-phase move: if a configuration has been played in and still has
// white vertices, clear it with one closed neighborhood (Staller's latest
// target first); otherwise open the lowest untouched configuration — any
// vertex of a white five-cycle, the blue anchor u of a six-cycle.
inline Choice reactive_move(Session& sess) {
  const Graph& g = sess.state.graph();
  const VertexSet& W = sess.state.colors().whites;

  int target = -1;
  if (sess.last_move >= 0) {
    for (size_t c = 0; c < sess.config_sets.size(); ++c)
      if (sess.config_sets[c].test(sess.last_move) &&
          (sess.config_sets[c] & W).any())
        target = int(c);
  }
  if (target < 0) {
    for (size_t c = 0; c < sess.config_sets.size(); ++c)
      if (sess.config_touched[c] && (sess.config_sets[c] & W).any()) {
        target = int(c);
        break;
      }
  }
  if (target >= 0) {
    VertexSet remaining = sess.config_sets[target] & W;
    for (int v = 0; v < g.n(); ++v)
      if (g.closed_neighborhood(v).contains_all(remaining))
        return {v, "reactive:clear:cfg=" + std::to_string(target)};
    throw StrategyAssertion(
        "touched configuration not clearable in one move; terminal "
        "classification must be wrong");
  }
  for (size_t c = 0; c < sess.config_sets.size(); ++c) {
    if ((sess.config_sets[c] & W).any()) {
      const Configuration& cfg = sess.terminal->configs[c];
      int v = cfg.vertices[0];  // C5: lowest vertex; six-cycle: anchor u
      return {v, "reactive:open:cfg=" + std::to_string(c)};
    }
  }
  throw StrategyAssertion("reactive move requested but no whites remain");
}

// The paper Dominator. Active phase: continue a pending plan or search for
// a new one; when none exists, verify the terminal structure and switch to
// the reactive phase. A structure violation (unreachable for minimum degree
// 2 if the theory holds) falls back to greedy potential reduction and flags
// the session.
inline Choice dominator_paper(Session& sess) {
  sess.used_paper_strategy = true;
  if (sess.state.over()) throw MoveError("dominator asked to move in a finished game");

  if (sess.phase == Phase::Reactive) return reactive_move(sess);

  if (sess.pending) {
    Plan plan = *sess.pending;
    sess.pending.reset();
    auto it = plan.responses.find(sess.last_move);
    if (it == plan.responses.end())
      throw StrategyAssertion("staller reply missing from plan responses");
    if (it->second) return {*it->second, "plan:cont"};
    // stable-now branch: fall through to a fresh checkpoint
  }

  int surplus = sess.ledger.surplus();
  if (surplus < 0 && !sess.violation_fallback)
    throw StrategyAssertion("negative surplus at a stable checkpoint");
  std::optional<Plan> plan = find_stable_plan(sess.state, surplus);
  sess.checkpoints.push_back({sess.ledger.t, surplus, sess.state.dominated(), plan});
  if (plan) {
    std::string detail = "plan:start:len=" + std::to_string(plan->length) +
                         ":g=" + std::to_string(plan->guarantee);
    if (!plan->responses.empty()) sess.pending = plan;
    return {plan->first, detail};
  }

  TerminalReport rep = verify_terminal_structure(sess.state);
  if (rep.clean()) {
    sess.phase = Phase::Reactive;
    sess.terminal = rep;
    sess.ledger.t1 = sess.ledger.t;
    sess.k = rep.k();
    if (sess.state.pi() != 100 * sess.k)
      throw StrategyAssertion("terminal potential differs from 100k");
    sess.config_sets.clear();
    sess.config_touched.assign(rep.configs.size(), false);
    for (const Configuration& c : rep.configs) {
      VertexSet cs(sess.state.graph().n());
      for (int v : c.vertices) cs.set(v);
      sess.config_sets.push_back(cs);
    }
    return reactive_move(sess);
  }

  sess.violation_fallback = true;
  VertexSet legal = sess.state.legal_moves();
  int best = -1, best_drop = -1;
  for (int v : legal) {
    int d = sess.state.potential_drop(v);
    if (d > best_drop) {
      best_drop = d;
      best = v;
    }
  }
  return {best, "fallback:greedy:" + rep.violations.front().claim};
}

inline PolicyFn make_paper_dominator() {
  return [](Session& s) { return dominator_paper(s); };
}

inline PolicyFn make_greedy_dominator() {
  return [](Session& s) {
    int best = -1, best_drop = -1;
    for (int v : s.state.legal_moves()) {
      int d = s.state.potential_drop(v);
      if (d > best_drop) {
        best_drop = d;
        best = v;
      }
    }
    return Choice{best, "greedy"};
  };
}

// Plays solver-perfect moves for whichever side is to move.
inline PolicyFn make_optimal_policy(std::shared_ptr<Solver> solver) {
  return [solver](Session& s) {
    Mover m = s.ledger.t % 2 == 0 ? Mover::Dominator : Mover::Staller;
    int v = solver->optimal_move(s.state.dominated(), m);
    return Choice{v, "optimal"};
  };
}

// Heuristic adversary for graphs beyond the solver cap: always the legal
// move of minimum potential drop.
inline PolicyFn make_stingy_staller() {
  return [](Session& s) {
    int best = -1, best_drop = std::numeric_limits<int>::max();
    for (int v : s.state.legal_moves()) {
      int d = s.state.potential_drop(v);
      if (d < best_drop) {
        best_drop = d;
        best = v;
      }
    }
    return Choice{best, "stingy"};
  };
}

inline PolicyFn make_random_staller(uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](Session& s) {
    std::vector<int> legal;
    for (int v : s.state.legal_moves()) legal.push_back(v);
    int v = legal[size_t((*rng)() % legal.size())];
    return Choice{v, "random"};
  };
}

// ---------------------------------------------------------------------------
// Match runner
// ---------------------------------------------------------------------------

struct MatchMeta {
  std::string dominator;
  std::string staller;
  std::optional<uint64_t> seed;
  int cap = Solver::kDefaultCap;
};

struct MoveRecord {
  int t = 0;
  char player = 'D';
  int vertex = -1;
  int pi_after = 0;
  int drop = 0;
  Phase phase = Phase::Active;
  std::string detail;
};

// Full per-move ledger of one played game.
struct MatchTrace {
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;
  MatchMeta meta;
  std::vector<MoveRecord> moves;
  int total = 0;
  bool bound_ok = false;
  std::optional<int> t1;
  std::optional<int> k;
  bool violation_fallback = false;
  std::vector<Session::Checkpoint> checkpoints;  // paper Dominator only
};

// Alternates Dominator (moves 1, 3, ...) and Staller until every vertex is
// dominated. Every returned vertex is checked for legality; a policy that
// cheats aborts the match via MoveError.
inline MatchTrace run_match(const Graph& g, const PolicyFn& dominator,
                            const PolicyFn& staller, MatchMeta meta = {}) {
  if (has_isolated_vertex(g))
    throw ParamError("the game needs a graph without isolated vertices");
  Session sess = Session::start(g);
  MatchTrace tr;
  tr.n = g.n();
  tr.m = g.m();
  tr.edges = g.edges();
  tr.meta = std::move(meta);
  while (!sess.state.over()) {
    bool dominator_turn = sess.ledger.t % 2 == 0;
    Choice c = dominator_turn ? dominator(sess) : staller(sess);
    if (!sess.state.is_legal(c.vertex))
      throw MoveError(std::string(dominator_turn ? "dominator" : "staller") +
                      " policy returned illegal vertex " + std::to_string(c.vertex));
    int pi_before = sess.state.pi();
    sess.advance(c.vertex);
    tr.moves.push_back({sess.ledger.t, dominator_turn ? 'D' : 'S', c.vertex,
                        sess.state.pi(), pi_before - sess.state.pi(), sess.phase,
                        c.detail});
  }
  tr.total = sess.ledger.t;
  tr.bound_ok = check_main_bound(g.n(), tr.total);
  if (sess.used_paper_strategy) {
    if (sess.ledger.t1) {
      tr.t1 = sess.ledger.t1;
      tr.k = sess.k;
    } else {
      tr.t1 = tr.total;  // the game ended inside the active phase
      tr.k = 0;
    }
  }
  tr.violation_fallback = sess.violation_fallback;
  tr.checkpoints = std::move(sess.checkpoints);
  return tr;
}

}  // namespace domgame
