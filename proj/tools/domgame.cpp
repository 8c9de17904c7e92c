// Command-line front end: generate graphs, solve exact game values, play
// strategy matches, audit traces, and verify a whole corpus.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input/parameters,
// 3 solver capacity, 4 illegal policy move, 5 audit mismatch.

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "domgame/edge_list.hpp"
#include "domgame/generate.hpp"
#include "domgame/solver.hpp"
#include "domgame/trace.hpp"
#include "domgame/transversal.hpp"

namespace fs = std::filesystem;
using namespace domgame;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParamError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParamError("cannot write " + path);
  out << content;
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

int to_int(const std::string& s) {
  size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw ParamError("not an integer: " + s);
  return v;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

void write_corpus(const std::string& dir) {
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const Graph& g) {
    write_file(dir + "/" + name + ".g", emit_edge_list(g));
  };
  for (int n = 4; n <= 16; ++n) {
    char buf[32];
    snprintf(buf, sizeof buf, "cycle_%02d", n);
    put(buf, make_cycle(n));
  }
  for (int n = 2; n <= 16; ++n) {
    char buf[32];
    snprintf(buf, sizeof buf, "path_%02d", n);
    put(buf, make_path(n));
  }
  put("complete_04", make_complete(4));
  put("complete_05", make_complete(5));
  put("theta_1_2_2", make_theta(1, 2, 2));
  put("theta_1_3_3", make_theta(1, 3, 3));
  put("theta_2_2_3", make_theta(2, 2, 3));
  put("theta_2_3_4", make_theta(2, 3, 4));
  put("theta_3_4_4", make_theta(3, 4, 4));
  Graph k1 = Graph::from_edges(1, {});
  put("legs_k1", make_legs(k1));
  put("legs_k2", make_legs(make_complete(2)));
  put("legs_p3", make_legs(make_path(3)));
  put("legs_c3", make_legs(make_cycle(3)));
  put("rand_12_3_s1", make_random_min_deg2(12, 3, 1));
  put("rand_13_4_s2", make_random_min_deg2(13, 4, 2));
  put("rand_14_5_s1", make_random_min_deg2(14, 5, 1));
  put("rand_15_3_s3", make_random_min_deg2(15, 3, 3));
  put("rand_16_4_s4", make_random_min_deg2(16, 4, 4));
  put("rand_17_5_s5", make_random_min_deg2(17, 5, 5));
  put("rand_18_4_s6", make_random_min_deg2(18, 4, 6));
  put("c5x2", make_disjoint_copies(make_cycle(5), 2));
  put("c5x3", make_disjoint_copies(make_cycle(5), 3));
  put("c6config", make_c6_config());
  put("c6config_x2", make_disjoint_copies(make_c6_config(), 2));
  put("c5_c6config", make_disjoint_union({make_cycle(5), make_c6_config()}));
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& base, uint64_t seed, const std::string& out,
            bool corpus) {
  if (corpus) {
    if (out.empty()) throw ParamError("--corpus needs -o <directory>");
    write_corpus(out);
    std::cout << "corpus written to " << out << "\n";
    return 0;
  }
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw ParamError(family + " takes " + std::to_string(k) + " parameter(s)");
  };
  std::string text;
  if (family == "cnh") {
    if (base.empty()) throw ParamError("cnh needs --base <graph file>");
    need(0);
    text = emit_hypergraph(cnh(load_graph(base)));
  } else {
    Graph g;
    if (family == "cycle") {
      need(1);
      g = make_cycle(to_int(params[0]));
    } else if (family == "path") {
      need(1);
      g = make_path(to_int(params[0]));
    } else if (family == "complete") {
      need(1);
      g = make_complete(to_int(params[0]));
    } else if (family == "theta") {
      need(3);
      g = make_theta(to_int(params[0]), to_int(params[1]), to_int(params[2]));
    } else if (family == "legs") {
      need(0);
      if (base.empty()) throw ParamError("legs needs --base <graph file>");
      g = make_legs(load_graph(base));
    } else if (family == "copies") {
      need(1);
      if (base.empty()) throw ParamError("copies needs --base <graph file>");
      g = make_disjoint_copies(load_graph(base), to_int(params[0]));
    } else if (family == "random-mindeg2") {
      need(2);
      g = make_random_min_deg2(to_int(params[0]), to_int(params[1]), seed);
    } else if (family == "c6config") {
      need(0);
      g = make_c6_config();
    } else {
      throw ParamError("unknown family: " + family);
    }
    text = emit_edge_list(g);
  }
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

int cmd_solve(const std::string& path, bool hypergraph, int cap) {
  using clock = std::chrono::steady_clock;
  json out;
  auto start = clock::now();
  if (hypergraph) {
    Hypergraph h = parse_hypergraph(read_file(path));
    TransversalSolver s1(h, cap), s2(h, cap);
    out["n"] = h.n();
    out["k"] = h.edge_count();
    out["tau_g"] = s1.game_value(TMover::EdgeHitter);
    out["tau_g_prime"] = s2.game_value(TMover::Staller);
    out["nodes"] = s1.nodes() + s2.nodes();
  } else {
    Graph g = load_graph(path);
    Solver s(g, cap);
    out["n"] = g.n();
    out["m"] = g.m();
    out["gamma_g"] = s.game_value(Mover::Dominator);
    out["gamma_g_prime"] = s.game_value(Mover::Staller);
    out["nodes"] = s.nodes();
  }
  out["millis"] =
      std::chrono::duration<double, std::milli>(clock::now() - start).count();
  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// play
// ---------------------------------------------------------------------------

PolicyFn make_human_staller() {
  if (!isatty(fileno(stdin)))
    throw ParamError("--staller human needs an interactive terminal");
  return [](Session& sess) {
    const GameState& s = sess.state;
    std::cout << "pi = " << s.pi() << ", your legal moves:\n";
    for (int v : s.legal_moves())
      std::cout << "  " << v << " (" << color_name(s.colors().colors[v])
                << ", drop " << s.potential_drop(v) << ")\n";
    for (;;) {
      std::cout << "staller> " << std::flush;
      int v;
      if (!(std::cin >> v)) throw ParamError("no input; aborting");
      if (s.is_legal(v)) return Choice{v, "human"};
      std::cout << "illegal move\n";
    }
  };
}

struct PolicyChoice {
  PolicyFn fn;
  std::string name;
  std::optional<uint64_t> seed;
};

PolicyChoice parse_policy(const std::string& spec, bool dominator_side,
                          const Graph& g, int cap,
                          std::shared_ptr<Solver>& solver_cache) {
  auto solver = [&]() {
    if (!solver_cache) solver_cache = std::make_shared<Solver>(g, cap);
    return solver_cache;
  };
  if (spec == "optimal") return {make_optimal_policy(solver()), "optimal", {}};
  if (dominator_side) {
    if (spec == "paper") return {make_paper_dominator(), "paper", {}};
    if (spec == "greedy") return {make_greedy_dominator(), "greedy", {}};
    throw ParamError("unknown dominator policy: " + spec);
  }
  if (spec == "stingy") return {make_stingy_staller(), "stingy", {}};
  if (spec == "human") return {make_human_staller(), "human", {}};
  if (spec.rfind("random:", 0) == 0) {
    uint64_t seed = std::stoull(spec.substr(7));
    return {make_random_staller(seed), "random", seed};
  }
  if (spec == "random") return {make_random_staller(0), "random", 0};
  throw ParamError("unknown staller policy: " + spec);
}

int cmd_play(const std::string& path, const std::string& dom_spec,
             const std::string& stall_spec, const std::string& out, int cap) {
  Graph g = load_graph(path);
  std::shared_ptr<Solver> solver;
  PolicyChoice dom = parse_policy(dom_spec, true, g, cap, solver);
  PolicyChoice stall = parse_policy(stall_spec, false, g, cap, solver);
  MatchMeta meta{dom.name, stall.name, stall.seed, cap};
  MatchTrace tr = run_match(g, dom.fn, stall.fn, meta);
  json j = trace_to_json(tr);
  // Disconnected inputs (disjoint copies of a candidate graph) additionally
  // get per-component move counts; nothing is asserted about them.
  auto comps = components(g);
  std::string comp_note;
  if (comps.size() > 1) {
    std::vector<int> owner(g.n()), count(comps.size(), 0);
    for (size_t c = 0; c < comps.size(); ++c)
      for (int v : comps[c]) owner[v] = int(c);
    for (const MoveRecord& m : tr.moves) ++count[owner[m.vertex]];
    j["component_moves"] = count;
    for (size_t c = 0; c < comps.size(); ++c)
      comp_note += (c ? "," : " component_moves=") + std::to_string(count[c]);
  }
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_file(out, j.dump(2) + "\n");
    std::cout << "total=" << tr.total << " bound_ok=" << (tr.bound_ok ? "true" : "false");
    if (tr.t1) std::cout << " t1=" << *tr.t1 << " k=" << *tr.k;
    std::cout << comp_note << " -> " << out << "\n";
  }
  if (min_degree(g) >= 2 && !tr.bound_ok) {
    std::cerr << "bound violated on a minimum-degree-2 input\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyRow {
  std::string name;
  int n = 0, m = 0, mindeg = 0;
  std::optional<int> gamma_g, gamma_g_prime;
  std::string formula = "-";  // cycle/complete closed forms
  std::string tau = "-";      // transversal reduction identity
  std::string ham = "-";      // Hamiltonian-path ceiling bound
  std::optional<int> total_optimal;
  int total_stingy = 0;
  std::vector<int> total_random;
  bool bound_ok = true;
  bool assertions_ok = true;
  bool fallback = false;
  std::vector<std::string> notes;

  bool passed() const {
    return bound_ok && assertions_ok && formula != "FAIL" && tau != "FAIL" &&
           ham != "FAIL";
  }
};

VerifyRow verify_one(const std::string& name, const Graph& g, int cap) {
  VerifyRow row;
  row.name = name;
  row.n = g.n();
  row.m = g.m();
  row.mindeg = min_degree(g);
  const bool deg2 = row.mindeg >= 2;

  if (g.n() <= cap) {
    Solver s(g, cap);
    row.gamma_g = s.game_value(Mover::Dominator);
    row.gamma_g_prime = s.game_value(Mover::Staller);

    if (is_cycle_graph(g)) {
      int expect = (g.n() + 1) / 2 - (g.n() % 4 == 3 ? 1 : 0);
      row.formula = *row.gamma_g == expect ? "ok" : "FAIL";
    } else if (is_complete_graph(g) && g.n() >= 1) {
      row.formula = *row.gamma_g == 1 ? "ok" : "FAIL";
    }
    if (g.n() <= 14) {
      Hypergraph h = cnh(g);
      bool ok = tau_g(h, TMover::EdgeHitter) == *row.gamma_g &&
                tau_g(h, TMover::Staller) == *row.gamma_g_prime;
      row.tau = ok ? "ok" : "FAIL";
    }
    if (g.n() <= 24 && has_hamiltonian_path(g)) {
      int ceiling = (10 * g.n() + 16) / 17;
      row.ham = *row.gamma_g <= ceiling ? "ok" : "FAIL";
    }
    if (deg2 && 17 * *row.gamma_g > 10 * g.n() + 1) {
      row.bound_ok = false;
      row.notes.push_back("solver value breaks the main bound");
    }
  }

  auto play = [&](const PolicyFn& stall, const std::string& sname,
                  std::optional<uint64_t> seed) -> int {
    MatchTrace tr = run_match(g, make_paper_dominator(), stall,
                              {"paper", sname, seed, cap});
    row.fallback = row.fallback || tr.violation_fallback;
    AuditReport audit = audit_trace(tr, &g);
    if (!audit.ok) {
      row.assertions_ok = false;
      row.notes.push_back(sname + ": " + audit.problems.front());
    }
    if (deg2 && !tr.bound_ok) {
      row.bound_ok = false;
      row.notes.push_back(sname + ": strategy total breaks the main bound");
    }
    return tr.total;
  };

  if (g.n() <= cap) {
    auto solver = std::make_shared<Solver>(g, cap);
    row.total_optimal = play(make_optimal_policy(solver), "optimal", {});
  }
  row.total_stingy = play(make_stingy_staller(), "stingy", {});
  for (uint64_t seed = 1; seed <= 5; ++seed)
    row.total_random.push_back(play(make_random_staller(seed), "random", seed));
  return row;
}

int cmd_verify(const std::string& dir, int cap, bool as_json, bool as_csv,
               int jobs) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".g") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ParamError("no .g files in " + dir);

  std::vector<VerifyRow> rows(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      Graph g = load_graph(files[i]);
      rows[i] = verify_one(fs::path(files[i]).stem().string(), g, cap);
    }
  };
  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int failures = 0;
  auto fmt_opt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  if (as_json) {
    json out = json::array();
    for (const VerifyRow& r : rows) {
      json jr = {{"name", r.name},       {"n", r.n},
                 {"m", r.m},             {"min_degree", r.mindeg},
                 {"formula", r.formula}, {"tau", r.tau},
                 {"ham", r.ham},         {"total_stingy", r.total_stingy},
                 {"total_random", r.total_random},
                 {"bound_ok", r.bound_ok},
                 {"assertions_passed", r.assertions_ok},
                 {"fallback", r.fallback},
                 {"notes", r.notes}};
      jr["gamma_g"] = r.gamma_g ? json(*r.gamma_g) : json(nullptr);
      jr["gamma_g_prime"] = r.gamma_g_prime ? json(*r.gamma_g_prime) : json(nullptr);
      jr["total_optimal"] = r.total_optimal ? json(*r.total_optimal) : json(nullptr);
      out.push_back(jr);
      if (!r.passed()) ++failures;
    }
    std::cout << out.dump(2) << "\n";
  } else if (as_csv) {
    std::cout << "name,n,m,min_degree,gamma_g,gamma_g_prime,formula,tau,ham,"
                 "total_optimal,total_stingy,total_random,bound_ok,assertions_passed\n";
    for (const VerifyRow& r : rows) {
      std::string rnd;
      for (size_t i = 0; i < r.total_random.size(); ++i)
        rnd += (i ? ";" : "") + std::to_string(r.total_random[i]);
      std::cout << r.name << "," << r.n << "," << r.m << "," << r.mindeg << ","
                << fmt_opt(r.gamma_g) << "," << fmt_opt(r.gamma_g_prime) << ","
                << r.formula << "," << r.tau << "," << r.ham << ","
                << fmt_opt(r.total_optimal) << "," << r.total_stingy << ","
                << rnd << "," << (r.bound_ok ? "true" : "false") << ","
                << (r.assertions_ok ? "true" : "false") << "\n";
      if (!r.passed()) ++failures;
    }
  } else {
    printf("%-14s %3s %3s %2s %4s %4s %-7s %-4s %-4s %4s %4s %-10s %-5s %s\n",
           "name", "n", "m", "d", "gg", "gg'", "formula", "tau", "ham", "opt",
           "stg", "random", "bound", "asserts");
    for (const VerifyRow& r : rows) {
      std::string rnd;
      for (size_t i = 0; i < r.total_random.size(); ++i)
        rnd += (i ? "," : "") + std::to_string(r.total_random[i]);
      printf("%-14s %3d %3d %2d %4s %4s %-7s %-4s %-4s %4s %4d %-10s %-5s %s%s\n",
             r.name.c_str(), r.n, r.m, r.mindeg, fmt_opt(r.gamma_g).c_str(),
             fmt_opt(r.gamma_g_prime).c_str(), r.formula.c_str(), r.tau.c_str(),
             r.ham.c_str(), fmt_opt(r.total_optimal).c_str(), r.total_stingy,
             rnd.c_str(), r.bound_ok ? "ok" : "FAIL",
             r.assertions_ok ? "ok" : "FAIL", r.fallback ? " [fallback]" : "");
      if (!r.passed()) ++failures;
      for (const std::string& note : r.notes)
        printf("    ! %s\n", note.c_str());
    }
    printf("%zu graphs, %d failing\n", rows.size(), failures);
  }
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

int cmd_audit(const std::string& trace_path, const std::string& graph_path) {
  json j = json::parse(read_file(trace_path));
  MatchTrace tr = trace_from_json(j);
  std::optional<Graph> g;
  if (!graph_path.empty()) g = load_graph(graph_path);
  AuditReport rep = audit_trace(tr, g ? &*g : nullptr);
  if (rep.ok) {
    std::cout << "ok, 0 mismatches (" << tr.total << " moves";
    if (tr.t1) std::cout << ", t1=" << *tr.t1 << ", k=" << *tr.k;
    std::cout << ")\n";
    return 0;
  }
  std::cout << rep.problems.size() << " mismatch(es); first: "
            << rep.problems.front() << "\n";
  return 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domination game laboratory"};
  app.require_subcommand(1);
  int cap = Solver::kDefaultCap;
  app.add_option("--cap", cap, "solver size cap (vertices)");

  auto* gen = app.add_subcommand("gen", "generate graphs or hypergraphs");
  std::string family, base, out;
  std::vector<std::string> params;
  uint64_t seed = 0;
  bool corpus = false;
  gen->add_option("family", family, "cycle|path|complete|theta|legs|copies|random-mindeg2|c6config|cnh");
  gen->add_option("params", params, "family parameters");
  gen->add_option("--base", base, "base graph file (legs, copies, cnh)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("-o,--output", out, "output file (default: stdout)");
  gen->add_flag("--corpus", corpus, "write the standard corpus into -o <dir>");

  auto* solve = app.add_subcommand("solve", "exact game values by minimax");
  std::string solve_path;
  bool hyper = false;
  solve->add_option("file", solve_path, "edge-list graph (or hypergraph) file")
      ->required();
  solve->add_flag("--hypergraph", hyper, "solve the transversal game instead");

  auto* play = app.add_subcommand("play", "run one strategy match");
  std::string play_path, dom_spec = "paper", stall_spec = "stingy", play_out;
  play->add_option("file", play_path, "edge-list graph file")->required();
  play->add_option("--dominator", dom_spec, "paper|optimal|greedy");
  play->add_option("--staller", stall_spec, "optimal|random:<seed>|stingy|human");
  play->add_option("-o,--output", play_out, "trace output file");

  auto* verify = app.add_subcommand("verify", "verify a corpus directory");
  std::string verify_dir;
  bool vjson = false, vcsv = false;
  int jobs = int(std::thread::hardware_concurrency());
  verify->add_option("dir", verify_dir, "directory of .g files")->required();
  verify->add_flag("--json", vjson, "JSON report");
  verify->add_flag("--csv", vcsv, "CSV report");
  verify->add_option("--jobs", jobs, "parallel per-graph jobs");

  auto* audit = app.add_subcommand("audit", "replay and re-verify a trace");
  std::string audit_path, audit_graph;
  audit->add_option("trace", audit_path, "MatchTrace JSON file")->required();
  audit->add_option("--graph", audit_graph, "cross-check against this graph file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(family, params, base, seed, out, corpus);
    if (*solve) return cmd_solve(solve_path, hyper, cap);
    if (*play) return cmd_play(play_path, dom_spec, stall_spec, play_out, cap);
    if (*verify) return cmd_verify(verify_dir, cap, vjson, vcsv, jobs);
    if (*audit) return cmd_audit(audit_path, audit_graph);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const MoveError& e) {
    std::cerr << "illegal move: " << e.what() << "\n";
    return 4;
  } catch (const StrategyAssertion& e) {
    std::cerr << "strategy assertion failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
