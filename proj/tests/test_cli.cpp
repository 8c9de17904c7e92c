#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = (fs::temp_directory_path() / "domgame_cli_out.txt").string();
  std::string cmd = std::string(DOMGAME_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("domgame_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen writes canonical edge lists") {
  TempDir tmp;
  auto r = run("gen cycle 5 -o " + tmp.file("c5.g"));
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(tmp.file("c5.g")) == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");

  auto bad = run("gen cycle 2");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("gen is deterministic per seed") {
  TempDir tmp;
  run("gen random-mindeg2 14 5 --seed 1 -o " + tmp.file("a.g"));
  run("gen random-mindeg2 14 5 --seed 1 -o " + tmp.file("b.g"));
  CHECK(slurp(tmp.file("a.g")) == slurp(tmp.file("b.g")));
}

TEST_CASE("gen legs via a base file") {
  TempDir tmp;
  run("gen complete 2 -o " + tmp.file("k2.g"));
  auto r = run("gen legs --base " + tmp.file("k2.g") + " -o " + tmp.file("legs.g"));
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(tmp.file("legs.g")).substr(0, 5) == "10 9\n");
}

TEST_CASE("solve reports gamma values as JSON") {
  TempDir tmp;
  run("gen cycle 5 -o " + tmp.file("c5.g"));
  auto r = run("solve " + tmp.file("c5.g"));
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["gamma_g"] == 3);
  CHECK(j["gamma_g_prime"] == 2);
  CHECK(j["n"] == 5);

  run("gen cycle 12 -o " + tmp.file("c12.g"));
  json j12 = json::parse(run("solve " + tmp.file("c12.g")).out);
  CHECK(j12["gamma_g"] == 6);
}

TEST_CASE("solve exit codes: capacity 3, isolated vertex 2") {
  TempDir tmp;
  run("gen cycle 5 -o " + tmp.file("c5.g"));
  CHECK(run("--cap 4 solve " + tmp.file("c5.g")).exit_code == 3);
  std::ofstream(tmp.file("iso.g")) << "3 1\n0 1\n";
  CHECK(run("solve " + tmp.file("iso.g")).exit_code == 2);
}

TEST_CASE("solve --hypergraph matches the reduction") {
  TempDir tmp;
  run("gen cycle 5 -o " + tmp.file("c5.g"));
  run("gen cnh --base " + tmp.file("c5.g") + " -o " + tmp.file("c5.h"));
  json j = json::parse(run("solve --hypergraph " + tmp.file("c5.h")).out);
  CHECK(j["tau_g"] == 3);
  CHECK(j["tau_g_prime"] == 2);
}

TEST_CASE("play emits a trace that audits cleanly") {
  TempDir tmp;
  run("gen cycle 5 -o " + tmp.file("c5.g"));
  auto r = run("play " + tmp.file("c5.g") +
               " --dominator paper --staller optimal -o " + tmp.file("t.json"));
  REQUIRE(r.exit_code == 0);
  json j = json::parse(slurp(tmp.file("t.json")));
  CHECK(j["total"] == 3);
  CHECK(j["t1"] == 0);
  CHECK(j["k"] == 1);
  CHECK(j["bound_ok"] == true);

  auto a = run("audit " + tmp.file("t.json"));
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("ok, 0 mismatches") != std::string::npos);

  auto ag = run("audit " + tmp.file("t.json") + " --graph " + tmp.file("c5.g"));
  CHECK(ag.exit_code == 0);
}

TEST_CASE("audit detects tampering with exit 5") {
  TempDir tmp;
  run("gen cycle 9 -o " + tmp.file("c9.g"));
  run("play " + tmp.file("c9.g") + " --dominator paper --staller stingy -o " +
      tmp.file("t.json"));
  json j = json::parse(slurp(tmp.file("t.json")));
  j["moves"][1]["pi_after"] = int(j["moves"][1]["pi_after"]) - 1;
  std::ofstream(tmp.file("bad.json")) << j.dump();
  auto r = run("audit " + tmp.file("bad.json"));
  CHECK(r.exit_code == 5);
  CHECK(r.out.find("t=2") != std::string::npos);
}

TEST_CASE("play rejects cheating specs and unknown policies") {
  TempDir tmp;
  run("gen cycle 5 -o " + tmp.file("c5.g"));
  CHECK(run("play " + tmp.file("c5.g") + " --dominator nope").exit_code == 2);
  CHECK(run("play " + tmp.file("c5.g") + " --staller nope").exit_code == 2);
}

TEST_CASE("verify runs the full corpus clean") {
  TempDir tmp;
  auto g = run("gen --corpus -o " + tmp.file("corpus"));
  REQUIRE(g.exit_code == 0);
  auto r = run("verify " + tmp.file("corpus"));
  INFO(r.out);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 failing") != std::string::npos);

  auto csv = run("verify " + tmp.file("corpus") + " --csv");
  CHECK(csv.out.find("name,n,m,") == 0);
  auto js = run("verify " + tmp.file("corpus") + " --json");
  CHECK(json::parse(js.out).is_array());
}

TEST_CASE("play reports per-component move counts on disjoint unions") {
  TempDir tmp;
  run("gen cycle 5 -o " + tmp.file("c5.g"));
  run("gen copies 3 --base " + tmp.file("c5.g") + " -o " + tmp.file("c5x3.g"));
  auto r = run("play " + tmp.file("c5x3.g") + " --dominator paper --staller stingy");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.contains("component_moves"));
  int sum = 0;
  for (int c : j["component_moves"]) sum += c;
  CHECK(sum == j["total"]);
}

TEST_CASE("human staller needs a terminal") {
  TempDir tmp;
  run("gen cycle 5 -o " + tmp.file("c5.g"));
  CHECK(run("play " + tmp.file("c5.g") + " --staller human < /dev/null").exit_code == 2);
}

TEST_CASE("play on a random min-degree-2 graph keeps the bound") {
  TempDir tmp;
  run("gen random-mindeg2 40 6 --seed 9 -o " + tmp.file("big.g"));
  auto r = run("play " + tmp.file("big.g") +
               " --dominator paper --staller stingy -o " + tmp.file("t.json"));
  REQUIRE(r.exit_code == 0);
  json j = json::parse(slurp(tmp.file("t.json")));
  CHECK(j["bound_ok"] == true);
  CHECK(run("audit " + tmp.file("t.json")).exit_code == 0);
}
