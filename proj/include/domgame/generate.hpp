#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

inline Graph make_cycle(int n) {
  if (n < 3) throw ParamError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::from_edges(n, e);
}

inline Graph make_path(int n) {
  if (n < 1) throw ParamError("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph make_complete(int n) {
  if (n < 1) throw ParamError("complete graph needs at least 1 vertex");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

// Appends two paths of length two to every vertex of the base graph. Base
// vertices keep their indices; vertex v gets legs at base_n + 4v .. + 3.
// The result has 5*|V(base)| vertices and |E(base)| + 4*|V(base)| edges.
inline Graph make_legs(const Graph& base) {
  int nb = base.n();
  if (nb < 1) throw ParamError("legs base must be nonempty");
  std::vector<Edge> e = base.edges();
  for (int v = 0; v < nb; ++v) {
    int a1 = nb + 4 * v, a2 = a1 + 1, b1 = a1 + 2, b2 = a1 + 3;
    e.emplace_back(v, a1);
    e.emplace_back(a1, a2);
    e.emplace_back(v, b1);
    e.emplace_back(b1, b2);
  }
  return Graph::from_edges(5 * nb, e);
}

// k vertex-disjoint copies; copy c maps vertex v to c*n + v.
inline Graph make_disjoint_copies(const Graph& base, int k) {
  if (k < 1) throw ParamError("copy count must be at least 1");
  int n = base.n();
  std::vector<Edge> e;
  e.reserve(size_t(base.m()) * k);
  for (int c = 0; c < k; ++c)
    for (auto [u, v] : base.edges()) e.emplace_back(c * n + u, c * n + v);
  return Graph::from_edges(n * k, e);
}

inline Graph make_disjoint_union(const std::vector<Graph>& parts) {
  std::vector<Edge> e;
  int n = 0;
  for (const Graph& g : parts) {
    for (auto [u, v] : g.edges()) e.emplace_back(n + u, n + v);
    n += g.n();
  }
  return Graph::from_edges(n, e);
}

namespace detail {
// mt19937_64 output reduced by modulo: not perfectly uniform, but portable
// and byte-stable across platforms, which matters more here.
inline int bounded(std::mt19937_64& rng, int k) { return int(rng() % uint64_t(k)); }
}  // namespace detail

// Hamiltonian cycle 0-1-...-(n-1)-0 plus `extra` uniformly random chords.
// Deterministic per seed. Minimum degree 2 by construction, and the cycle
// backbone guarantees a Hamiltonian path.
inline Graph make_random_min_deg2(int n, int extra, uint64_t seed) {
  if (n < 3) throw ParamError("random-mindeg2 needs at least 3 vertices");
  long long max_chords = (long long)n * (n - 1) / 2 - n;
  if (extra < 0 || extra > max_chords)
    throw ParamError("chord count out of range");
  std::vector<Edge> e;
  std::vector<VertexSet> adj(n, VertexSet(n));
  auto add = [&](int u, int v) {
    e.emplace_back(std::min(u, v), std::max(u, v));
    adj[u].set(v);
    adj[v].set(u);
  };
  for (int i = 0; i + 1 < n; ++i) add(i, i + 1);
  add(0, n - 1);
  std::mt19937_64 rng(seed);
  for (int c = 0; c < extra;) {
    int u = detail::bounded(rng, n);
    int v = detail::bounded(rng, n);
    if (u == v || adj[u].test(v)) continue;
    add(u, v);
    ++c;
  }
  return Graph::from_edges(n, e);
}

// Two hubs joined by three internally disjoint paths with a, b, c inner
// vertices. Minimum degree 2 for a, b, c >= 1.
inline Graph make_theta(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw ParamError("theta paths need inner vertices");
  std::vector<Edge> e;
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(std::min(prev, next), std::max(prev, next));
      prev = next++;
    }
    e.emplace_back(1, prev);
  }
  return Graph::from_edges(next, e);
}

// Six-cycle 0-1-2-3-4-5-0 plus an apex 6 adjacent to 0 and 3. Playing the
// apex leaves the six-cycle in the two-pair terminal configuration.
inline Graph make_c6_config() {
  return Graph::from_edges(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {3, 6}});
}

enum class FamilyKind {
  Cycle,
  Path,
  Complete,
  Legs,
  DisjointCopies,
  RandomMinDeg2,
  Explicit,
};

// Parameter bundle for the graph generators; params are interpreted per kind.
struct GraphFamily {
  FamilyKind kind;
  int n = 0;          // cycle/path/complete
  int extra = 0;      // random chords
  uint64_t seed = 0;  // random
  int copies = 1;     // disjoint copies
  int base_n = 0;     // legs/copies/explicit
  std::vector<Edge> base_edges;
};

inline Graph generate(const GraphFamily& f) {
  switch (f.kind) {
    case FamilyKind::Cycle:
      return make_cycle(f.n);
    case FamilyKind::Path:
      return make_path(f.n);
    case FamilyKind::Complete:
      return make_complete(f.n);
    case FamilyKind::Legs:
      return make_legs(Graph::from_edges(f.base_n, f.base_edges));
    case FamilyKind::DisjointCopies:
      return make_disjoint_copies(Graph::from_edges(f.base_n, f.base_edges),
                                  f.copies);
    case FamilyKind::RandomMinDeg2:
      return make_random_min_deg2(f.n, f.extra, f.seed);
    case FamilyKind::Explicit:
      return Graph::from_edges(f.base_n, f.base_edges);
  }
  throw ParamError("unknown family kind");
}

}  // namespace domgame
