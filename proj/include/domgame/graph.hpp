#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "domgame/bitset.hpp"
#include "domgame/errors.hpp"

namespace domgame {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is stored
// as one bit-set row per vertex; closed neighborhoods N[v] are precomputed.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw ParamError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParamError("edge endpoint out of range");
      if (u == v) throw ParamError("self-loop");
      if (g.adj_[u].test(v)) throw ParamError("parallel edge");
      g.adj_[u].set(v);
      g.adj_[v].set(u);
      ++g.m_;
    }
    g.closed_.reserve(n);
    for (int v = 0; v < n; ++v) {
      VertexSet c = g.adj_[v];
      c.set(v);
      g.closed_.push_back(std::move(c));
    }
    return g;
  }

  int n() const { return n_; }
  int m() const { return m_; }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  const VertexSet& closed_neighborhood(int v) const { return closed_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }

  // Edges as sorted (u < v) pairs, lexicographic.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> closed_;
};

inline int min_degree(const Graph& g) {
  int d = g.n() == 0 ? 0 : g.n();
  for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) return true;
  return g.n() == 0;
}

// Connected components, each a sorted vertex list, ordered by smallest member.
// When `within` is given, the graph is restricted to that vertex set.
inline std::vector<std::vector<int>> components(const Graph& g,
                                                const VertexSet* within = nullptr) {
  std::vector<std::vector<int>> comps;
  VertexSet todo = within ? *within : VertexSet::full(g.n());
  while (todo.any()) {
    int start = todo.first();
    VertexSet comp(g.n());
    comp.set(start);
    VertexSet frontier(g.n());
    frontier.set(start);
    while (frontier.any()) {
      VertexSet next(g.n());
      for (int v : frontier) next |= g.neighbors(v);
      next &= todo;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    todo -= comp;
    std::vector<int> list;
    for (int v : comp) list.push_back(v);
    comps.push_back(std::move(list));
  }
  return comps;
}

// True when g is a single chordless cycle (connected, all degrees 2).
inline bool is_cycle_graph(const Graph& g) {
  if (g.n() < 3 || g.m() != g.n()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return components(g).size() == 1;
}

// True when g is a path on n >= 1 vertices.
inline bool is_path_graph(const Graph& g) {
  if (g.n() == 1) return g.m() == 0;
  if (g.m() != g.n() - 1) return false;
  int leaves = 0;
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    if (d == 0 || d > 2) return false;
    if (d == 1) ++leaves;
  }
  return leaves == 2 && components(g).size() == 1;
}

inline bool is_complete_graph(const Graph& g) {
  return g.m() == g.n() * (g.n() - 1) / 2 && min_degree(g) == g.n() - 1;
}

// Bitmask DP over vertex subsets; usable up to roughly 24 vertices.
// dp[mask] holds the possible endpoints of a path covering exactly mask.
inline bool has_hamiltonian_path(const Graph& g) {
  int n = g.n();
  if (n == 0) return false;
  if (n == 1) return true;
  if (n > 24) throw CapacityError("hamiltonian check limited to 24 vertices");
  std::vector<uint32_t> adj(n);
  for (int v = 0; v < n; ++v)
    adj[v] = uint32_t(g.neighbors(v).to_bits());
  std::vector<uint32_t> dp(size_t(1) << n, 0);
  for (int v = 0; v < n; ++v) dp[uint32_t(1) << v] = uint32_t(1) << v;
  uint32_t full = (uint32_t(1) << n) - 1;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    uint32_t ends = dp[mask];
    if (!ends) continue;
    if (mask == full) return true;
    for (uint32_t e = ends; e; e &= e - 1) {
      int v = std::countr_zero(e);
      uint32_t ext = adj[v] & ~mask;
      for (uint32_t x = ext; x; x &= x - 1) {
        uint32_t u = x & (~x + 1);
        dp[mask | u] |= u;
      }
    }
  }
  return false;
}

// Relabels vertices: vertex v becomes perm[v]. perm must be a permutation.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (auto [u, v] : g.edges()) {
    int a = perm[u], b = perm[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(g.n(), edges);
}

}  // namespace domgame
