#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

// Hypergraph with deduplicated, nonempty edges over vertices 0..n-1.
class Hypergraph {
 public:
  Hypergraph(int n, const std::vector<std::vector<int>>& edge_lists) : n_(n) {
    if (n < 0) throw ParamError("vertex count must be nonnegative");
    std::vector<VertexSet> sets;
    for (const auto& e : edge_lists) {
      if (e.empty()) throw ParamError("empty hyperedge is never hittable");
      VertexSet s(n);
      for (int v : e) {
        if (v < 0 || v >= n) throw ParamError("hyperedge vertex out of range");
        s.set(v);
      }
      sets.push_back(std::move(s));
    }
    // canonical order + dedup; duplicates cannot change the game value
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
      std::vector<int> av(a.begin(), a.end()), bv(b.begin(), b.end());
      return av < bv;
    });
    for (auto& s : sets)
      if (edges_.empty() || !(edges_.back() == s)) edges_.push_back(std::move(s));
  }

  int n() const { return n_; }
  int edge_count() const { return int(edges_.size()); }
  const VertexSet& edge(int i) const { return edges_[i]; }

  std::vector<std::vector<int>> edge_lists() const {
    std::vector<std::vector<int>> out;
    for (const auto& e : edges_) out.emplace_back(e.begin(), e.end());
    return out;
  }

 private:
  int n_;
  std::vector<VertexSet> edges_;
};

// Closed-neighborhood hypergraph: one edge N[x] per vertex, deduplicated.
// The domination game on G is the transversal game on cnh(G).
inline Hypergraph cnh(const Graph& g) {
  std::vector<std::vector<int>> edges;
  for (int v = 0; v < g.n(); ++v) {
    const VertexSet& c = g.closed_neighborhood(v);
    edges.emplace_back(c.begin(), c.end());
  }
  return Hypergraph(g.n(), edges);
}

inline Hypergraph disjoint_copies(const Hypergraph& h, int k) {
  if (k < 1) throw ParamError("copy count must be at least 1");
  std::vector<std::vector<int>> edges;
  for (int c = 0; c < k; ++c)
    for (const auto& e : h.edge_lists()) {
      std::vector<int> shifted;
      for (int v : e) shifted.push_back(c * h.n() + v);
      edges.push_back(std::move(shifted));
    }
  return Hypergraph(h.n() * k, edges);
}

enum class TMover : uint8_t { EdgeHitter = 0, Staller = 1 };

// Minimax over hit-edge sets: Edge-hitter minimizes, Staller maximizes.
// A vertex is playable iff it lies in some edge that is not yet hit. The
// memo keys on the hit-edge set, not the selected vertices — the same
// collapse as the domination solver, on a different set space.
class TransversalSolver {
 public:
  static constexpr int kDefaultCap = 24;

  explicit TransversalSolver(const Hypergraph& h, int cap = kDefaultCap) : h_(h) {
    if (h.n() > cap || h.edge_count() > cap)
      throw CapacityError("hypergraph exceeds solver cap " + std::to_string(cap));
    k_ = h.edge_count();
    full_ = k_ == 0 ? 0 : (uint64_t{1} << k_) - 1;
    incidence_.assign(h.n(), 0);
    for (int i = 0; i < k_; ++i)
      for (int v : h.edge(i)) incidence_[v] |= uint64_t{1} << i;
    value_.assign(size_t(2) << k_, 0xFF);
  }

  int value(uint64_t hit, TMover mover) {
    if (hit == full_) return 0;
    uint8_t& memo = value_[size_t((hit << 1) | uint64_t(mover))];
    if (memo != 0xFF) return memo;
    ++nodes_;
    int best = -1;
    for (int v = 0; v < h_.n(); ++v) {
      if ((incidence_[v] & ~hit) == 0) continue;  // hits no unhit edge
      int child = 1 + value(hit | incidence_[v],
                            mover == TMover::EdgeHitter ? TMover::Staller
                                                        : TMover::EdgeHitter);
      if (best == -1 ||
          (mover == TMover::EdgeHitter ? child < best : child > best))
        best = child;
    }
    memo = uint8_t(best);
    return best;
  }

  int game_value(TMover first) { return value(0, first); }
  uint64_t nodes() const { return nodes_; }

 private:
  Hypergraph h_;
  int k_ = 0;
  uint64_t full_ = 0;
  std::vector<uint64_t> incidence_;
  std::vector<uint8_t> value_;
  uint64_t nodes_ = 0;
};

inline int tau_g(const Hypergraph& h, TMover first,
                 int cap = TransversalSolver::kDefaultCap) {
  TransversalSolver s(h, cap);
  return s.game_value(first);
}

// Hypergraph text format: header "n k", then k lines of space-separated
// vertex indices, '#' comments and blank lines ignored.
inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_data_line(header)) throw ParseError(line_no + 1, "missing header");
  long long n, k;
  {
    std::istringstream hs(header);
    if (!(hs >> n >> k) || n < 0 || k < 0)
      throw ParseError(line_no, "header must be \"n k\"");
  }
  std::vector<std::vector<int>> edges;
  for (long long i = 0; i < k; ++i) {
    std::string e;
    if (!next_data_line(e)) throw ParseError(line_no + 1, "missing hyperedge line");
    std::istringstream es(e);
    std::vector<int> verts;
    long long v;
    while (es >> v) {
      if (v < 0 || v >= n) throw ParseError(line_no, "vertex index out of range");
      verts.push_back(int(v));
    }
    if (verts.empty()) throw ParseError(line_no, "empty hyperedge");
    edges.push_back(std::move(verts));
  }
  return Hypergraph(int(n), edges);
}

inline std::string emit_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.n()) + " " + std::to_string(h.edge_count()) + "\n";
  for (const auto& e : h.edge_lists()) {
    for (size_t i = 0; i < e.size(); ++i)
      out += (i ? " " : "") + std::to_string(e[i]);
    out += "\n";
  }
  return out;
}

}  // namespace domgame
