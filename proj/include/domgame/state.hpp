#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

// Vertex colors of the discharging point system. A vertex is worth
// 20 / 10 / 7 / 0 points when white / blue / orange / red.
enum class Color : uint8_t { White, Blue, Orange, Red };

inline const char* color_name(Color c) {
  switch (c) {
    case Color::White: return "white";
    case Color::Blue: return "blue";
    case Color::Orange: return "orange";
    case Color::Red: return "red";
  }
  return "?";
}

struct ColorAssignment {
  std::vector<Color> colors;
  VertexSet whites;   // undominated vertices
  VertexSet singles;  // isolated vertices of G[W]
  VertexSet doubles;  // members of 2-vertex components of G[W]
  int pi = 0;         // cached total

  static constexpr int points_of(Color c) {
    constexpr int table[4] = {20, 10, 7, 0};
    return table[size_t(c)];
  }
  int points(int v) const { return points_of(colors[v]); }
};

inline int potential(const ColorAssignment& c) {
  int s = 0;
  for (Color col : c.colors) s += ColorAssignment::points_of(col);
  return s;
}

// Recomputes the full color assignment from scratch:
//   white  <=> not dominated;
//   red    <=> the whole closed neighborhood is dominated;
//   orange <=> dominated, exactly one white neighbor, and that neighbor is a
//              single or a double in G[W];
//   blue   otherwise.
inline ColorAssignment compute_colors(const Graph& g, const VertexSet& dominated) {
  const int n = g.n();
  ColorAssignment a;
  a.colors.assign(n, Color::Blue);
  a.whites = dominated.complement();
  a.singles = VertexSet(n);
  a.doubles = VertexSet(n);

  // Component sizes of G[W], found by bit-set BFS over white vertices.
  std::vector<int> comp_size(n, 0);
  {
    VertexSet todo = a.whites;
    while (todo.any()) {
      int start = todo.first();
      VertexSet comp(n);
      comp.set(start);
      VertexSet frontier = comp;
      while (frontier.any()) {
        VertexSet next(n);
        for (int v : frontier) next |= g.neighbors(v);
        next &= todo;
        next -= comp;
        comp |= next;
        frontier = next;
      }
      todo -= comp;
      int size = comp.count();
      for (int v : comp) {
        comp_size[v] = size;
        if (size == 1) a.singles.set(v);
        if (size == 2) a.doubles.set(v);
      }
    }
  }

  for (int v = 0; v < n; ++v) {
    if (a.whites.test(v)) {
      a.colors[v] = Color::White;
    } else if (dominated.contains_all(g.neighbors(v))) {
      a.colors[v] = Color::Red;
    } else {
      VertexSet wn = g.neighbors(v) & a.whites;
      int w = wn.first();
      if (wn.count() == 1 && comp_size[w] <= 2) a.colors[v] = Color::Orange;
      // else stays Blue
    }
  }
  a.pi = potential(a);
  return a;
}

// One position of the domination game: the dominated set plus the move trace.
// Values are immutable; apply() returns a fresh state.
class GameState {
 public:
  // States keep a reference to the graph; the caller owns its lifetime.
  static GameState initial(const Graph& g) {
    GameState s;
    s.g_ = &g;
    s.dominated_ = VertexSet(g.n());
    s.colors_ = compute_colors(g, s.dominated_);
    return s;
  }
  static GameState initial(Graph&&) = delete;

  const Graph& graph() const { return *g_; }
  const VertexSet& dominated() const { return dominated_; }
  const std::vector<int>& played() const { return played_; }
  int t() const { return int(played_.size()); }
  int pi() const { return colors_.pi; }
  const ColorAssignment& colors() const { return colors_; }
  bool over() const { return dominated_.is_full(); }

  // A move is legal iff it dominates at least one new vertex.
  bool is_legal(int v) const {
    return v >= 0 && v < g_->n() &&
           !dominated_.contains_all(g_->closed_neighborhood(v));
  }

  VertexSet legal_moves() const {
    VertexSet s(g_->n());
    for (int v = 0; v < g_->n(); ++v)
      if (is_legal(v)) s.set(v);
    return s;
  }

  GameState apply(int v) const {
    if (!is_legal(v)) throw MoveError("illegal move " + std::to_string(v));
    GameState next = *this;
    next.dominated_ |= g_->closed_neighborhood(v);
    next.played_.push_back(v);
    next.colors_ = compute_colors(*g_, next.dominated_);
    return next;
  }

  int potential_drop(int v) const {
    if (!is_legal(v)) throw MoveError("illegal move " + std::to_string(v));
    VertexSet dom = dominated_ | g_->closed_neighborhood(v);
    return pi() - compute_colors(*g_, dom).pi;
  }

 private:
  const Graph* g_ = nullptr;
  VertexSet dominated_;
  std::vector<int> played_;
  ColorAssignment colors_;
};

enum class ComponentKind { Single, Pair, Path, Cycle, Other };

struct WhiteComponent {
  ComponentKind kind;
  int cycle_length = 0;       // set for Cycle
  std::vector<int> vertices;  // path/cycle order where applicable
};

// H* removes every all-white component of G that is a chordless 4- or
// 5-cycle; H is the white-induced subgraph of what remains.
struct WhiteStructure {
  VertexSet whites;
  std::vector<std::vector<int>> excluded;  // the removed white 4-/5-cycles
  std::vector<WhiteComponent> components;  // components of H
};

namespace detail {

// Orders a path/cycle component: paths start at the lower-indexed endpoint,
// cycles at their smallest vertex stepping toward its smaller neighbor.
inline std::vector<int> walk_order(const Graph& g, const VertexSet& comp,
                                   bool cycle) {
  std::vector<int> order;
  int start = -1;
  if (cycle) {
    start = comp.first();
  } else {
    int best = -1;
    for (int v : comp)
      if (g.neighbors(v).count_and(comp) <= 1 && (best == -1 || v < best))
        best = v;
    start = best;
  }
  VertexSet seen(comp.universe_size());
  int cur = start;
  while (cur != -1) {
    order.push_back(cur);
    seen.set(cur);
    VertexSet nb = g.neighbors(cur) & comp;
    nb -= seen;
    int next = -1;
    for (int v : nb)
      if (next == -1 || v < next) next = v;
    cur = next;
  }
  return order;
}

}  // namespace detail

inline WhiteStructure white_structure(const GameState& s) {
  const Graph& g = s.graph();
  WhiteStructure ws;
  ws.whites = s.colors().whites;

  // Excluded components are components of the whole graph: all-white,
  // size 4 or 5, every vertex of degree 2 (hence a chordless cycle).
  VertexSet kept = ws.whites;
  for (const auto& comp : components(g)) {
    if (comp.size() != 4 && comp.size() != 5) continue;
    bool ok = true;
    for (int v : comp)
      if (!ws.whites.test(v) || g.degree(v) != 2) ok = false;
    if (!ok) continue;
    VertexSet cs(g.n());
    for (int v : comp) cs.set(v);
    ws.excluded.push_back(detail::walk_order(g, cs, /*cycle=*/true));
    kept -= cs;
  }

  for (const auto& comp : components(g, &kept)) {
    VertexSet cs(g.n());
    for (int v : comp) cs.set(v);
    WhiteComponent wc;
    wc.vertices = comp;
    int nv = int(comp.size());
    int ne = 0;
    bool deg_le2 = true;
    for (int v : comp) {
      int d = g.neighbors(v).count_and(cs);
      ne += d;
      if (d > 2) deg_le2 = false;
    }
    ne /= 2;
    if (nv == 1) {
      wc.kind = ComponentKind::Single;
    } else if (nv == 2) {
      wc.kind = ComponentKind::Pair;
    } else if (deg_le2 && ne == nv - 1) {
      wc.kind = ComponentKind::Path;
      wc.vertices = detail::walk_order(g, cs, /*cycle=*/false);
    } else if (deg_le2 && ne == nv) {
      wc.kind = ComponentKind::Cycle;
      wc.cycle_length = nv;
      wc.vertices = detail::walk_order(g, cs, /*cycle=*/true);
    } else {
      wc.kind = ComponentKind::Other;
    }
    ws.components.push_back(std::move(wc));
  }
  return ws;
}

}  // namespace domgame
