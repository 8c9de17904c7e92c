#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

enum class Mover : uint8_t { Dominator = 0, Staller = 1 };

inline Mover other(Mover m) {
  return m == Mover::Dominator ? Mover::Staller : Mover::Dominator;
}

struct SolveResult {
  int value = 0;                 // remaining optimal move count
  std::optional<int> best_move;  // absent at terminal states
  uint64_t nodes = 0;            // states expanded by this call
};

// Exact game values by memoized minimax over dominated-set states. The key
// is (dominated set, mover) only: legality and move effects depend on
// coverage alone, never on which vertices were played — that collapse is
// what makes n around 20 feasible.
//
// Dominator minimizes the remaining move count, Staller maximizes it.
// Ties break toward the lowest vertex index, so best moves are deterministic.
class Solver {
 public:
  static constexpr int kDefaultCap = 24;
  // Dense tables hold 2^(n+1) entries; beyond this we fall back to hashing.
  static constexpr int kDenseLimit = 24;

  explicit Solver(const Graph& g, int cap = kDefaultCap, bool use_memo = true,
                  int dense_limit = kDenseLimit)
      : g_(&g), cap_(cap), memo_(use_memo) {
    if (g.n() > cap_)
      throw CapacityError("graph has " + std::to_string(g.n()) +
                          " vertices, solver cap is " + std::to_string(cap_));
    if (g.n() > 63) throw CapacityError("solver requires at most 63 vertices");
    n_ = g.n();
    full_ = n_ == 0 ? 0 : (uint64_t{1} << n_) - 1;
    closed_.reserve(n_);
    for (int v = 0; v < n_; ++v) closed_.push_back(g.closed_neighborhood(v).to_bits());
    if (memo_ && n_ <= dense_limit) {
      dense_value_.assign(size_t(2) << n_, kUnknown);
      dense_best_.assign(size_t(2) << n_, kNoMove);
    }
  }

  SolveResult remaining_value(const VertexSet& dominated, Mover mover) {
    return remaining_value(dominated.to_bits(), mover);
  }

  SolveResult remaining_value(uint64_t dominated, Mover mover) {
    uint64_t before = nodes_;
    int value = solve(dominated, mover);
    SolveResult r;
    r.value = value;
    r.nodes = nodes_ - before;
    if (dominated != full_) r.best_move = lookup_best(dominated, mover);
    return r;
  }

  // gamma_g when first == Dominator, gamma_g' when first == Staller.
  int game_value(Mover first) {
    if (has_isolated_vertex(*g_))
      throw ParamError("game undefined: graph has an isolated vertex");
    return solve(0, first);
  }

  int optimal_move(const VertexSet& dominated, Mover mover) {
    return optimal_move(dominated.to_bits(), mover);
  }

  int optimal_move(uint64_t dominated, Mover mover) {
    if (dominated == full_) throw MoveError("no move in a terminal state");
    solve(dominated, mover);
    return lookup_best(dominated, mover);
  }

  uint64_t nodes() const { return nodes_; }
  const Graph& graph() const { return *g_; }

 private:
  static constexpr uint8_t kUnknown = 0xFF;
  static constexpr uint8_t kNoMove = 0xFF;

  size_t dense_index(uint64_t dom, Mover mover) const {
    return size_t((dom << 1) | uint64_t(mover));
  }

  int solve(uint64_t dom, Mover mover) {
    if (dom == full_) return 0;
    if (memo_) {
      if (!dense_value_.empty()) {
        uint8_t v = dense_value_[dense_index(dom, mover)];
        if (v != kUnknown) return v;
      } else {
        auto it = hash_.find((dom << 1) | uint64_t(mover));
        if (it != hash_.end()) return it->second & 0xFF;
      }
    }
    ++nodes_;
    int best = -1;
    int best_v = kNoMove;
    for (int v = 0; v < n_; ++v) {
      if ((closed_[v] & ~dom) == 0) continue;  // dominates nothing new
      int child = 1 + solve(dom | closed_[v], other(mover));
      bool better = best_v == kNoMove ||
                    (mover == Mover::Dominator ? child < best : child > best);
      if (better) {
        best = child;
        best_v = v;
      }
    }
    if (memo_) {
      if (!dense_value_.empty()) {
        dense_value_[dense_index(dom, mover)] = uint8_t(best);
        dense_best_[dense_index(dom, mover)] = uint8_t(best_v);
      } else {
        hash_[(dom << 1) | uint64_t(mover)] = uint16_t(best) | uint16_t(best_v) << 8;
      }
    }
    return best;
  }

  int lookup_best(uint64_t dom, Mover mover) {
    if (memo_) {
      if (!dense_value_.empty()) return dense_best_[dense_index(dom, mover)];
      return hash_.at((dom << 1) | uint64_t(mover)) >> 8;
    }
    // Memoization disabled (testing): recompute the argmin/argmax.
    int best = -1, best_v = -1;
    for (int v = 0; v < n_; ++v) {
      if ((closed_[v] & ~dom) == 0) continue;
      int child = 1 + solve(dom | closed_[v], other(mover));
      if (best_v == -1 ||
          (mover == Mover::Dominator ? child < best : child > best)) {
        best = child;
        best_v = v;
      }
    }
    return best_v;
  }

  const Graph* g_;
  int cap_;
  bool memo_;
  int n_ = 0;
  uint64_t full_ = 0;
  std::vector<uint64_t> closed_;
  std::vector<uint8_t> dense_value_;
  std::vector<uint8_t> dense_best_;
  std::unordered_map<uint64_t, uint16_t> hash_;
  uint64_t nodes_ = 0;
};

inline int game_value(const Graph& g, Mover first, int cap = Solver::kDefaultCap) {
  Solver s(g, cap);
  return s.game_value(first);
}

}  // namespace domgame
