#pragma once
#include <iterator>

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace domgame {

// Fixed-width set of vertex indices 0..n-1, backed by 64-bit words.
// All binary operations require both operands to share the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_(word_count(n), 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (auto& w : s.words_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  int universe_size() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  void set(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] |= uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !none(); }
  bool is_full() const { return count() == n_; }

  // Lowest element, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Set difference: removes o's elements.
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet r(n_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // True when every element of sub is also in *this.
  bool contains_all(const VertexSet& sub) const {
    assert(n_ == sub.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (sub.words_[i] & ~words_[i]) return false;
    return true;
  }

  int count_and(const VertexSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Packs the set into one word; only valid for universes up to 64.
  uint64_t to_bits() const {
    assert(n_ <= 64);
    return words_.empty() ? 0 : words_[0];
  }

  size_t hash() const {
    size_t h = std::hash<int>{}(n_);
    for (uint64_t w : words_) h = h * 1099511628211ULL + std::hash<uint64_t>{}(w);
    return h;
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator(const std::vector<uint64_t>* words, size_t wi, uint64_t cur)
        : words_(words), wi_(wi), cur_(cur) {
      advance();
    }
    int operator*() const { return int(wi_ * 64 + std::countr_zero(cur_)); }
    const_iterator& operator++() {
      cur_ &= cur_ - 1;
      advance();
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const {
      return wi_ == o.wi_ && cur_ == o.cur_;
    }
    bool operator!=(const const_iterator& o) const { return !(*this == o); }

   private:
    void advance() {
      while (cur_ == 0 && wi_ + 1 < words_->size()) cur_ = (*words_)[++wi_];
      if (cur_ == 0) wi_ = words_->size();
    }
    const std::vector<uint64_t>* words_;
    size_t wi_;
    uint64_t cur_;
  };

  const_iterator begin() const {
    return const_iterator(&words_, 0, words_.empty() ? 0 : words_[0]);
  }
  const_iterator end() const { return const_iterator(&words_, words_.size(), 0); }

 private:
  static size_t word_count(int n) { return size_t(n + 63) / 64; }

  // Clears bits above n-1 so count/equality stay meaningful.
  void trim() {
    if (n_ & 63) words_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace domgame
