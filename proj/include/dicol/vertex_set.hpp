#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace dicol {

// Hard cap on the order of any graph the toolkit represents. The exact
// solvers impose the tighter kSolverMaxVertices.
inline constexpr int kMaxVertices = 256;
inline constexpr int kSolverMaxVertices = 64;

// Fixed-capacity bitset over [0, kMaxVertices).
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
    return s;
  }
  static VertexSet from_mask(std::uint64_t m) {
    VertexSet s;
    s.words_[0] = m;
    return s;
  }
  template <class Range>
  static VertexSet of(const Range& r) {
    VertexSet s;
    for (int v : r) s.insert(v);
    return s;
  }

  void insert(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Smallest member >= from, or -1.
  int next(int from) const {
    if (from >= kMaxVertices) return -1;
    int wi = from >> 6;
    std::uint64_t w = words_[wi] & (~0ULL << (from & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi == kWords) return -1;
      w = words_[wi];
    }
  }
  int first() const { return next(0); }

  std::uint64_t word(int i) const { return words_[i]; }
  std::uint64_t low_mask() const { return words_[0]; }

  // True when every member is below 64, so low_mask() is the whole set.
  bool fits_word() const {
    for (int w = 1; w < kWords; ++w)
      if (words_[w]) return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next(v_ + 1);
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* s_ = nullptr;
    int v_ = -1;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace dicol
