#include "dicol/canon.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "dicol/graph6.hpp"
#include "internal/canon_impl.hpp"

namespace dicol {
namespace internal {

namespace {

struct Partition {
  std::array<std::uint8_t, 64> lab;
  std::array<std::uint8_t, 64> cell_end;  // valid at cell starts
};

class Canonicaliser {
 public:
  Canonicaliser(int n, const std::array<Mask, 64>& out, const std::array<Mask, 64>& in)
      : n_(n), out_(out), in_(in) {
    symmetric_ = true;
    for (int v = 0; v < n_ && symmetric_; ++v) symmetric_ = out_[v] == in_[v];
  }

  CanonResult run() {
    CanonResult r;
    if (n_ == 0) return r;
    Partition p;
    for (int i = 0; i < n_; ++i) p.lab[i] = static_cast<std::uint8_t>(i);
    p.cell_end[0] = static_cast<std::uint8_t>(n_);
    refine(p, 0);
    search(p, 0);
    r.lab = best_lab_;
    r.cert = best_cert_;
    r.generators = generators_;
    auto orb = orbits(0);
    for (int v = 0; v < n_; ++v) r.orbit[v] = static_cast<std::uint8_t>(orb[v]);
    return r;
  }

 private:
  void refine(Partition& p, int first_splitter) const {
    std::array<std::uint8_t, 64> stack;
    std::array<bool, 64> queued{};
    int top = 0;
    if (first_splitter >= 0) {
      stack[top++] = static_cast<std::uint8_t>(first_splitter);
      queued[first_splitter] = true;
    }
    std::array<int, 64> key;
    while (top > 0) {
      int s = stack[--top];
      queued[s] = false;
      Mask w = 0;
      for (int i = s; i < p.cell_end[s]; ++i) w |= bit(p.lab[i]);
      for (int c = 0; c < n_;) {
        int e = p.cell_end[c];
        if (e - c > 1) {
          bool split = false;
          for (int i = c; i < e; ++i) {
            int v = p.lab[i];
            key[i] = std::popcount(out_[v] & w);
            if (!symmetric_) key[i] = key[i] * 128 + std::popcount(in_[v] & w);
            if (i > c && key[i] != key[c]) split = true;
          }
          if (split) {
            // Stable insertion sort of the cell by key.
            for (int i = c + 1; i < e; ++i) {
              int kv = key[i];
              std::uint8_t lv = p.lab[i];
              int j = i - 1;
              while (j >= c && key[j] > kv) {
                key[j + 1] = key[j];
                p.lab[j + 1] = p.lab[j];
                --j;
              }
              key[j + 1] = kv;
              p.lab[j + 1] = lv;
            }
            bool parent_queued = queued[c];
            int start = c;
            for (int i = c + 1; i <= e; ++i) {
              if (i == e || key[i] != key[start]) {
                p.cell_end[start] = static_cast<std::uint8_t>(i);
                if (!queued[start] && !(start == c && parent_queued)) {
                  queued[start] = true;
                  stack[top++] = static_cast<std::uint8_t>(start);
                }
                start = i;
              }
            }
          }
        }
        c = e;
      }
    }
  }

  void individualise(Partition& p, int v) const {
    int pos = 0;
    while (p.lab[pos] != v) ++pos;
    int s = 0;
    while (p.cell_end[s] <= pos) s = p.cell_end[s];
    int e = p.cell_end[s];
    std::swap(p.lab[s], p.lab[pos]);
    p.cell_end[s] = static_cast<std::uint8_t>(s + 1);
    p.cell_end[s + 1] = static_cast<std::uint8_t>(e);
  }

  void certificate(const Partition& p, std::array<Mask, 64>& cert) const {
    std::array<int, 64> pos;
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    for (int i = 0; i < n_; ++i) {
      Mask row = 0;
      for (Mask m = out_[p.lab[i]]; m; m &= m - 1) row |= bit(pos[std::countr_zero(m)]);
      cert[i] = row;
    }
  }

  int compare(const std::array<Mask, 64>& a, const std::array<Mask, 64>& b) const {
    for (int i = 0; i < n_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  int common_prefix(const std::vector<int>& a, const std::vector<int>& b) const {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void add_automorphism(const std::array<std::uint8_t, 64>& from, const Partition& to) {
    std::array<std::uint8_t, 64> g{};
    for (int i = 0; i < n_; ++i) g[from[i]] = to.lab[i];
    for (int v = 0; v < n_; ++v)
      if (g[v] != v) {
        generators_.push_back(g);
        return;
      }
  }

  // Orbits of the group generated by the automorphisms fixing seq_[0..level).
  std::array<int, 64> orbits(int level) const {
    std::array<int, 64> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) fixes = g[seq_[i]] == seq_[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  static constexpr int kContinue = INT_MAX;

  // Returns the level to resume at, or kContinue.
  int leaf(const Partition& p) {
    std::array<Mask, 64> cert;
    certificate(p, cert);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = cert;
      first_lab_ = best_lab_ = p.lab;
      first_seq_ = best_seq_ = seq_;
      return kContinue;
    }
    if (compare(cert, first_cert_) == 0) {
      add_automorphism(first_lab_, p);
      return common_prefix(seq_, first_seq_);
    }
    int c = compare(cert, best_cert_);
    if (c == 0) {
      add_automorphism(best_lab_, p);
      return common_prefix(seq_, best_seq_);
    }
    if (c > 0) {
      best_cert_ = cert;
      best_lab_ = p.lab;
      best_seq_ = seq_;
    }
    return kContinue;
  }

  int search(const Partition& p, int level) {
    int s = 0;
    while (s < n_ && p.cell_end[s] - s == 1) s = p.cell_end[s];
    if (s == n_) return leaf(p);
    int e = p.cell_end[s];
    std::array<std::uint8_t, 64> cell;
    int size = e - s;
    for (int i = 0; i < size; ++i) cell[i] = p.lab[s + i];
    std::sort(cell.begin(), cell.begin() + size);
    std::vector<int> explored;
    for (int i = 0; i < size; ++i) {
      int v = cell[i];
      if (!explored.empty()) {
        auto orb = orbits(level);
        bool redundant = false;
        for (int x : explored)
          if (orb[x] == orb[v]) {
            redundant = true;
            break;
          }
        if (redundant) continue;
      }
      Partition child = p;
      individualise(child, v);
      refine(child, s);
      seq_.push_back(v);
      int r = search(child, level + 1);
      seq_.pop_back();
      explored.push_back(v);
      if (r < level) return r;
    }
    return kContinue;
  }

  int n_;
  const std::array<Mask, 64>& out_;
  const std::array<Mask, 64>& in_;
  bool symmetric_ = true;

  std::vector<int> seq_;
  bool have_first_ = false;
  std::array<Mask, 64> first_cert_{}, best_cert_{};
  std::array<std::uint8_t, 64> first_lab_{}, best_lab_{};
  std::vector<int> first_seq_, best_seq_;
  std::vector<std::array<std::uint8_t, 64>> generators_;
};

}  // namespace

CanonResult canonical_label(int n, const std::array<Mask, 64>& out, const std::array<Mask, 64>& in) {
  return Canonicaliser(n, out, in).run();
}

}  // namespace internal

namespace {

CanonicalForm finish(int n, const internal::CanonResult& r) {
  CanonicalForm f;
  f.labelling.assign(n, 0);
  for (int i = 0; i < n; ++i) f.labelling[r.lab[i]] = i;
  f.orbit.assign(n, 0);
  for (int v = 0; v < n; ++v) f.orbit[v] = r.orbit[v];
  for (const auto& g : r.generators) f.generators.emplace_back(g.begin(), g.begin() + n);
  return f;
}

}  // namespace

CanonicalForm canonical_form(const UndirectedGraph& g) {
  internal::require_solver_order(g.order(), "canonical_form");
  auto m = g.masks();
  auto r = internal::canonical_label(g.order(), m, m);
  auto f = finish(g.order(), r);
  f.encoding = encode_graph6(g.relabelled(f.labelling));
  return f;
}

CanonicalForm canonical_form(const Digraph& d) {
  internal::require_solver_order(d.order(), "canonical_form");
  auto r = internal::canonical_label(d.order(), d.out_masks(), d.in_masks());
  auto f = finish(d.order(), r);
  f.encoding = encode_digraph6(d.relabelled(f.labelling));
  return f;
}

bool are_isomorphic(const UndirectedGraph& a, const UndirectedGraph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_form(a).encoding == canonical_form(b).encoding;
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  return a.order() == b.order() && a.arc_count() == b.arc_count() &&
         canonical_form(a).encoding == canonical_form(b).encoding;
}

}  // namespace dicol
