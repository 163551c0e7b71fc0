#include "dicol/order.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "dicol/dicolour.hpp"
#include "dicol/structure.hpp"
#include "internal/mask.hpp"

namespace dicol {

using internal::Mask;
using internal::bit;

VertexOrder::VertexOrder(std::vector<int> sequence) : seq_(std::move(sequence)) {
  const int n = static_cast<int>(seq_.size());
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = seq_[i];
    if (v < 0 || v >= n || pos_[v] >= 0) throw InvalidArgument("vertex order is not a permutation");
    pos_[v] = i;
  }
}

VertexOrder VertexOrder::identity(int n) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  return VertexOrder(std::move(s));
}

UndirectedGraph backedge_graph(const Digraph& d, const VertexOrder& order) {
  if (order.size() != d.order()) throw InvalidArgument("order does not cover the vertex set");
  UndirectedGraph g(d.order());
  for (auto [v, u] : d.arcs())
    if (order.before(u, v) && !g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

OrderMinimum dichromatic_via_orders(const Digraph& d) {
  const int n = d.order();
  if (n > kOrderEnumerationMaxVertices)
    throw LimitExceeded("dichromatic_via_orders enumerates n! orders; n must be <= 9");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  OrderMinimum best;
  best.value = n + 1;
  if (n == 0) return {0, VertexOrder{}};
  do {
    VertexOrder ord(perm);
    int chi = chromatic_number(backedge_graph(d, ord)).value;
    if (chi < best.value) {
      best.value = chi;
      best.order = ord;
      if (chi == 1) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

// Backedge degree of v split by side: preds are before v, succs after.
struct SideCount {
  int back_pred = 0, pred = 0, back_succ = 0, succ = 0, digons = 0;
};

SideCount side_count(const Digraph& d, const std::vector<int>& pos, int v) {
  SideCount s;
  for (int u : d.out(v) | d.in(v)) {
    bool fwd = d.has_arc(v, u), bwd = d.has_arc(u, v);
    if (fwd && bwd) {
      ++s.digons;
      continue;
    }
    if (pos[u] < pos[v]) {
      ++s.pred;
      if (fwd) ++s.back_pred;  // arc v->u pointing backwards
    } else {
      ++s.succ;
      if (bwd) ++s.back_succ;  // arc u->v pointing backwards
    }
  }
  return s;
}

}  // namespace

bool satisfies_half_degree_bound(const Digraph& d, const VertexOrder& order) {
  auto g = backedge_graph(d, order);
  for (int v = 0; v < d.order(); ++v)
    if (g.degree(v) > (d.in_degree(v) + d.out_degree(v)) / 2) return false;
  return true;
}

VertexOrder halve_degree_order(const Digraph& d) {
  const int n = d.order();
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::vector<int> pos = seq;
  auto rebuild = [&] {
    for (int i = 0; i < n; ++i) pos[seq[i]] = i;
  };
  // Each move strictly lowers the number of backedges, so this terminates.
  while (true) {
    int moved = -1;
    for (int v = 0; v < n && moved < 0; ++v) {
      auto s = side_count(d, pos, v);
      int deg = d.in_degree(v) + d.out_degree(v);
      if (s.back_pred + s.back_succ + s.digons <= deg / 2) continue;
      seq.erase(seq.begin() + pos[v]);
      if (2 * s.back_succ > s.succ)
        seq.push_back(v);
      else
        seq.insert(seq.begin(), v);
      rebuild();
      moved = v;
    }
    if (moved < 0) break;
  }
  return VertexOrder(std::move(seq));
}

bool is_directed_linear_forest(const Digraph& d, const LinearForest& f) {
  const int n = d.order();
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  Digraph h(n);
  for (auto [u, v] : f.arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v || !d.has_arc(u, v)) return false;
    if (h.has_arc(u, v)) return false;
    h.add_arc(u, v);
    if (++outdeg[u] > 1 || ++indeg[v] > 1) return false;
  }
  return is_acyclic(h);
}

namespace {

class LinearForestSearch {
 public:
  LinearForestSearch(const Digraph& d, std::uint64_t budget, int stop_at)
      : n_(d.order()), out_(d.out_masks()), budget_(budget), stop_at_(stop_at) {
    for (int v = 0; v < n_; ++v) {
      head_of_[v] = v;
      tail_of_[v] = v;
    }
  }

  LinearForestResult run() {
    auto t0 = std::chrono::steady_clock::now();
    succ_.fill(-1);
    try {
      search(0, 0, internal::all(n_));
    } catch (const Found&) {
    }
    LinearForestResult r;
    r.value = best_;
    for (int v = 0; v < n_; ++v)
      if (best_succ_[v] >= 0) r.witness.arcs.emplace_back(v, best_succ_[v]);
    r.stats = stats_;
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

 private:
  struct Found {};

  // Vertices are decided in index order: vertex v picks a successor or none.
  // free_in holds vertices that have no predecessor yet. head_of_/tail_of_
  // map path endpoints to each other.
  void search(int v, int arcs, Mask free_in) {
    if (++stats_.nodes > budget_)
      throw BudgetExceeded("max_directed_linear_forest: budget exhausted", stats_);
    stats_.max_depth = std::max(stats_.max_depth, v);
    if (arcs > best_) {
      best_ = arcs;
      best_succ_ = succ_;
      if (stop_at_ >= 0 && best_ >= stop_at_) throw Found{};
    }
    if (v == n_) return;
    // Each undecided vertex adds at most one arc, and every arc needs a free head.
    int remaining = 0;
    Mask heads = 0;
    for (int u = v; u < n_; ++u)
      if (out_[u] & free_in) {
        ++remaining;
        heads |= out_[u] & free_in;
      }
    if (arcs + std::min(remaining, std::popcount(heads)) <= best_) return;

    for (Mask m = out_[v] & free_in; m; m &= m - 1) {
      int w = std::countr_zero(m);
      // v is the tail of its path; w is the head of its path. Joining closes
      // a cycle exactly when they lie on the same path.
      int h = head_of_[v];
      int t = tail_of_[w];
      if (h == w) continue;
      head_of_[t] = h;
      tail_of_[h] = t;
      succ_[v] = w;
      search(v + 1, arcs + 1, free_in & ~bit(w));
      succ_[v] = -1;
      head_of_[t] = w;
      tail_of_[h] = v;
    }
    search(v + 1, arcs, free_in);
  }

  int n_;
  std::array<Mask, 64> out_;
  std::uint64_t budget_;
  int stop_at_;
  // For a path tail t, head_of_[t] is its head; for a head h, tail_of_[h] is its tail.
  std::array<int, 64> head_of_{}, tail_of_{};
  std::array<int, 64> succ_{}, best_succ_{};
  int best_ = -1;
  SearchStats stats_;
};

}  // namespace

LinearForestResult max_directed_linear_forest(const Digraph& d, std::uint64_t budget, int stop_at) {
  internal::require_solver_order(d.order(), "max_directed_linear_forest");
  if (d.order() == 0) return {};
  return LinearForestSearch(d, budget, stop_at).run();
}

OrientationForest min_orientation_linear_forest(const UndirectedGraph& g, std::uint64_t budget) {
  auto alpha = independence_number(g, budget);
  OrientationForest r;
  r.value = g.order() - alpha.value;
  r.sources = alpha.witness;
  r.orientation = Digraph(g.order());
  for (auto [u, v] : g.edges()) {
    if (alpha.witness.contains(v))
      r.orientation.add_arc(v, u);
    else
      r.orientation.add_arc(u, v);
  }
  return r;
}

}  // namespace dicol
