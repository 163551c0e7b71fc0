#include "dicol/structure.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <numeric>
#include <string>

#include "internal/mask.hpp"

namespace dicol {

UndirectedGraph underlying_graph(const Digraph& d) {
  UndirectedGraph g(d.order());
  for (auto [u, v] : d.arcs())
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

bool is_triangle_free(const UndirectedGraph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbours(u).intersects(g.neighbours(v))) return false;
  return true;
}

bool is_forest(const UndirectedGraph& g) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_connected(const UndirectedGraph& g) {
  if (g.order() == 0) return true;
  VertexSet seen{0}, frontier{0};
  while (frontier.any()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbours(v);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen.size() == g.order();
}

bool is_biconnected(const UndirectedGraph& g) {
  const int n = g.order();
  if (n < 2) return false;
  if (!is_connected(g)) return false;
  if (n == 2) return true;
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool cut = false;
  // Recursion depth is bounded by kMaxVertices.
  auto dfs = [&](auto&& self, int v, int parent) -> void {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbours(v)) {
      if (disc[w] < 0) {
        ++children;
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent >= 0 && low[w] >= disc[v]) cut = true;
      } else if (w != parent) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent < 0 && children > 1) cut = true;
  };
  dfs(dfs, 0, -1);
  return !cut;
}

bool is_acyclic_induced(const Digraph& d, const VertexSet& s) {
  VertexSet left = s & d.vertices();
  bool progress = true;
  while (progress && left.any()) {
    progress = false;
    for (int v : left) {
      if (!d.in(v).intersects(left) || !d.out(v).intersects(left)) {
        left.erase(v);
        progress = true;
      }
    }
  }
  return left.empty();
}

std::optional<std::vector<int>> find_directed_cycle(const Digraph& d, const VertexSet& s) {
  VertexSet core = s & d.vertices();
  bool progress = true;
  while (progress && core.any()) {
    progress = false;
    for (int v : core)
      if (!d.in(v).intersects(core) || !d.out(v).intersects(core)) {
        core.erase(v);
        progress = true;
      }
  }
  if (core.empty()) return std::nullopt;
  // Every vertex of the core has an out-neighbour in the core: walk until a repeat.
  std::vector<int> pos(d.order(), -1), walk;
  int v = core.first();
  while (pos[v] < 0) {
    pos[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = (d.out(v) & core).first();
  }
  return std::vector<int>(walk.begin() + pos[v], walk.end());
}

// ---------------------------------------------------------------------------
// Acyclic number

namespace {

using internal::Mask;
using internal::bit;

class AcyclicSearch {
 public:
  AcyclicSearch(const Digraph& d, std::uint64_t budget)
      : n_(d.order()), out_(d.out_masks()), in_(d.in_masks()), budget_(budget) {}

  AcyclicNumberResult run() {
    auto t0 = std::chrono::steady_clock::now();
    greedy();
    std::array<Mask, 64> reach{};
    search(0, internal::all(n_), reach, 0);
    AcyclicNumberResult r;
    r.value = std::popcount(best_);
    r.witness = VertexSet::from_mask(best_);
    r.stats = stats_;
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

 private:
  // Vertices reachable from an out-neighbour of u inside a, plus those out-neighbours.
  Mask forward_closure(int u, Mask a, const std::array<Mask, 64>& reach) const {
    Mask r = out_[u] & a;
    for (Mask m = r; m; m &= m - 1) r |= reach[std::countr_zero(m)];
    return r;
  }

  bool closes_cycle(int u, Mask a, const std::array<Mask, 64>& reach) const {
    return (forward_closure(u, a, reach) & in_[u] & a) != 0;
  }

  void include(int v, Mask a, std::array<Mask, 64>& reach) const {
    Mask fwd = forward_closure(v, a, reach);
    reach[v] = fwd;
    Mask preds = in_[v] & a;
    for (Mask m = a; m; m &= m - 1) {
      int x = std::countr_zero(m);
      if ((bit(x) | reach[x]) & preds) reach[x] |= bit(v) | fwd;
    }
  }

  // Vertices of w lying on some directed cycle of d[w].
  Mask cyclic_core(Mask w) const {
    bool progress = true;
    while (progress) {
      progress = false;
      for (Mask m = w; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (!(in_[v] & w) || !(out_[v] & w)) {
          w &= ~bit(v);
          progress = true;
        }
      }
    }
    return w;
  }

  // Shortest cycle through `start` inside w, as a mask; 0 if none.
  Mask shortest_cycle_through(int start, Mask w) const {
    std::array<int, 64> parent;
    Mask seen = bit(start), frontier = bit(start);
    parent[start] = -1;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) {
        int u = std::countr_zero(m);
        if (out_[u] & bit(start)) {
          Mask cyc = 0;
          for (int x = u; x >= 0; x = parent[x]) cyc |= bit(x);
          return cyc;
        }
        Mask nb = out_[u] & w & ~seen & ~next;
        for (Mask q = nb; q; q &= q - 1) parent[std::countr_zero(q)] = u;
        next |= nb;
      }
      seen |= next;
      frontier = next;
    }
    return 0;
  }

  // Lower bound on the number of candidates that must be dropped.
  int cycle_packing_bound(Mask a, Mask c) const {
    int lb = 0;
    Mask w = cyclic_core(a | c);
    while (w & c) {
      int start = std::countr_zero(w & c);
      Mask cyc = shortest_cycle_through(start, w);
      if (!cyc) {
        w &= ~bit(start);
      } else {
        ++lb;
        w &= ~(cyc & c);
      }
      w = cyclic_core(w);
    }
    return lb;
  }

  void greedy() {
    std::array<Mask, 64> reach{};
    Mask a = 0;
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return std::popcount(out_[x]) * std::popcount(in_[x]) <
             std::popcount(out_[y]) * std::popcount(in_[y]);
    });
    for (int v : order)
      if (!closes_cycle(v, a, reach)) {
        include(v, a, reach);
        a |= bit(v);
      }
    best_ = a;
  }

  void search(Mask a, Mask c, std::array<Mask, 64>& reach, int depth) {
    if (++stats_.nodes > budget_)
      throw BudgetExceeded("acyclic_number: node budget exhausted", stats_);
    stats_.max_depth = std::max(stats_.max_depth, depth);
    while (true) {
      for (Mask m = c; m; m &= m - 1) {
        int u = std::countr_zero(m);
        if (closes_cycle(u, a, reach)) c &= ~bit(u);
      }
      Mask free = c & ~cyclic_core(a | c);
      if (!free) break;
      for (Mask m = free; m; m &= m - 1) {
        int u = std::countr_zero(m);
        include(u, a, reach);
        a |= bit(u);
      }
      c &= ~free;
    }
    int have = std::popcount(a);
    if (have + std::popcount(c) <= std::popcount(best_)) return;
    if (!c) {
      best_ = a;
      return;
    }
    if (have + std::popcount(c) - cycle_packing_bound(a, c) <= std::popcount(best_)) return;

    Mask w = a | c;
    int v = -1, score = -1;
    for (Mask m = c; m; m &= m - 1) {
      int u = std::countr_zero(m);
      int s = std::popcount(out_[u] & w) * std::popcount(in_[u] & w);
      if (s > score) {
        score = s;
        v = u;
      }
    }
    {
      auto r2 = reach;
      include(v, a, r2);
      search(a | bit(v), c & ~bit(v), r2, depth + 1);
    }
    search(a, c & ~bit(v), reach, depth + 1);
  }

  int n_;
  std::array<Mask, 64> out_, in_;
  std::uint64_t budget_;
  Mask best_ = 0;
  SearchStats stats_;
};

// Maximum independent set via clique search in the complement with a greedy
// colouring bound.
class IndependentSearch {
 public:
  IndependentSearch(const UndirectedGraph& g, std::uint64_t budget) : n_(g.order()), budget_(budget) {
    auto adj = g.masks();
    Mask all = internal::all(n_);
    for (int v = 0; v < n_; ++v) comp_[v] = all & ~adj[v] & ~bit(v);
  }

  IndependenceResult run() {
    auto t0 = std::chrono::steady_clock::now();
    expand(0, internal::all(n_), 0);
    IndependenceResult r;
    r.value = std::popcount(best_);
    r.witness = VertexSet::from_mask(best_);
    r.stats = stats_;
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

 private:
  void expand(Mask clique, Mask cand, int depth) {
    if (++stats_.nodes > budget_)
      throw BudgetExceeded("independence_number: node budget exhausted", stats_);
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (!cand) {
      if (std::popcount(clique) > std::popcount(best_)) best_ = clique;
      return;
    }
    // Greedy colouring of cand in the complement graph.
    std::array<int, 64> order, colour;
    int cnt = 0, k = 0;
    Mask uncol = cand;
    while (uncol) {
      ++k;
      Mask q = uncol;
      while (q) {
        int v = std::countr_zero(q);
        q &= ~bit(v) & ~comp_[v];
        uncol &= ~bit(v);
        order[cnt] = v;
        colour[cnt] = k;
        ++cnt;
      }
    }
    int size = std::popcount(clique);
    for (int i = cnt - 1; i >= 0; --i) {
      if (size + colour[i] <= std::popcount(best_)) return;
      int v = order[i];
      expand(clique | bit(v), cand & comp_[v], depth + 1);
      cand &= ~bit(v);
    }
  }

  int n_;
  std::array<Mask, 64> comp_{};
  std::uint64_t budget_;
  Mask best_ = 0;
  SearchStats stats_;
};

}  // namespace

AcyclicNumberResult acyclic_number(const Digraph& d, std::uint64_t budget) {
  internal::require_solver_order(d.order(), "acyclic_number");
  return AcyclicSearch(d, budget).run();
}

IndependenceResult independence_number(const UndirectedGraph& g, std::uint64_t budget) {
  internal::require_solver_order(g.order(), "independence_number");
  return IndependentSearch(g, budget).run();
}

// ---------------------------------------------------------------------------
// Arboricity: matroid partition with shortest augmenting paths.

namespace {

class ForestPartitioner {
 public:
  ForestPartitioner(const UndirectedGraph& g, int k) : n_(g.order()), k_(k), edges_(g.edges()) {
    forest_of_.assign(edges_.size(), -1);
  }

  ForestPartition run() {
    ForestPartition r;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
      if (!insert(e)) return r;
    r.feasible = true;
    r.forest_of = forest_of_;
    return r;
  }

 private:
  // Component labels of forest f.
  std::vector<int> components(int f) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
      if (forest_of_[e] == f) parent[find(edges_[e].first)] = find(edges_[e].second);
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Edges of forest f on the tree path between u and v (same component).
  std::vector<int> tree_path(int f, int u, int v) const {
    std::vector<std::vector<std::pair<int, int>>> adj(n_);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
      if (forest_of_[e] == f) {
        adj[edges_[e].first].push_back({edges_[e].second, e});
        adj[edges_[e].second].push_back({edges_[e].first, e});
      }
    std::vector<int> via(n_, -2);
    std::deque<int> q{u};
    via[u] = -1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (x == v) break;
      for (auto [y, e] : adj[x])
        if (via[y] == -2) {
          via[y] = e;
          q.push_back(y);
        }
    }
    std::vector<int> path;
    for (int x = v; x != u;) {
      int e = via[x];
      path.push_back(e);
      x = edges_[e].first == x ? edges_[e].second : edges_[e].first;
    }
    return path;
  }

  bool insert(int e0) {
    std::vector<std::vector<int>> comp(k_);
    for (int f = 0; f < k_; ++f) comp[f] = components(f);
    const int m = static_cast<int>(edges_.size());
    std::vector<int> pred(m, -2), pred_forest(m, -1);
    std::deque<int> q{e0};
    pred[e0] = -1;
    while (!q.empty()) {
      int e = q.front();
      q.pop_front();
      auto [u, v] = edges_[e];
      for (int f = 0; f < k_; ++f) {
        if (f == forest_of_[e]) continue;
        if (comp[f][u] != comp[f][v]) {
          augment(e, f, pred);
          return true;
        }
        for (int g : tree_path(f, u, v))
          if (pred[g] == -2) {
            pred[g] = e;
            q.push_back(g);
          }
      }
    }
    return false;
  }

  // e moves into forest f; each predecessor takes the slot its successor vacated.
  void augment(int e, int f, const std::vector<int>& pred) {
    while (e >= 0) {
      int vacated = forest_of_[e];
      forest_of_[e] = f;
      f = vacated;
      e = pred[e];
    }
  }

  int n_, k_;
  std::vector<Edge> edges_;
  std::vector<int> forest_of_;
};

}  // namespace

ForestPartition arboricity_at_most(const UndirectedGraph& g, int k) {
  if (k < 0) throw InvalidArgument("arboricity_at_most: k must be non-negative");
  if (k == 0) {
    ForestPartition r;
    r.feasible = g.size() == 0;
    return r;
  }
  // Edge-count bound is only a shortcut; the verdict comes from the partition.
  if (g.size() > k * std::max(0, g.order() - 1)) return {};
  return ForestPartitioner(g, k).run();
}

int arboricity(const UndirectedGraph& g) {
  int k = 0;
  while (!arboricity_at_most(g, k).feasible) ++k;
  return k;
}

}  // namespace dicol
