#include "dicol/dicolour.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <numeric>
#include <string>

#include "dicol/structure.hpp"
#include "internal/mask.hpp"

namespace dicol {

using internal::Mask;
using internal::bit;

VertexSet Dicolouring::colour_class(int c) const {
  VertexSet s;
  for (int v = 0; v < static_cast<int>(colour.size()); ++v)
    if (colour[v] == c) s.insert(v);
  return s;
}

bool verify_dicolouring(const Digraph& d, const Dicolouring& c) {
  if (static_cast<int>(c.colour.size()) != d.order())
    throw InvalidArgument("dicolouring is not total on the vertex set");
  for (int x : c.colour)
    if (x < 1 || x > c.k) throw InvalidArgument("dicolouring uses a colour outside [1, k]");
  for (int i = 1; i <= c.k; ++i)
    if (!is_acyclic_induced(d, c.colour_class(i))) return false;
  return true;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::dicolourable: return "dicolourable";
    case Verdict::not_dicolourable: return "not-dicolourable";
    case Verdict::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

// Order in which vertices leave when repeatedly deleting a minimum-degree
// vertex, reversed; rank[v] is the position of v (lower = branch earlier).
std::array<int, 64> degeneracy_rank(int n, const std::array<Mask, 64>& nb) {
  std::array<int, 64> rank{};
  Mask left = internal::all(n);
  std::vector<int> removal;
  while (left) {
    int best = -1, bd = 1 << 30;
    for (Mask m = left; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int dg = std::popcount(nb[v] & left);
      if (dg < bd) {
        bd = dg;
        best = v;
      }
    }
    removal.push_back(best);
    left &= ~bit(best);
  }
  for (int i = 0; i < n; ++i) rank[removal[n - 1 - i]] = i;
  return rank;
}

class DicolourSearch {
 public:
  DicolourSearch(const Digraph& d, int k, std::uint64_t budget)
      : n_(d.order()), k_(k), out_(d.out_masks()), in_(d.in_masks()), budget_(budget) {
    std::array<Mask, 64> nb{};
    for (int v = 0; v < n_; ++v) nb[v] = out_[v] | in_[v];
    rank_ = degeneracy_rank(n_, nb);
  }

  SolveOutcome run() {
    auto t0 = std::chrono::steady_clock::now();
    SolveOutcome r;
    State s{};
    s.unassigned = internal::all(n_);
    s.colour.fill(-1);
    for (int v = 0; v < n_; ++v) s.dom[v] = 1;  // only the first colour may be opened
    bool ok = false;
    try {
      ok = search(s, 0);
      r.verdict = ok ? Verdict::dicolourable : Verdict::not_dicolourable;
    } catch (const BudgetExceeded&) {
      r.verdict = Verdict::budget_exceeded;
    }
    if (ok) {
      Dicolouring c;
      c.k = k_;
      c.colour.resize(n_);
      for (int v = 0; v < n_; ++v) c.colour[v] = solution_[v] + 1;
      r.certificate = std::move(c);
    }
    r.stats = stats_;
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

 private:
  struct State {
    std::array<Mask, 64> reach;  // reach[v]: vertices of v's class reachable from v
    std::array<Mask, 64> cls;    // colour classes
    std::array<std::uint64_t, 64> dom;  // admissible colours of unassigned vertices
    std::array<int, 64> colour;
    Mask unassigned;
    int used;
  };

  Mask forward_closure(const State& s, int u, int c) const {
    Mask r = out_[u] & s.cls[c];
    for (Mask m = r; m; m &= m - 1) r |= s.reach[std::countr_zero(m)];
    return r;
  }

  bool closes_cycle(const State& s, int u, int c) const {
    return (forward_closure(s, u, c) & in_[u] & s.cls[c]) != 0;
  }

  // Assigns v to c and filters the domains. Returns false on a wipe-out.
  bool assign(State& s, int v, int c, Mask& forced) const {
    Mask cls = s.cls[c];
    Mask fwd = forward_closure(s, v, c);
    s.reach[v] = fwd;
    Mask preds = in_[v] & cls;
    if (preds)
      for (Mask m = cls; m; m &= m - 1) {
        int x = std::countr_zero(m);
        if ((bit(x) | s.reach[x]) & preds) s.reach[x] |= bit(v) | fwd;
      }
    s.cls[c] |= bit(v);
    s.colour[v] = c;
    s.unassigned &= ~bit(v);
    if (c == s.used) {
      ++s.used;
      if (s.used < k_)
        for (Mask m = s.unassigned; m; m &= m - 1) s.dom[std::countr_zero(m)] |= bit(s.used);
    }
    // Only class c changed, so only colour c can leave a domain.
    Mask touched = (out_[v] | in_[v]) & s.unassigned;
    for (Mask m = s.unassigned; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (!((s.dom[u] >> c) & 1)) continue;
      // A vertex with no arc into the class cannot close a cycle through it.
      if (!(touched & bit(u)) && !((out_[u] & s.cls[c]) && (in_[u] & s.cls[c]))) continue;
      if (closes_cycle(s, u, c)) {
        s.dom[u] &= ~bit(c);
        if (!s.dom[u]) return false;
        if (std::popcount(s.dom[u]) == 1) forced |= bit(u);
      }
    }
    return true;
  }

  bool propagate(State& s, Mask forced) const {
    while (forced) {
      int u = std::countr_zero(forced);
      forced &= ~bit(u);
      if (!(s.unassigned & bit(u))) continue;
      if (!s.dom[u]) return false;
      if (std::popcount(s.dom[u]) != 1) continue;
      int c = std::countr_zero(s.dom[u]);
      if (!assign(s, u, c, forced)) return false;
    }
    return true;
  }

  bool search(State& s, int depth) {
    if (++stats_.nodes > budget_) throw BudgetExceeded("dicolouring search budget exhausted", stats_);
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (!s.unassigned) {
      solution_ = s.colour;
      return true;
    }
    int v = -1, best_size = 1 << 30, best_rank = 1 << 30;
    for (Mask m = s.unassigned; m; m &= m - 1) {
      int u = std::countr_zero(m);
      int sz = std::popcount(s.dom[u]);
      if (sz < best_size || (sz == best_size && rank_[u] < best_rank)) {
        best_size = sz;
        best_rank = rank_[u];
        v = u;
      }
    }
    for (std::uint64_t dm = s.dom[v]; dm; dm &= dm - 1) {
      int c = std::countr_zero(dm);
      State t = s;
      Mask forced = 0;
      if (assign(t, v, c, forced) && propagate(t, forced) && search(t, depth + 1)) return true;
    }
    return false;
  }

  int n_, k_;
  std::array<Mask, 64> out_, in_;
  std::array<int, 64> rank_{};
  std::uint64_t budget_;
  std::array<int, 64> solution_{};
  SearchStats stats_;
};

}  // namespace

SolveOutcome is_k_dicolourable(const Digraph& d, int k, std::uint64_t budget) {
  if (k < 1) throw InvalidArgument("is_k_dicolourable: k must be at least 1");
  internal::require_solver_order(d.order(), "is_k_dicolourable");
  if (d.order() == 0) {
    SolveOutcome r;
    r.verdict = Verdict::dicolourable;
    r.certificate = Dicolouring{k, {}};
    return r;
  }
  int kk = std::min(k, d.order());
  auto r = DicolourSearch(d, kk, budget).run();
  if (r.certificate) r.certificate->k = k;
  return r;
}

DichromaticResult dichromatic_number(const Digraph& d, std::uint64_t budget) {
  DichromaticResult r;
  if (d.order() == 0) return r;
  SearchStats last_refusal;
  for (int k = 1; k <= d.order(); ++k) {
    auto o = is_k_dicolourable(d, k, budget);
    r.total.nodes += o.stats.nodes;
    r.total.seconds += o.stats.seconds;
    r.total.max_depth = std::max(r.total.max_depth, o.stats.max_depth);
    if (o.verdict == Verdict::budget_exceeded)
      throw BudgetExceeded("dichromatic_number: budget exhausted at k=" + std::to_string(k), r.total);
    if (o.verdict == Verdict::dicolourable) {
      r.value = k;
      r.certificate = *o.certificate;
      r.refusal = last_refusal;
      return r;
    }
    last_refusal = o.stats;
  }
  throw Error(Errc::internal, "dichromatic_number: no k <= n succeeded");
}

bool DicriticalReport::vertex_critical() const {
  return std::all_of(vertex_deletions.begin(), vertex_deletions.end(),
                     [](const DeletionCertificate& c) { return c.dicolourable; });
}

bool DicriticalReport::arc_critical() const {
  return std::all_of(arc_deletions.begin(), arc_deletions.end(),
                     [](const DeletionCertificate& c) { return c.dicolourable; });
}

std::vector<int> DicriticalReport::failing_vertices() const {
  std::vector<int> out;
  for (const auto& c : vertex_deletions)
    if (!c.dicolourable) out.push_back(c.vertex);
  return out;
}

std::vector<Arc> DicriticalReport::failing_arcs() const {
  std::vector<Arc> out;
  for (const auto& c : arc_deletions)
    if (!c.dicolourable) out.push_back(c.arc);
  return out;
}

DicriticalReport is_k_dicritical(const Digraph& d, int k, std::uint64_t budget) {
  if (k < 1) throw InvalidArgument("is_k_dicritical: k must be at least 1");
  DicriticalReport rep;
  rep.k = k;
  if (k == 1) {
    rep.not_below_k = true;
  } else {
    auto below = is_k_dicolourable(d, k - 1, budget);
    if (below.verdict == Verdict::budget_exceeded)
      throw BudgetExceeded("is_k_dicritical: budget exhausted on the refusal", below.stats);
    rep.not_below_k = below.verdict == Verdict::not_dicolourable;
    rep.refusal = below.stats;
  }
  auto at = is_k_dicolourable(d, k, budget);
  if (at.verdict == Verdict::budget_exceeded)
    throw BudgetExceeded("is_k_dicritical: budget exhausted at k", at.stats);
  rep.k_dicolourable = at.verdict == Verdict::dicolourable;
  rep.k_certificate = at.certificate;

  auto decide = [&](const Digraph& h) -> SolveOutcome {
    if (k == 1) {
      // 0-dicolourable only when empty.
      SolveOutcome o;
      o.verdict = h.order() == 0 ? Verdict::dicolourable : Verdict::not_dicolourable;
      if (h.order() == 0) o.certificate = Dicolouring{0, {}};
      return o;
    }
    auto o = is_k_dicolourable(h, k - 1, budget);
    if (o.verdict == Verdict::budget_exceeded)
      throw BudgetExceeded("is_k_dicritical: budget exhausted on a deletion", o.stats);
    return o;
  };

  for (int v = 0; v < d.order(); ++v) {
    DeletionCertificate c;
    c.vertex = v;
    auto o = decide(d.without_vertex(v));
    c.dicolourable = o.verdict == Verdict::dicolourable;
    c.stats = o.stats;
    if (o.certificate) {
      Dicolouring full;
      full.k = o.certificate->k;
      full.colour.assign(d.order(), 0);
      for (int u = 0, j = 0; u < d.order(); ++u)
        if (u != v) full.colour[u] = o.certificate->colour[j++];
      c.colouring = std::move(full);
    }
    rep.vertex_deletions.push_back(std::move(c));
  }
  for (auto a : d.arcs()) {
    DeletionCertificate c;
    c.arc = a;
    auto o = decide(d.without_arc(a.first, a.second));
    c.dicolourable = o.verdict == Verdict::dicolourable;
    c.stats = o.stats;
    c.colouring = o.certificate;
    rep.arc_deletions.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Proper colouring: DSATUR branch and bound.

namespace {

class ColourSearch {
 public:
  ColourSearch(const UndirectedGraph& g, std::uint64_t budget)
      : n_(g.order()), adj_(g.masks()), budget_(budget) {}

  ChromaticResult run() {
    auto t0 = std::chrono::steady_clock::now();
    lower_ = greedy_clique();
    best_ = n_ + 1;
    std::array<std::uint64_t, 64> sat{};
    std::array<int, 64> colour;
    colour.fill(-1);
    search(internal::all(n_), sat, colour, 0, 0);
    ChromaticResult r;
    r.value = best_;
    r.colouring.resize(n_);
    for (int v = 0; v < n_; ++v) r.colouring[v] = best_colour_[v] + 1;
    r.stats = stats_;
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

 private:
  int greedy_clique() const {
    int best = n_ > 0 ? 1 : 0;
    for (int s = 0; s < n_; ++s) {
      Mask cand = adj_[s];
      int size = 1;
      while (cand) {
        int pick = -1, deg = -1;
        for (Mask m = cand; m; m &= m - 1) {
          int v = std::countr_zero(m);
          int dg = std::popcount(adj_[v] & cand);
          if (dg > deg) {
            deg = dg;
            pick = v;
          }
        }
        ++size;
        cand &= adj_[pick];
      }
      best = std::max(best, size);
    }
    return best;
  }

  void search(Mask uncoloured, std::array<std::uint64_t, 64>& sat, std::array<int, 64>& colour,
              int used, int depth) {
    if (++stats_.nodes > budget_) throw BudgetExceeded("chromatic_number: budget exhausted", stats_);
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (!uncoloured) {
      best_ = used;
      best_colour_ = colour;
      return;
    }
    int v = -1, bs = -1, bd = -1;
    for (Mask m = uncoloured; m; m &= m - 1) {
      int u = std::countr_zero(m);
      int s = std::popcount(sat[u]);
      int dg = std::popcount(adj_[u] & uncoloured);
      if (s > bs || (s == bs && dg > bd)) {
        bs = s;
        bd = dg;
        v = u;
      }
    }
    int limit = std::min(used + 1, best_ - 1);
    for (int c = 0; c < limit; ++c) {
      if ((sat[v] >> c) & 1) continue;
      auto saved = sat;
      for (Mask m = adj_[v] & uncoloured; m; m &= m - 1) sat[std::countr_zero(m)] |= bit(c);
      colour[v] = c;
      search(uncoloured & ~bit(v), sat, colour, std::max(used, c + 1), depth + 1);
      colour[v] = -1;
      sat = saved;
      if (best_ <= lower_) return;
      limit = std::min(used + 1, best_ - 1);
    }
  }

  int n_;
  std::array<Mask, 64> adj_;
  std::uint64_t budget_;
  int lower_ = 0, best_ = 0;
  std::array<int, 64> best_colour_{};
  SearchStats stats_;
};

}  // namespace

ChromaticResult chromatic_number(const UndirectedGraph& g, std::uint64_t budget) {
  internal::require_solver_order(g.order(), "chromatic_number");
  if (g.order() == 0) return {};
  return ColourSearch(g, budget).run();
}

bool is_proper_colouring(const UndirectedGraph& g, const std::vector<int>& colouring) {
  if (static_cast<int>(colouring.size()) != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (colouring[u] == colouring[v]) return false;
  return true;
}

}  // namespace dicol
