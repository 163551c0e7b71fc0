#include "dicol/sparse.hpp"

#include <cmath>
#include <limits>

#include "dicol/constructions.hpp"
#include "dicol/dicolour.hpp"
#include "dicol/rng.hpp"
#include "dicol/structure.hpp"
#include "internal/mask.hpp"

namespace dicol {

using internal::acyclic_on;
using internal::bit;
using internal::Mask;

double sparsity_bound(int n) {
  if (n < 1) throw InvalidArgument("sparsity_bound: order must be positive");
  return 2.0 * std::log2(static_cast<double>(n)) + 1.0;
}

SparsityParams sparsity_params(int n, double c0, double c1, double c2, double eps) {
  if (!(c0 > 0 && c1 > 0 && c2 > 0 && eps >= 0)) throw InvalidArgument("sparsity_params: constants must be positive");
  SparsityParams s;
  s.n = n;
  s.c0 = c0;
  s.c1 = c1;
  s.c2 = c2;
  s.eps = eps;
  s.d = sparsity_bound(n);
  s.p = c0 / std::sqrt(static_cast<double>(n));
  if (!(s.p > 0 && s.p < 1)) throw InvalidArgument("sparsity_params: edge probability outside (0,1)");
  s.k = c1 * s.d / s.p + 1;
  return s;
}

bool is_d_sparse(const UndirectedGraph& g, const VertexSet& x, double d) {
  if (x.empty()) throw InvalidArgument("is_d_sparse: empty set");
  if (!x.is_subset_of(g.vertices())) throw InvalidArgument("is_d_sparse: set out of range");
  long long twice_edges = 0;
  for (int v : x) twice_edges += (g.neighbours(v) & x).size();
  return static_cast<double>(twice_edges) <= d * x.size();
}

namespace {

void consider(SparseCheck& c, const std::array<Mask, 64>& out, Mask s,
              int twice_edges, double d_bound) {
  int size = std::popcount(s);
  if (static_cast<double>(twice_edges) <= d_bound * size) return;
  if (!acyclic_on(out, s)) return;
  double avg = static_cast<double>(twice_edges) / size;
  if (!c.densest || avg > c.densest->average_degree) c.densest = SparseViolation{VertexSet::from_mask(s), avg};
}

int twice_edges_of(const std::array<Mask, 64>& adj, Mask s) {
  int t = 0;
  for (Mask m = s; m; m &= m - 1) t += std::popcount(adj[std::countr_zero(m)] & s);
  return t;
}

}  // namespace

SparseCheck check_acyclic_sets_sparse(const Digraph& d, double d_bound, std::uint64_t samples, std::uint64_t seed) {
  internal::require_solver_order(d.order(), "check_acyclic_sets_sparse");
  int n = d.order();
  auto out = d.out_masks();
  auto in = d.in_masks();
  std::array<Mask, 64> adj{};
  for (int v = 0; v < n; ++v) adj[v] = out[v] | in[v];
  SparseCheck c;
  if (n <= kSparseExhaustiveMaxVertices) {
    c.exhaustive = true;
    std::vector<std::uint16_t> twice(std::size_t{1} << n, 0);
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      int low = std::countr_zero(s);
      Mask rest = s & (s - 1);
      twice[s] = static_cast<std::uint16_t>(twice[rest] + 2 * std::popcount(adj[low] & rest));
      consider(c, out, s, twice[s], d_bound);
    }
    c.subsets_checked = (std::uint64_t{1} << n) - 1;
    return c;
  }
  Rng rng(seed);
  Mask all = internal::all(n);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Mask s = rng.next() & all;
    if (!s) continue;
    consider(c, out, s, twice_edges_of(adj, s), d_bound);
    ++c.subsets_checked;
  }
  for (int start = 0; start < n; ++start) {
    Mask s = 0;
    for (int j = 0; j < n; ++j) {
      int v = (start + j) % n;
      if (acyclic_on(out, s | bit(v))) s |= bit(v);
    }
    consider(c, out, s, twice_edges_of(adj, s), d_bound);
    ++c.subsets_checked;
  }
  return c;
}

DSparseOrientation find_dsparse_orientation(const UndirectedGraph& g, int max_trials, std::uint64_t seed,
                                            double d_override) {
  if (max_trials < 1) throw InvalidArgument("find_dsparse_orientation: need at least one trial");
  DSparseOrientation r;
  r.d = d_override > 0 ? d_override : (g.order() > 0 ? sparsity_bound(g.order()) : 1.0);
  Rng base(seed);
  for (int t = 0; t < max_trials; ++t) {
    auto rng = base.split(static_cast<std::uint64_t>(t));
    r.orientation = random_orientation(g, rng.next());
    r.trials = t + 1;
    r.check = check_acyclic_sets_sparse(r.orientation, r.d, 100000, rng.next());
    if (!r.check.densest) {
      r.success = true;
      return r;
    }
  }
  return r;
}

double rate_function(double x, double p) {
  if (!(x > 0 && x < 1)) throw InvalidArgument("rate_function: x outside (0,1)");
  if (!(p > 0 && p < 1)) throw InvalidArgument("rate_function: p outside (0,1)");
  return x * std::log(x / p) + (1 - x) * std::log((1 - x) / (1 - p));
}

double binomial_tail_bound(int n, double p, int k) {
  if (n < 2 || k <= 0 || k >= n) throw InvalidArgument("binomial_tail_bound: need 0 < k < n");
  return std::exp(-n * rate_function(static_cast<double>(k) / n, p));
}

double chernoff_bound(double mean, double delta) {
  if (!(delta > 0 && delta < 1)) throw InvalidArgument("chernoff_bound: delta outside (0,1)");
  if (!(mean >= 0)) throw InvalidArgument("chernoff_bound: negative mean");
  return std::pow(std::exp(-delta) / std::pow(1 - delta, 1 - delta), mean);
}

LllReport verify_lll_constants(double c0, double c1, double c2, double eps) {
  for (double v : {c0, c1, c2})
    if (!(v > 0) || !std::isfinite(v)) throw InvalidArgument("verify_lll_constants: constants must be positive");
  if (!(eps >= 0) || !std::isfinite(eps)) throw InvalidArgument("verify_lll_constants: eps must be non-negative");
  LllReport r;
  r.lhs1 = c1 * (c1 - 1 - std::log(c1));
  r.rhs1 = 1 + c2;
  r.margin1 = r.lhs1 - r.rhs1;
  r.holds1 = r.margin1 > 0;
  r.lhs2 = c2;
  r.rhs2 = (1 + eps) * (c0 * c1) * (c0 * c1);
  r.margin2 = r.lhs2 - r.rhs2;
  r.holds2 = r.margin2 > 0;
  return r;
}

ChiBoundReport chi_bound_check(const UndirectedGraph& g, int exhaustive_edges, int samples, std::uint64_t seed) {
  ChiBoundReport r;
  r.n = g.order();
  r.chromatic = chromatic_number(g).value;
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  auto visit = [&](const Digraph& d) {
    ++r.orientations;
    int chi = dichromatic_number(d).value;
    if (r.orientations == 1 || chi > r.max_dichromatic) {
      r.max_dichromatic = chi;
      r.witness = d;
    }
  };
  if (m <= std::min(exhaustive_edges, 62)) {
    r.exhaustive = true;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) visit(orientation_from_bits(g, bits));
  } else {
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) visit(random_orientation(g, rng.split(i).next()));
  }
  if (r.n == 0) {
    r.bound = 0;
    r.holds = true;
    return r;
  }
  int floor_log = std::bit_width(static_cast<unsigned>(r.n)) - 1;
  r.bound = 2LL * r.max_dichromatic * (1 + floor_log);
  r.holds = r.chromatic <= r.bound;
  return r;
}

std::vector<AlphaSample> alpha_experiment(const std::vector<int>& orders, int trials, std::uint64_t seed, double c0) {
  std::vector<AlphaSample> out;
  Rng base(seed);
  for (int n : orders) {
    if (n < 2 || n > kSolverMaxVertices) throw InvalidArgument("alpha_experiment: order out of range");
    double p = c0 / std::sqrt(static_cast<double>(n));
    for (int t = 0; t < trials; ++t) {
      auto rng = base.split(static_cast<std::uint64_t>(n) * 1000003ULL + t);
      AlphaSample s;
      s.n = n;
      s.trial = t;
      UndirectedGraph g;
      for (;;) {
        g = random_gnp(n, p, rng.next());
        if (is_triangle_free(g)) break;
        ++s.rejections;
      }
      s.edges = g.size();
      auto d = random_orientation(g, rng.next());
      s.independence = independence_number(g).value;
      s.acyclic = acyclic_number(d).value;
      double root = std::sqrt(static_cast<double>(n));
      s.threshold_ln = 107.0 / 8.0 * root * std::log(static_cast<double>(n));
      s.threshold_log2 = 107.0 / 8.0 * root * std::log2(static_cast<double>(n));
      out.push_back(s);
    }
  }
  return out;
}

TournamentScan tournament_scan(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("tournament_scan: order must be positive");
  TournamentScan r;
  r.n = n;
  r.min_acyclic = n + 1;
  auto visit = [&](const Digraph& t) {
    ++r.tournaments;
    int a = acyclic_number(t).value;
    if (a < r.min_acyclic) {
      r.min_acyclic = a;
      r.witness = t;
    }
  };
  auto kn = complete_graph(n);
  if (samples == 0) {
    if (n > 7) throw LimitExceeded("tournament_scan: exhaustive scan limited to order 7");
    r.exhaustive = true;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << kn.size()); ++bits) visit(orientation_from_bits(kn, bits));
  } else {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) visit(random_orientation(kn, rng.split(i).next()));
  }
  return r;
}

TransitiveFourScan transitive_four_scan(int n) {
  if (n < 1 || n > 8) throw LimitExceeded("transitive_four_scan: order must be in [1, 8]");
  TransitiveFourScan r;
  r.n = n;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  int m = static_cast<int>(pairs.size());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::array<Mask, 8> out{};
    for (int i = 0; i < m; ++i) {
      auto [u, v] = pairs[i];
      if ((bits >> i) & 1)
        out[v] |= bit(u);
      else
        out[u] |= bit(v);
    }
    ++r.tournaments;
    bool found = false;
    for (int v = 0; v < n && !found; ++v)
      for (Mask o = out[v]; o && !found; o &= o - 1) found = std::popcount(out[std::countr_zero(o)] & out[v]) >= 2;
    if (!found) {
      ++r.without;
      if (!r.example) {
        Digraph t(n);
        for (int u = 0; u < n; ++u)
          for (Mask o = out[u]; o; o &= o - 1) t.add_arc(u, std::countr_zero(o));
        r.example = t;
      }
    }
  }
  return r;
}

}  // namespace dicol
