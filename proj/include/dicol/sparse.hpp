#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dicol/graph.hpp"

namespace dicol {

struct SparsityParams {
  int n = 0;
  double d = 0;  // 2 log2(n) + 1
  double p = 0;  // c0 / sqrt(n)
  double k = 0;  // c1 d / p + 1
  double c0 = 0.513, c1 = 3.43, c2 = 3.1, eps = 1e-4;
};

SparsityParams sparsity_params(int n, double c0 = 0.513, double c1 = 3.43, double c2 = 3.1,
                               double eps = 1e-4);

// 2 log2(n) + 1.
double sparsity_bound(int n);

// Average degree of G[X] is at most d. X must be nonempty.
bool is_d_sparse(const UndirectedGraph& g, const VertexSet& x, double d);

// Exhaustive subset limit for acyclic-set verification.
inline constexpr int kSparseExhaustiveMaxVertices = 18;

struct SparseViolation {
  VertexSet set;        // acyclic and denser than d
  double average_degree = 0;
};

struct SparseCheck {
  bool exhaustive = false;
  std::uint64_t subsets_checked = 0;
  std::optional<SparseViolation> densest;  // empty when no violation was seen
};

// Every acyclic set of d is d_bound-sparse in the underlying graph. Exhaustive
// for order <= 18; otherwise `samples` random subsets plus every greedy
// maximal acyclic set grown from each vertex.
SparseCheck check_acyclic_sets_sparse(const Digraph& d, double d_bound, std::uint64_t samples = 100000,
                                      std::uint64_t seed = 0);

struct DSparseOrientation {
  bool success = false;
  Digraph orientation;      // last orientation tried
  int trials = 0;           // orientations tried
  double d = 0;
  SparseCheck check;        // of the last orientation
};

// Uniform random orientations until one has every acyclic set d-sparse, with
// d = 2 log2(n) + 1 unless d_override > 0. Trial t uses Rng(seed).split(t).
DSparseOrientation find_dsparse_orientation(const UndirectedGraph& g, int max_trials, std::uint64_t seed,
                                            double d_override = -1);

// Lower-tail bound exp(-n Lambda*(k/n)) for X ~ Bin(n, p). Valid as an upper
// bound on P(X <= k) when k <= n p. Requires 0 < k < n and 0 < p < 1.
double binomial_tail_bound(int n, double p, int k);
double rate_function(double x, double p);
// (e^-delta / (1 - delta)^(1 - delta))^mean, bounding P(X < (1 - delta) mean).
double chernoff_bound(double mean, double delta);

struct LllReport {
  double lhs1 = 0, rhs1 = 0, margin1 = 0;  // c1 (c1 - 1 - ln c1) > 1 + c2
  double lhs2 = 0, rhs2 = 0, margin2 = 0;  // c2 > (1 + eps) (c0 c1)^2
  bool holds1 = false, holds2 = false;
  bool holds() const { return holds1 && holds2; }
};

LllReport verify_lll_constants(double c0, double c1, double c2, double eps);

struct ChiBoundReport {
  int n = 0;
  int chromatic = 0;
  int max_dichromatic = 0;      // over the orientations examined
  Digraph witness;              // orientation attaining it
  bool exhaustive = false;
  std::uint64_t orientations = 0;
  long long bound = 0;          // 2 * max_dichromatic * (1 + floor(log2 n))
  bool holds = false;
};

// Exhaustive over all orientations when the graph has at most
// `exhaustive_edges` edges, otherwise `samples` uniform orientations.
ChiBoundReport chi_bound_check(const UndirectedGraph& g, int exhaustive_edges = 16, int samples = 200,
                               std::uint64_t seed = 0);

struct AlphaSample {
  int n = 0;
  int trial = 0;
  int edges = 0;
  int rejections = 0;    // G(n, p) draws discarded for containing a triangle
  int independence = 0;
  int acyclic = 0;
  double threshold_ln = 0;    // (107/8) sqrt(n) ln n
  double threshold_log2 = 0;  // (107/8) sqrt(n) log2 n
};

// Triangle-free G(n, c0 / sqrt(n)) by rejection, uniformly oriented, with
// exact acyclic and independence numbers. Demonstration only.
std::vector<AlphaSample> alpha_experiment(const std::vector<int>& orders, int trials, std::uint64_t seed,
                                          double c0 = 0.513);

struct TournamentScan {
  int n = 0;
  bool exhaustive = false;
  std::uint64_t tournaments = 0;
  int min_acyclic = 0;
  Digraph witness;  // a tournament attaining min_acyclic
};

// Minimum acyclic number over tournaments of order n: all 2^(n(n-1)/2) of
// them when samples == 0 (n <= 7), else `samples` uniform ones.
TournamentScan tournament_scan(int n, std::uint64_t samples, std::uint64_t seed);

struct TransitiveFourScan {
  int n = 0;
  std::uint64_t tournaments = 0;
  std::uint64_t without = 0;  // labelled tournaments with no transitive 4-subtournament
  std::optional<Digraph> example;
};

// Every labelled tournament of order n (n <= 8) checked for a transitive
// subtournament on four vertices: some v and some out-neighbour u of v with
// two common out-neighbours.
TransitiveFourScan transitive_four_scan(int n);

}  // namespace dicol
