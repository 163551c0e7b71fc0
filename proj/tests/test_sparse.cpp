#include <doctest.h>

#include <cmath>

#include "dicol/constructions.hpp"
#include "dicol/rng.hpp"
#include "dicol/sparse.hpp"
#include "dicol/structure.hpp"
#include "oracle.hpp"

using namespace dicol;

namespace {

double log_choose(int n, int k) { return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0); }

double binomial_cdf(int n, double p, int k) {
  double s = 0;
  for (int i = 0; i <= k; ++i) s += std::exp(log_choose(n, i) + i * std::log(p) + (n - i) * std::log1p(-p));
  return s;
}

double induced_average_degree(const UndirectedGraph& g, std::uint64_t s) {
  int m = 0, h = __builtin_popcountll(s);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (((s >> u) & 1) && ((s >> v) & 1) && g.has_edge(u, v)) ++m;
  return 2.0 * m / h;
}

}  // namespace

TEST_CASE("binomial lower-tail bound dominates the exact probability") {
  for (int n = 2; n <= 30; ++n)
    for (double p : {0.05, 0.1, 0.3, 0.5, 0.7, 0.9})
      for (int k = 1; k < n && k <= n * p; ++k) {
        double exact = binomial_cdf(n, p, k);
        double bound = binomial_tail_bound(n, p, k);
        CHECK_MESSAGE(bound >= exact * (1 - 1e-12), "n=" << n << " p=" << p << " k=" << k);
        CHECK(bound <= 1.0 + 1e-12);
      }
  CHECK(rate_function(0.3, 0.3) == doctest::Approx(0.0));
  CHECK(rate_function(0.1, 0.3) > 0);
  CHECK_THROWS_AS(binomial_tail_bound(10, 0.5, 0), InvalidArgument);
  CHECK_THROWS_AS(binomial_tail_bound(10, 1.5, 3), InvalidArgument);
}

TEST_CASE("Chernoff bound dominates the exact lower tail") {
  for (int n = 5; n <= 60; n += 5)
    for (double p : {0.2, 0.5, 0.8})
      for (double delta : {0.1, 0.3, 0.5, 0.9}) {
        double mean = n * p;
        double cut = (1 - delta) * mean;
        int k = static_cast<int>(std::ceil(cut)) - 1;  // X < cut  <=>  X <= k
        double exact = k < 0 ? 0.0 : binomial_cdf(n, p, k);
        CHECK(chernoff_bound(mean, delta) >= exact * (1 - 1e-12));
      }
}

TEST_CASE("local lemma constants") {
  auto r = verify_lll_constants(0.513, 3.43, 3.1, 1e-4);
  CHECK(r.holds1);
  CHECK(r.holds2);
  double m1 = 3.43 * (3.43 - 1 - std::log(3.43)) - 4.1;
  double m2 = 3.1 - (1 + 1e-4) * std::pow(0.513 * 3.43, 2);
  CHECK(r.margin1 == doctest::Approx(m1).epsilon(1e-9));
  CHECK(r.margin2 == doctest::Approx(m2).epsilon(1e-9));
  CHECK(r.margin1 == doctest::Approx(0.00721830).epsilon(1e-6));
  CHECK(r.margin2 == doctest::Approx(0.00353342).epsilon(1e-6));
  CHECK(!verify_lll_constants(0.513, 3.43, 3.0, 1e-4).holds2);
  CHECK(!verify_lll_constants(0.513, 3.3, 3.1, 1e-4).holds1);
  CHECK(verify_lll_constants(0.513, 3.5, 3.1, 1e-4).margin1 > r.margin1);
  CHECK(verify_lll_constants(0.5, 3.43, 3.1, 1e-4).margin2 > r.margin2);
  auto p = sparsity_params(100);
  CHECK(p.d == doctest::Approx(2 * std::log2(100.0) + 1));
  CHECK(p.p == doctest::Approx(0.0513));
  CHECK(p.k == doctest::Approx(3.43 * p.d / p.p + 1));
}

TEST_CASE("sparsity of vertex sets") {
  auto g = complete_graph(5);
  CHECK(is_d_sparse(g, VertexSet{0, 1}, 1.0));
  CHECK(!is_d_sparse(g, VertexSet{0, 1, 2}, 1.9));
  CHECK(is_d_sparse(g, VertexSet{0, 1, 2}, 2.0));
  CHECK_THROWS_AS(is_d_sparse(g, VertexSet{}, 1.0), InvalidArgument);
  CHECK(sparsity_bound(16) == doctest::Approx(9.0));
}

TEST_CASE("exhaustive acyclic-set sparsity check matches brute force") {
  Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    int n = 3 + static_cast<int>(rng.below(10));
    auto g = random_gnp(n, 0.5, rng.next());
    auto d = random_orientation(g, rng.next());
    double bound = 1.0 + rng.below(3);
    double densest = 0;
    for (std::uint64_t s = 1; s < (1ULL << n); ++s)
      if (oracle::acyclic(d, s)) densest = std::max(densest, induced_average_degree(g, s));
    auto r = check_acyclic_sets_sparse(d, bound);
    CHECK(r.exhaustive);
    if (densest > bound + 1e-12) {
      REQUIRE(r.densest.has_value());
      CHECK(r.densest->average_degree == doctest::Approx(densest));
      CHECK(oracle::acyclic(d, r.densest->set.low_mask()));
    } else {
      CHECK(!r.densest.has_value());
    }
  }
}

TEST_CASE("d-sparse orientations of triangle-free graphs") {
  Rng rng(62);
  for (int t = 0; t < 5; ++t) {
    auto g = random_maximal_triangle_free(14 + t, rng.next());
    auto r = find_dsparse_orientation(g, 10, rng.next());
    CHECK(r.success);
    CHECK(r.check.exhaustive);
    CHECK(r.trials >= 1);
    CHECK(underlying_graph(r.orientation) == g);
    auto again = find_dsparse_orientation(g, 10, 99);
    auto again2 = find_dsparse_orientation(g, 10, 99);
    CHECK(again.orientation == again2.orientation);
  }
  auto fail = find_dsparse_orientation(complete_bipartite(4, 4), 3, 1, 0.5);
  CHECK(!fail.success);
  CHECK(fail.trials == 3);
}

TEST_CASE("dichromatic bound over orientations") {
  for (const auto& g : {complete_graph(3), cycle_graph(5), complete_graph(4), complete_bipartite(3, 3)}) {
    auto r = chi_bound_check(g);
    CHECK(r.exhaustive);
    CHECK(r.orientations == (1ULL << g.size()));
    int best = 0;
    for (std::uint64_t bits = 0; bits < r.orientations; ++bits)
      best = std::max(best, oracle::dichromatic_number(orientation_from_bits(g, bits)));
    CHECK(r.max_dichromatic == best);
    CHECK(r.chromatic == oracle::chromatic_number(g));
    CHECK(r.holds);
  }
  CHECK(chi_bound_check(complete_graph(3)).max_dichromatic == 2);
  CHECK(chi_bound_check(cycle_graph(5)).max_dichromatic == 2);
}

TEST_CASE("alpha experiment rows are consistent") {
  auto rows = alpha_experiment({8, 12}, 2, 5);
  REQUIRE(rows.size() == 4);
  for (const auto& s : rows) {
    CHECK(s.acyclic >= s.independence);
    CHECK(s.acyclic <= s.n);
    CHECK(s.threshold_ln == doctest::Approx(107.0 / 8 * std::sqrt(s.n) * std::log(s.n)));
    CHECK(s.threshold_log2 == doctest::Approx(107.0 / 8 * std::sqrt(s.n) * std::log2(s.n)));
  }
  auto again = alpha_experiment({8, 12}, 2, 5);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].acyclic == again[i].acyclic);
}

TEST_CASE("tournament scans agree with brute force") {
  for (int n = 3; n <= 6; ++n) {
    auto s = tournament_scan(n, 0, 0);
    CHECK(s.exhaustive);
    CHECK(s.tournaments == (1ULL << (n * (n - 1) / 2)));
    auto t4 = transitive_four_scan(n);
    std::uint64_t without = 0;
    int min_a = n;
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (1ULL << pairs); ++bits) {
      auto d = orientation_from_bits(complete_graph(n), bits);
      int a = oracle::acyclic_number(d);
      min_a = std::min(min_a, a);
      without += a < 4;
    }
    CHECK(s.min_acyclic == min_a);
    CHECK(oracle::acyclic_number(s.witness) == min_a);
    CHECK(t4.without == without);
  }
  CHECK(tournament_scan(4, 0, 0).min_acyclic == 3);
  auto sampled = tournament_scan(8, 500, 3);
  CHECK(!sampled.exhaustive);
  CHECK(sampled.tournaments == 500);
  CHECK(sampled.min_acyclic >= 4);
}
