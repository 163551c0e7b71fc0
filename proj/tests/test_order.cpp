#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dicol/constructions.hpp"
#include "dicol/dicolour.hpp"
#include "dicol/order.hpp"
#include "dicol/rng.hpp"
#include "dicol/structure.hpp"
#include "oracle.hpp"

using namespace dicol;

TEST_CASE("vertex orders") {
  VertexOrder o({2, 0, 1});
  CHECK(o.position(2) == 0);
  CHECK(o.before(0, 1));
  CHECK(!o.before(1, 2));
  CHECK_THROWS_AS(VertexOrder({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(VertexOrder({0, 3}), InvalidArgument);
}

TEST_CASE("backedge graph") {
  auto d = directed_cycle(4);
  auto b = backedge_graph(d, VertexOrder::identity(4));
  CHECK(b.size() == 1);
  CHECK(b.has_edge(0, 3));
  CHECK(backedge_graph(transitive_tournament(6), VertexOrder::identity(6)).size() == 0);
}

TEST_CASE("colour classes of a backedge colouring are acyclic") {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng.below(12));
    auto d = random_digraph(n, rng.uniform(), true, rng.next());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng.engine());
    VertexOrder o(p);
    auto chi = chromatic_number(backedge_graph(d, o));
    Dicolouring c{std::max(chi.value, 1), chi.colouring};
    CHECK(verify_dicolouring(d, c));
  }
}

TEST_CASE("minimum over orders equals the dichromatic number") {
  Rng rng(32);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + static_cast<int>(rng.below(7));
    auto d = random_digraph(n, rng.uniform(), t % 2 == 0, rng.next());
    auto r = dichromatic_via_orders(d);
    CHECK(r.value == oracle::dichromatic_number(d));
    CHECK(chromatic_number(backedge_graph(d, r.order)).value == r.value);
  }
  CHECK_THROWS_AS(dichromatic_via_orders(Digraph(10)), LimitExceeded);
}

TEST_CASE("halving order meets its postcondition") {
  Rng rng(33);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + static_cast<int>(rng.below(32));
    auto d = random_digraph(n, rng.uniform(), t % 2 == 0, rng.next());
    auto o = halve_degree_order(d);
    REQUIRE(o.size() == n);
    auto b = backedge_graph(d, o);
    for (int v = 0; v < n; ++v) {
      int deg = 0;
      for (int u = 0; u < n; ++u) deg += d.has_arc(u, v) + d.has_arc(v, u);
      REQUIRE(2 * b.degree(v) <= deg);
    }
    CHECK(satisfies_half_degree_bound(d, o));
  }
}

TEST_CASE("maximum directed linear forest matches brute force") {
  Rng rng(34);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + static_cast<int>(rng.below(7));
    auto d = random_digraph(n, 0.2 + 0.3 * rng.uniform(), true, rng.next());
    if (d.arc_count() > 14) continue;
    auto r = max_directed_linear_forest(d);
    REQUIRE(r.value == oracle::max_linear_forest(d));
    CHECK(is_directed_linear_forest(d, r.witness));
    CHECK(static_cast<int>(r.witness.arcs.size()) == r.value);
  }
  CHECK(max_directed_linear_forest(directed_cycle(5)).value == 4);
  CHECK(max_directed_linear_forest(paley_tournament(7)).value == 6);
}

TEST_CASE("linear forest validation") {
  auto d = directed_cycle(3);
  CHECK(is_directed_linear_forest(d, LinearForest{{{0, 1}, {1, 2}}}));
  CHECK(!is_directed_linear_forest(d, LinearForest{{{0, 1}, {1, 2}, {2, 0}}}));
  CHECK(!is_directed_linear_forest(d, LinearForest{{{1, 0}}}));
}

TEST_CASE("minimum over orientations of the linear forest size is n minus alpha") {
  Rng rng(35);
  int checked = 0;
  while (checked < 40) {
    int n = 2 + static_cast<int>(rng.below(5));
    auto g = random_gnp(n, 0.5, rng.next());
    if (!is_connected(g) || g.size() > 10) continue;
    ++checked;
    int best = n;
    for (std::uint64_t bits = 0; bits < (1ULL << g.size()); ++bits)
      best = std::min(best, oracle::max_linear_forest(orientation_from_bits(g, bits)));
    auto r = min_orientation_linear_forest(g);
    CHECK(r.value == best);
    CHECK(r.value == n - oracle::independence_number(g));
    CHECK(max_directed_linear_forest(r.orientation).value == r.value);
    CHECK(underlying_graph(r.orientation) == g);
  }
  CHECK(min_orientation_linear_forest(grotzsch()).value == 6);
}
