#include <doctest.h>

#include "dicol/constructions.hpp"
#include "dicol/dicolour.hpp"
#include "dicol/rng.hpp"
#include "dicol/structure.hpp"
#include "oracle.hpp"

using namespace dicol;

TEST_CASE("k-dicolourability matches k^n brute force") {
  Rng rng(21);
  for (int t = 0; t < 1500; ++t) {
    int n = 1 + static_cast<int>(rng.below(8));
    auto d = random_digraph(n, 0.2 + 0.7 * rng.uniform(), t % 2 == 0, rng.next());
    for (int k = 1; k <= 3; ++k) {
      auto r = is_k_dicolourable(d, k);
      REQUIRE(r.verdict != Verdict::budget_exceeded);
      bool yes = r.verdict == Verdict::dicolourable;
      REQUIRE(yes == oracle::k_dicolourable(d, k));
      REQUIRE(r.certificate.has_value() == yes);
      if (yes) CHECK(verify_dicolouring(d, *r.certificate));
    }
  }
}

TEST_CASE("dichromatic number matches brute force") {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    int n = static_cast<int>(rng.below(8));
    auto d = random_digraph(n, rng.uniform(), t % 3 == 0, rng.next());
    auto r = dichromatic_number(d);
    REQUIRE(r.value == oracle::dichromatic_number(d));
    if (n > 0) CHECK(verify_dicolouring(d, r.certificate));
  }
}

TEST_CASE("landmark dichromatic numbers") {
  CHECK(dichromatic_number(directed_cycle(3)).value == 2);
  CHECK(dichromatic_number(transitive_tournament(10)).value == 1);
  CHECK(dichromatic_number(paley_tournament(7)).value == 3);
  CHECK(dichromatic_number(paley_tournament(11)).value == 4);
  CHECK(dichromatic_number(Digraph(0)).value == 0);
  CHECK(dichromatic_number(bidirected(complete_graph(5))).value == 5);
}

TEST_CASE("D25 is not 2-dicolourable and is 3-dicritical") {
  auto d = d25();
  CHECK(d.order() == 25);
  CHECK(d.arc_count() == 125);
  CHECK(d.is_oriented());
  CHECK(is_triangle_free(underlying_graph(d)));
  auto r = is_k_dicolourable(d, 2);
  CHECK(r.verdict == Verdict::not_dicolourable);
  CHECK(r.stats.nodes > 0);
  auto c = is_k_dicritical(d, 3);
  CHECK(c.critical());
  CHECK(c.vertex_deletions.size() == 25);
  CHECK(c.arc_deletions.size() == 125);
  for (const auto& del : c.arc_deletions) {
    REQUIRE(del.colouring.has_value());
    CHECK(verify_dicolouring(d.without_arc(del.arc.first, del.arc.second), *del.colouring));
  }
  for (const auto& del : c.vertex_deletions) {
    REQUIRE(del.colouring.has_value());
    CHECK(del.colouring->colour[del.vertex] == 0);
  }
}

TEST_CASE("dicriticality detects non-critical digraphs") {
  auto p = paley_tournament(7);
  auto c = is_k_dicritical(p, 3);
  CHECK(c.dichromatic_is_k());
  // Adding an isolated vertex breaks vertex-criticality.
  Digraph q(8);
  for (auto [u, v] : p.arcs()) q.add_arc(u, v);
  auto cq = is_k_dicritical(q, 3);
  CHECK(cq.dichromatic_is_k());
  CHECK(!cq.vertex_critical());
  CHECK(cq.failing_vertices() == std::vector<int>{7});
  CHECK(is_k_dicritical(directed_cycle(3), 2).critical());
  CHECK(!is_k_dicritical(directed_cycle(3), 3).critical());
}

TEST_CASE("dicolouring verification rejects malformed colourings") {
  auto d = directed_cycle(3);
  CHECK(!verify_dicolouring(d, Dicolouring{1, {1, 1, 1}}));
  CHECK(verify_dicolouring(d, Dicolouring{2, {1, 1, 2}}));
  CHECK_THROWS_AS(verify_dicolouring(d, Dicolouring{2, {1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(verify_dicolouring(d, Dicolouring{2, {1, 1, 3}}), InvalidArgument);
}

TEST_CASE("budget exhaustion is reported, never a wrong verdict") {
  auto r = is_k_dicolourable(d25(), 2, 50);
  CHECK(r.verdict == Verdict::budget_exceeded);
  CHECK(!r.certificate);
  CHECK_THROWS_AS(dichromatic_number(d25(), 50), BudgetExceeded);
}

TEST_CASE("chromatic number matches brute force") {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    auto g = random_gnp(static_cast<int>(rng.below(9)), rng.uniform(), rng.next());
    auto r = chromatic_number(g);
    REQUIRE(r.value == oracle::chromatic_number(g));
    CHECK(is_proper_colouring(g, r.colouring));
  }
  CHECK(chromatic_number(grotzsch()).value == 4);
  CHECK(chromatic_number(cycle_graph(7)).value == 3);
}
