#include <doctest.h>

#include "dicol/canon.hpp"
#include "dicol/constructions.hpp"
#include "dicol/dicolour.hpp"
#include "dicol/rng.hpp"
#include "dicol/structure.hpp"
#include "oracle.hpp"

using namespace dicol;

namespace {

int longest_path_arcs(const Digraph& d) {
  // Acyclic input only: longest path by DP over a topological order by brute force.
  int n = d.order(), best = 0;
  std::vector<int> len(n, 0);
  for (int round = 0; round < n; ++round)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (d.has_arc(u, v) && len[v] < len[u] + 1) len[v] = len[u] + 1;
  for (int x : len) best = std::max(best, x);
  return best;
}

}  // namespace

TEST_CASE("backward blowup structure") {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + static_cast<int>(rng.below(6));
    int m = 1 + static_cast<int>(rng.below(4));
    auto d = random_digraph(n, 0.4, true, rng.next());
    auto b = backward_blowup(d, m);
    REQUIRE(b.order() == n * m);
    CHECK(b.arc_count() == m * m * d.arc_count());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= m; ++j) {
            int a = BlowupIndex{u, i}.flatten(m), c = BlowupIndex{v, j}.flatten(m);
            bool expected = (i == j && d.has_arc(u, v)) || (i != j && d.has_arc(v, u));
            REQUIRE(b.has_arc(a, c) == expected);
          }
    for (int v = 0; v < n; ++v) {
      auto pack = blowup_pack(v, m);
      CHECK(pack.size() == m);
      CHECK(b.induced(pack).arc_count() == 0);
    }
  }
  auto idx = BlowupIndex::unflatten(13, 5);
  CHECK(idx.vertex == 2);
  CHECK(idx.copy == 4);
  CHECK_THROWS_AS(backward_blowup(directed_cycle(3), 0), InvalidArgument);
}

TEST_CASE("D25 is the 5-blowup of the directed 5-cycle") {
  CHECK(d25() == backward_blowup(directed_cycle(5), 5));
  auto prof = degree_profile(d25());
  for (int v = 0; v < 25; ++v) {
    CHECK(prof.in[v] == 5);
    CHECK(prof.out[v] == 5);
  }
}

TEST_CASE("acyclic orientations of C5 without a directed P4") {
  auto [a, b] = acyclic_c5_no_p4();
  for (const auto* d : {&a, &b}) {
    CHECK(underlying_graph(*d) == cycle_graph(5));
    CHECK(oracle::acyclic(*d, 31));
    CHECK(longest_path_arcs(*d) <= 3);
  }
  CHECK(longest_path_arcs(a) == 3);
  CHECK(longest_path_arcs(b) == 2);
  CHECK(!are_isomorphic(a, b));
  // Every acyclic orientation of C5 without a 4-arc path is isomorphic to one of the two.
  int count = 0;
  for (std::uint64_t bits = 0; bits < 32; ++bits) {
    auto d = orientation_from_bits(cycle_graph(5), bits);
    if (!oracle::acyclic(d, 31) || longest_path_arcs(d) > 3) continue;
    ++count;
    CHECK((are_isomorphic(d, a) || are_isomorphic(d, b)));
  }
  CHECK(count > 0);
}

TEST_CASE("Paley tournaments") {
  for (int q : {3, 7, 11, 19}) {
    auto p = paley_tournament(q);
    for (int i = 0; i < q; ++i) {
      CHECK(p.out_degree(i) == (q - 1) / 2);
      for (int j = 0; j < q; ++j)
        if (i != j) CHECK(p.has_arc(i, j) != p.has_arc(j, i));
    }
  }
  CHECK(paley_tournament(7).has_arc(1, 0));  // 1 - 0 = 1 is a square
  CHECK(paley_tournament(7).has_arc(4, 0));
  CHECK(!paley_tournament(7).has_arc(3, 0));
  CHECK_THROWS_AS(paley_tournament(5), InvalidArgument);
  CHECK_THROWS_AS(paley_tournament(15), InvalidArgument);
}

TEST_CASE("named undirected graphs") {
  auto g = grotzsch();
  CHECK(g.order() == 11);
  CHECK(g.size() == 20);
  CHECK(oracle::triangle_free(g));
  CHECK(oracle::chromatic_number(g) == 4);
  CHECK(mycielskian(cycle_graph(5)) == g);
  CHECK(complete_bipartite(3, 4).size() == 12);
  CHECK(path_graph(5).size() == 4);
  CHECK(cycle_graph(6).size() == 6);
  CHECK(transitive_tournament(5).arc_count() == 10);
  CHECK(oracle::acyclic(transitive_tournament(6), 63));
  CHECK(directed_path(4).arc_count() == 3);
}

TEST_CASE("blowup witness for graphs of larger chromatic number") {
  auto w = chromatic_blowup_witness(cycle_graph(5), 2);
  CHECK(w.alpha == 2);
  CHECK(w.factor == 7);
  CHECK(w.digraph.order() == 35);
  CHECK(w.digraph == backward_blowup(w.orientation, 7));
  CHECK(underlying_graph(w.orientation) == cycle_graph(5));
  CHECK(oracle::acyclic(w.orientation, 31));
  for (int s : w.sources.to_vector()) CHECK(w.orientation.in_degree(s) == 0);
  CHECK(is_k_dicolourable(w.digraph, 2).verdict == Verdict::not_dicolourable);
  CHECK_THROWS_AS(chromatic_blowup_witness(cycle_graph(4), 2), InvalidArgument);
  CHECK_THROWS_AS(chromatic_blowup_witness(cycle_graph(5), 0), InvalidArgument);
}

TEST_CASE("random generators") {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng.below(16));
    auto g = random_maximal_triangle_free(n, rng.next());
    CHECK(oracle::triangle_free(g));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) {
          g.add_edge(u, v);
          CHECK(!oracle::triangle_free(g));
          g.remove_edge(u, v);
        }
    auto tour = random_tournament(n, rng.next());
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) CHECK(tour.has_arc(u, v) != tour.has_arc(v, u));
    auto o = random_orientation(g, rng.next());
    CHECK(o.is_oriented());
    CHECK(underlying_graph(o) == g);
  }
  CHECK(random_gnp(10, 0.3, 5) == random_gnp(10, 0.3, 5));
  CHECK(random_gnp(12, 1.0, 1) == complete_graph(12));
  CHECK(random_gnp(12, 0.0, 1).size() == 0);
}
