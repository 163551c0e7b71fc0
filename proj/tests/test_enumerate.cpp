#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "dicol/canon.hpp"
#include "dicol/enumerate.hpp"
#include "dicol/graph6.hpp"
#include "oracle.hpp"

using namespace dicol;

namespace {

std::uint64_t count(int n, int min_deg, int max_deg, bool tf, int threads = 1) {
  EnumerationOptions o;
  o.n = n;
  o.min_degree = min_deg;
  o.max_degree = max_deg;
  o.triangle_free = tf;
  o.threads = threads;
  return enumerate_graphs(o, [](const EnumeratedGraph&) {});
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

int automorphisms(const UndirectedGraph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  int c = 0;
  do c += g.relabelled(p) == g;
  while (std::next_permutation(p.begin(), p.end()));
  return c;
}

}  // namespace

TEST_CASE("counts of all graphs") {
  const std::uint64_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(count(n, 0, -1, false) == expected[n]);
}

TEST_CASE("counts of triangle-free graphs") {
  const std::uint64_t expected[] = {1, 1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172};
  for (int n = 0; n <= 10; ++n) CHECK(count(n, 0, -1, true) == expected[n]);
}

TEST_CASE("orbit-stabiliser cross-check against labelled counts") {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t labelled = 0;
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> idx;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) idx.push_back({u, v});
    for (std::uint64_t bits = 0; bits < (1ULL << pairs); ++bits) {
      UndirectedGraph g(n);
      for (int i = 0; i < pairs; ++i)
        if ((bits >> i) & 1) g.add_edge(idx[i].first, idx[i].second);
      labelled += oracle::triangle_free(g);
    }
    std::uint64_t from_classes = 0;
    for (const auto& e : enumerate_triangle_free(n, 0)) from_classes += factorial(n) / automorphisms(e.graph);
    CHECK(from_classes == labelled);
  }
}

TEST_CASE("output is canonical, sorted and free of isomorphs") {
  auto all = enumerate_triangle_free(8, 1);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& e = all[i];
    CHECK(e.graph6 == encode_graph6(e.graph));
    CHECK(canonical_form(e.graph).encoding == e.graph6);
    CHECK(e.graph.min_degree() >= 1);
    CHECK(oracle::triangle_free(e.graph));
    CHECK(seen.insert(e.graph6).second);
    if (i) CHECK(all[i - 1].graph6 < e.graph6);
  }
}

TEST_CASE("degree filters agree with filtering the full enumeration") {
  for (int n = 1; n <= 9; ++n) {
    auto all = enumerate_triangle_free(n, 0);
    for (int lo = 0; lo <= 4; ++lo)
      for (int hi : {-1, 2, 3, 4, n - 1}) {
        std::uint64_t expected = 0;
        for (const auto& e : all)
          expected += e.graph.min_degree() >= lo && (hi < 0 || e.graph.max_degree() <= hi);
        CHECK(count(n, lo, hi, true) == expected);
      }
  }
  EnumerationOptions o;
  o.n = 7;
  o.triangle_free = false;
  std::uint64_t expected = 0;
  enumerate_graphs(o, [&](const EnumeratedGraph& e) { expected += e.graph.min_degree() >= 3; });
  CHECK(count(7, 3, -1, false) == expected);
}

TEST_CASE("threaded enumeration matches sequential") {
  EnumerationOptions o;
  o.n = 11;
  o.min_degree = 3;
  auto one = enumerate_sorted(o);
  o.threads = 3;
  auto three = enumerate_sorted(o);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].graph6 == three[i].graph6);
}

TEST_CASE("min-degree-2 triangle-free graphs on 8 vertices") {
  CHECK(count(8, 2, -1, true) == 83);
}

TEST_CASE("limits and degenerate options") {
  CHECK_THROWS_AS(count(21, 0, -1, true), LimitExceeded);
  CHECK_THROWS_AS(count(-1, 0, -1, true), InvalidArgument);
  CHECK(count(5, 3, 2, true) == 0);
  CHECK(count(0, 0, -1, true) == 1);
}
