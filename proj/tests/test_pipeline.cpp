#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "dicol/canon.hpp"
#include "dicol/constructions.hpp"
#include "dicol/dicolour.hpp"
#include "dicol/enumerate.hpp"
#include "dicol/graph6.hpp"
#include "dicol/pipeline.hpp"
#include "dicol/rng.hpp"
#include "dicol/structure.hpp"
#include "oracle.hpp"

using namespace dicol;

namespace {

std::uint64_t full(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

std::uint64_t without(int n, std::initializer_list<int> vs) {
  std::uint64_t s = full(n);
  for (int v : vs) s &= ~(1ULL << v);
  return s;
}

// True when some arc uv has d - {u, v} acyclic.
bool has_witness_arc(const Digraph& d) {
  for (auto [u, v] : d.arcs())
    if (oracle::acyclic(d, without(d.order(), {u, v}))) return true;
  return false;
}

// Peels vertices of degree at most one inside s.
std::uint64_t peel(const UndirectedGraph& g, std::uint64_t s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.order(); ++v) {
      if (!((s >> v) & 1)) continue;
      int deg = 0;
      for (int u = 0; u < g.order(); ++u) deg += ((s >> u) & 1) && g.has_edge(u, v);
      if (deg <= 1) {
        s &= ~(1ULL << v);
        changed = true;
      }
    }
  }
  return s;
}

Digraph random_oriented_triangle_free(int n, Rng& rng) {
  return random_orientation(random_maximal_triangle_free(n, rng.next()), rng.next());
}

}  // namespace

TEST_CASE("small-order witnesses") {
  Rng rng(51);
  int tested = 0;
  for (int t = 0; t < 200000 && tested < 1500; ++t) {
    int n = 3 + static_cast<int>(rng.below(5));
    auto d = random_orientation(random_maximal_triangle_free(n, rng.next()), rng.next());
    auto prof = degree_profile(d);
    if (*std::min_element(prof.in.begin(), prof.in.end()) < 1 ||
        *std::min_element(prof.out.begin(), prof.out.end()) < 1)
      continue;
    ++tested;
    auto w = small_witness(d);
    REQUIRE(w.has_value());
    auto vs = w->to_vector();
    REQUIRE((vs.size() == 1 || vs.size() == 2));
    if (vs.size() == 2) CHECK((d.has_arc(vs[0], vs[1]) || d.has_arc(vs[1], vs[0])));
    CHECK(oracle::acyclic(d, full(n) & ~w->low_mask()));
  }
  CHECK(tested > 100);
  CHECK(small_witness(Digraph(0))->empty());
  CHECK(verify_small_witnesses(6).failures == 0);
}

TEST_CASE("exception catalog") {
  const auto& cat = exception_catalog();
  REQUIRE(cat.size() == 6);
  std::set<std::string> forms;
  for (const auto& e : cat) {
    CHECK(e.graph.order() == 8);
    CHECK(oracle::triangle_free(e.graph));
    CHECK(e.graph.min_degree() >= 2);
    CHECK(forms.insert(canonical_form(e.graph).encoding).second);
    CHECK(e.graph6 == canonical_form(e.graph).encoding);
    CHECK(match_exception(e.graph) == e.tag);
    CHECK(exception_tag_from_string(to_string(e.tag)) == e.tag);
    // Some orientation has no witness arc.
    bool found = false;
    for (std::uint64_t bits = 0; bits < (1ULL << e.graph.size()) && !found; ++bits)
      found = !has_witness_arc(orientation_from_bits(e.graph, bits));
    CHECK(found);
    // A relabelled copy still matches.
    std::vector<int> p{3, 7, 1, 0, 6, 2, 5, 4};
    CHECK(match_exception(e.graph.relabelled(p)) == e.tag);
  }
  CHECK(!match_exception(cycle_graph(8)));
  CHECK(!exception_tag_from_string("nope"));
}

TEST_CASE("order-8 classification") {
  Rng rng(52);
  auto graphs = enumerate_triangle_free(8, 2);
  for (int t = 0; t < 3000; ++t) {
    const auto& g = graphs[rng.below(graphs.size())].graph;
    auto d = random_orientation(g, rng.next());
    auto r = classify_order_eight(d);
    if (r.kind == OrderEightResult::Kind::witness) {
      CHECK(d.has_arc(r.arc.first, r.arc.second));
      CHECK(oracle::acyclic(d, without(8, {r.arc.first, r.arc.second})));
    } else {
      REQUIRE(r.kind == OrderEightResult::Kind::exception);
      CHECK(!has_witness_arc(d));
      CHECK(match_exception(g) == r.tag);
    }
  }
  CHECK_THROWS_AS(classify_order_eight(Digraph(7)), InvalidArgument);
  CHECK_THROWS_AS(classify_order_eight(orient_low_to_high(complete_graph(8))), InvalidArgument);
}

TEST_CASE("two-core matches peeling") {
  Rng rng(53);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng.below(16));
    auto g = random_gnp(n, std::min(1.0, 2.5 / n), rng.next());
    std::uint64_t s = rng.next() & full(n);
    CHECK(two_core(g, VertexSet::from_mask(s)).low_mask() == peel(g, s));
  }
}

TEST_CASE("decompositions colour every orientation") {
  Rng rng(54);
  int found = 0;
  for (int t = 0; t < 400; ++t) {
    int n = 6 + static_cast<int>(rng.below(12));
    auto g = random_maximal_triangle_free(n, rng.next());
    auto dec = find_decomposition(g);
    if (!dec) continue;
    ++found;
    auto check = validate_decomposition(g, *dec);
    REQUIRE_MESSAGE(check.valid, check.reason);
    CHECK((dec->x | dec->y | dec->z) == g.vertices());
    CHECK((dec->x & dec->y).empty());
    CHECK((dec->y & dec->z).empty());
    CHECK(dec->y == g.neighbours(dec->pivot));
    for (int s = 0; s < 10; ++s) {
      auto d = random_orientation(g, rng.next());
      auto c = decomposition_dicolouring(g, *dec, d);
      CHECK(c.k == 2);
      CHECK(oracle::k_dicolourable(d, 2) == true);
      std::uint64_t one = 0;
      for (int v = 0; v < n; ++v)
        if (c.colour[v] == 1) one |= 1ULL << v;
      CHECK(oracle::acyclic(d, one));
      CHECK(oracle::acyclic(d, full(n) & ~one));
    }
    auto json = decomposition_to_json(*dec);
    auto back = decomposition_from_json(json);
    CHECK(back.pivot == dec->pivot);
    CHECK(back.x == dec->x);
    CHECK(back.z == dec->z);
    CHECK(back.rule == dec->rule);
  }
  CHECK(found > 50);
}

TEST_CASE("invalid decompositions are rejected") {
  auto g = complete_bipartite(6, 6);
  auto dec = find_decomposition(g);
  REQUIRE(dec);
  CHECK(validate_decomposition(g, *dec).valid);
  auto bad = *dec;
  bad.x.erase(bad.x.first());
  CHECK(!validate_decomposition(g, bad).valid);
  bad = *dec;
  bad.pivot = dec->y.first();
  CHECK(!validate_decomposition(g, bad).valid);
  bad = *dec;
  bad.y.erase(bad.y.first());
  bad.z.insert(dec->y.first());
  bad.core = two_core(g, bad.z);
  CHECK(!validate_decomposition(g, bad).valid);
  auto c9 = cycle_graph(9);
  // Z is a path, so its 2-core is empty.
  Decomposition big;
  big.pivot = 0;
  big.x = VertexSet{0};
  big.y = VertexSet{1, 8};
  big.z = VertexSet::range(9);
  big.z.erase(0);
  big.z.erase(1);
  big.z.erase(8);
  big.core = two_core(c9, big.z);
  CHECK(validate_decomposition(c9, big).valid);
  auto k44 = complete_bipartite(4, 4);
  UndirectedGraph h(10);
  for (auto [u, v] : k44.edges()) h.add_edge(u + 2, v + 2);
  h.add_edge(0, 1);
  Decomposition wide;
  wide.pivot = 0;
  wide.x = VertexSet{0};
  wide.y = VertexSet{1};
  wide.z = VertexSet::range(10);
  wide.z.erase(0);
  wide.z.erase(1);
  wide.core = two_core(h, wide.z);
  wide.rule = CoreRule::eight_not_exception;
  auto verdict = validate_decomposition(h, wide);
  CHECK(!verdict.valid);
  CHECK(verdict.reason.find("exception") != std::string::npos);
  wide.rule = CoreRule::small;
  CHECK(!validate_decomposition(h, wide).valid);
}

TEST_CASE("sweep records and buckets") {
  auto g = random_maximal_triangle_free(10, 3);
  auto r = process_instance(g);
  CHECK(r.n == 10);
  CHECK(r.id == canonical_form(g).encoding);
  CHECK(!r.filters.max_degree);
  CHECK(r.verdict == SweepVerdict::filtered);
  auto line = to_json_line(r, false);
  auto back = sweep_record_from_json(line);
  CHECK(to_json_line(back, false) == line);
  CHECK_THROWS_AS(sweep_record_from_json("{\"id\":1}"), ParseError);
  CHECK_THROWS_AS(sweep_record_from_json("not json"), ParseError);
}

TEST_CASE("sweep is deterministic across threads and resumes from a checkpoint") {
  SweepOptions one;
  auto a = sweep_generated(13, 13, one);
  CHECK(a.instances.at(13) == 31);
  CHECK(a.survivors.at(13) == 31);
  CHECK(a.decomposed == 31);
  CHECK(a.unresolved == 0);
  CHECK(a.buckets.at(13).z_at_most_7 == 9);
  CHECK(a.buckets.at(13).z_eq_8 == 22);
  SweepOptions three;
  three.threads = 3;
  auto b = sweep_generated(13, 13, three);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i)
    CHECK(to_json_line(a.records[i], false) == to_json_line(b.records[i], false));

  auto path = std::filesystem::temp_directory_path() / "dicol_test_checkpoint.jsonl";
  std::filesystem::remove(path);
  SweepOptions ck;
  ck.checkpoint = path.string();
  auto c = sweep_generated(13, 13, ck);
  CHECK(c.resumed == 0);
  // Keep ten complete lines and a torn eleventh.
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  in.close();
  REQUIRE(lines.size() == 31);
  {
    std::ofstream out(path, std::ios::trunc);
    for (int i = 0; i < 10; ++i) out << lines[i] << '\n';
    out << lines[10].substr(0, lines[10].size() / 2);
  }
  auto d = sweep_generated(13, 13, ck);
  CHECK(d.resumed == 10);
  REQUIRE(d.records.size() == a.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i)
    CHECK(to_json_line(a.records[i], false) == to_json_line(d.records[i], false));
  auto e = sweep_generated(13, 13, ck);
  CHECK(e.resumed == 31);
  std::filesystem::remove(path);
}

TEST_CASE("ingested sweeps check every filter") {
  std::vector<UndirectedGraph> gs{cycle_graph(5), complete_bipartite(6, 6), grotzsch()};
  auto s = sweep_graphs(gs, SweepOptions{});
  CHECK(s.records.size() == 3);
  CHECK(s.survivors.empty());
  for (const auto& r : s.records) CHECK(r.verdict == SweepVerdict::filtered);
}

TEST_CASE("extremal values agree with brute force") {
  for (int n = 1; n <= 5; ++n) {
    int min_a = n, max_chi = 0;
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> idx;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) idx.push_back({u, v});
    for (std::uint64_t bits = 0; bits < (1ULL << pairs); ++bits) {
      UndirectedGraph g(n);
      for (int i = 0; i < pairs; ++i)
        if ((bits >> i) & 1) g.add_edge(idx[i].first, idx[i].second);
      if (!oracle::triangle_free(g)) continue;
      for (std::uint64_t o = 0; o < (1ULL << g.size()); ++o) {
        auto d = orientation_from_bits(g, o);
        min_a = std::min(min_a, oracle::acyclic_number(d));
        max_chi = std::max(max_chi, oracle::dichromatic_number(d));
      }
    }
    auto r = extremal_scan(n);
    CHECK(r.min_acyclic == min_a);
    CHECK(r.max_dichromatic == max_chi);
    CHECK(oracle::acyclic_number(r.min_acyclic_witness) == min_a);
    CHECK(oracle::dichromatic_number(r.max_dichromatic_witness) == max_chi);
  }
}
