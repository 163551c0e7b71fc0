#include "dicol/constructions.hpp"

#include <algorithm>
#include <string>

#include "dicol/canon.hpp"
#include "dicol/dicolour.hpp"
#include "dicol/order.hpp"
#include "dicol/rng.hpp"
#include "dicol/structure.hpp"

namespace dicol {

Digraph backward_blowup(const Digraph& d, int m) {
  if (m < 1) throw InvalidArgument("backward_blowup: m must be at least 1");
  if (static_cast<long>(d.order()) * m > kMaxVertices)
    throw LimitExceeded("backward_blowup: result exceeds " + std::to_string(kMaxVertices) + " vertices");
  Digraph b(d.order() * m);
  for (auto [u, v] : d.arcs())
    for (int i = 1; i <= m; ++i) {
      b.add_arc(BlowupIndex{u, i}.flatten(m), BlowupIndex{v, i}.flatten(m));
      for (int j = 1; j <= m; ++j)
        if (i != j) b.add_arc(BlowupIndex{v, i}.flatten(m), BlowupIndex{u, j}.flatten(m));
    }
  return b;
}

VertexSet blowup_pack(int v, int m) {
  VertexSet s;
  for (int i = 1; i <= m; ++i) s.insert(BlowupIndex{v, i}.flatten(m));
  return s;
}

Digraph directed_cycle(int length) {
  if (length < 3) throw InvalidArgument("directed_cycle: length must be at least 3");
  Digraph d(length);
  for (int i = 0; i < length; ++i) d.add_arc(i, (i + 1) % length);
  return d;
}

Digraph directed_path(int vertices) {
  Digraph d(vertices);
  for (int i = 0; i + 1 < vertices; ++i) d.add_arc(i, i + 1);
  return d;
}

Digraph transitive_tournament(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.add_arc(i, j);
  return d;
}

namespace {

int longest_path_acyclic(const Digraph& d) {
  // Longest path by DP over a topological order (d is small and acyclic).
  const int n = d.order();
  std::vector<int> indeg(n), order, len(n, 0);
  for (int v = 0; v < n; ++v) indeg[v] = d.in_degree(v);
  for (int v = 0; v < n; ++v)
    if (!indeg[v]) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : d.out(order[i]))
      if (--indeg[w] == 0) order.push_back(w);
  int best = 0;
  for (int v : order)
    for (int w : d.out(v)) {
      len[w] = std::max(len[w], len[v] + 1);
      best = std::max(best, len[w]);
    }
  return best;
}

}  // namespace

std::pair<Digraph, Digraph> acyclic_c5_no_p4() {
  auto c5 = cycle_graph(5);
  std::vector<std::pair<std::string, Digraph>> classes;
  for (std::uint64_t bits = 0; bits < 32; ++bits) {
    auto d = orientation_from_bits(c5, bits);
    if (!is_acyclic(d) || longest_path_acyclic(d) >= 4) continue;
    auto id = canonical_form(d).encoding;
    if (std::none_of(classes.begin(), classes.end(), [&](auto& c) { return c.first == id; }))
      classes.emplace_back(id, d);
  }
  if (classes.size() != 2)
    throw Error(Errc::internal, "expected two acyclic C5 orientations without a 4-arc path");
  auto& a = classes[0].second;
  auto& b = classes[1].second;
  if (longest_path_acyclic(a) >= longest_path_acyclic(b)) return {a, b};
  return {b, a};
}

Digraph paley_tournament(int q) {
  auto is_prime = [](int x) {
    if (x < 2) return false;
    for (int p = 2; p * p <= x; ++p)
      if (x % p == 0) return false;
    return true;
  };
  if (!is_prime(q) || q % 4 != 3) throw InvalidArgument("paley_tournament: q must be a prime = 3 mod 4");
  std::vector<bool> square(q, false);
  for (int x = 1; x < q; ++x) square[(x * x) % q] = true;
  Digraph d(q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (i != j && square[((i - j) % q + q) % q]) d.add_arc(i, j);
  return d;
}

Digraph d25() { return backward_blowup(directed_cycle(5), 5); }

UndirectedGraph cycle_graph(int n) {
  UndirectedGraph g(n);
  if (n >= 3)
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  else if (n == 2)
    g.add_edge(0, 1);
  return g;
}

UndirectedGraph path_graph(int n) {
  UndirectedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

UndirectedGraph complete_graph(int n) {
  UndirectedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

UndirectedGraph complete_bipartite(int a, int b) {
  UndirectedGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

UndirectedGraph mycielskian(const UndirectedGraph& g) {
  // Vertices: originals [0, n), shadows [n, 2n), apex 2n.
  const int n = g.order();
  UndirectedGraph m(2 * n + 1);
  for (auto [u, v] : g.edges()) {
    m.add_edge(u, v);
    m.add_edge(u, n + v);
    m.add_edge(n + u, v);
  }
  for (int i = 0; i < n; ++i) m.add_edge(n + i, 2 * n);
  return m;
}

UndirectedGraph grotzsch() { return mycielskian(cycle_graph(5)); }

BlowupWitness chromatic_blowup_witness(const UndirectedGraph& g, int k, std::uint64_t budget) {
  if (k < 1) throw InvalidArgument("chromatic_blowup_witness: k must be at least 1");
  if (chromatic_number(g, budget).value <= k)
    throw InvalidArgument("chromatic_blowup_witness: requires chromatic number greater than k");
  auto lf = min_orientation_linear_forest(g, budget);
  BlowupWitness w;
  w.orientation = lf.orientation;
  w.sources = lf.sources;
  w.alpha = g.order() - lf.value;
  w.factor = k * lf.value + 1;
  w.digraph = backward_blowup(lf.orientation, w.factor);
  return w;
}

UndirectedGraph random_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("random_gnp: p must lie in [0, 1]");
  Rng rng(seed);
  UndirectedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

UndirectedGraph random_maximal_triangle_free(int n, std::uint64_t seed) {
  auto pairs = complete_graph(n).edges();
  Rng rng(seed);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
  UndirectedGraph g(n);
  for (auto [u, v] : pairs)
    if (!g.neighbours(u).intersects(g.neighbours(v))) g.add_edge(u, v);
  return g;
}

Digraph random_orientation(const UndirectedGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  Digraph d(g.order());
  for (auto [u, v] : g.edges()) {
    if (rng.coin())
      d.add_arc(v, u);
    else
      d.add_arc(u, v);
  }
  return d;
}

Digraph random_tournament(int n, std::uint64_t seed) { return random_orientation(complete_graph(n), seed); }

Digraph random_digraph(int n, double p, bool oriented, std::uint64_t seed) {
  Rng rng(seed);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (oriented) {
        if (!rng.bernoulli(p)) continue;
        if (rng.coin())
          d.add_arc(u, v);
        else
          d.add_arc(v, u);
      } else {
        if (rng.bernoulli(p)) d.add_arc(u, v);
        if (rng.bernoulli(p)) d.add_arc(v, u);
      }
    }
  return d;
}

}  // namespace dicol
