#pragma once

#include <cstdint>
#include <utility>

#include "dicol/error.hpp"
#include "dicol/graph.hpp"

namespace dicol {

// Vertex (v, i) of an m-backward-blowup, copy index i in [1, m], sits at
// flat index v * m + (i - 1). This numbering is part of the certificate format.
struct BlowupIndex {
  int vertex = 0;
  int copy = 1;

  int flatten(int m) const { return vertex * m + (copy - 1); }
  static BlowupIndex unflatten(int flat, int m) { return {flat / m, flat % m + 1}; }
};

// Forward arcs (u,i)->(v,i) and backward arcs (v,i)->(u,j), i != j, for each
// arc u->v of d.
Digraph backward_blowup(const Digraph& d, int m);

// Pack of v: all copies of v.
VertexSet blowup_pack(int v, int m);

Digraph directed_cycle(int length);
Digraph directed_path(int vertices);
Digraph transitive_tournament(int n);

// The two acyclic orientations of C5, up to isomorphism, with no directed
// path on four arcs. First has longest path 3, second longest path 2.
std::pair<Digraph, Digraph> acyclic_c5_no_p4();

// Arc i->j iff i - j is a nonzero square mod q; q prime, q = 3 mod 4.
Digraph paley_tournament(int q);

// backward_blowup(directed_cycle(5), 5).
Digraph d25();

UndirectedGraph cycle_graph(int n);
UndirectedGraph path_graph(int n);
UndirectedGraph complete_graph(int n);
UndirectedGraph complete_bipartite(int a, int b);
UndirectedGraph mycielskian(const UndirectedGraph& g);
UndirectedGraph grotzsch();

struct BlowupWitness {
  Digraph digraph;          // the blowup
  Digraph orientation;      // the oriented base graph
  VertexSet sources;        // independent set made into sources
  int alpha = 0;
  int factor = 0;           // k * (n - alpha) + 1
  const char* orientation_rule = "max-independent-set-as-sources";
};

// Throws InvalidArgument when k < 1 or chi(g) <= k.
BlowupWitness chromatic_blowup_witness(const UndirectedGraph& g, int k,
                                  std::uint64_t budget = kDefaultBudget);

UndirectedGraph random_gnp(int n, double p, std::uint64_t seed);
// Random maximal triangle-free graph: edges in uniform random order, each
// added unless it closes a triangle.
UndirectedGraph random_maximal_triangle_free(int n, std::uint64_t seed);
Digraph random_orientation(const UndirectedGraph& g, std::uint64_t seed);
// Uniform tournament on n vertices.
Digraph random_tournament(int n, std::uint64_t seed);
// Each ordered pair gets an arc with probability p, digons excluded when oriented.
Digraph random_digraph(int n, double p, bool oriented, std::uint64_t seed);

}  // namespace dicol
