#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dicol/vertex_set.hpp"

namespace dicol {

using Edge = std::pair<int, int>;
using Arc = std::pair<int, int>;

// Simple undirected graph on [0, n) stored as bit rows.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);
  static UndirectedGraph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const;  // edge count

  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const VertexSet& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  int min_degree() const;
  int max_degree() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced by s, relabelled to [0, |s|) in increasing vertex order.
  UndirectedGraph induced(const VertexSet& s) const;
  UndirectedGraph without_vertex(int v) const;
  // new_label[v] is the image of v.
  UndirectedGraph relabelled(std::span<const int> new_label) const;

  // Low 64 bits of every row; callers check order() <= 64.
  std::array<std::uint64_t, 64> masks() const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b);

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Irreflexive digraph on [0, n). Digons are representable; is_oriented()
// reports whether there are none.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  static Digraph from_arcs(int n, std::span<const Arc> arcs);

  int order() const { return n_; }
  int arc_count() const;

  bool has_arc(int u, int v) const { return out_[u].contains(v); }
  void add_arc(int u, int v);
  void remove_arc(int u, int v);

  const VertexSet& out(int v) const { return out_[v]; }
  const VertexSet& in(int v) const { return in_[v]; }
  int out_degree(int v) const { return out_[v].size(); }
  int in_degree(int v) const { return in_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool is_oriented() const;

  // Arcs in lexicographic order of (tail, head).
  std::vector<Arc> arcs() const;

  Digraph induced(const VertexSet& s) const;
  Digraph without_vertex(int v) const;
  Digraph without_arc(int u, int v) const;
  Digraph relabelled(std::span<const int> new_label) const;
  // Same vertex set, every arc reversed.
  Digraph converse() const;

  std::array<std::uint64_t, 64> out_masks() const;
  std::array<std::uint64_t, 64> in_masks() const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

struct DegreeProfile {
  std::vector<int> total;
  std::vector<int> in;
  std::vector<int> out;
};

DegreeProfile degree_profile(const UndirectedGraph& g);
DegreeProfile degree_profile(const Digraph& d);

// Digraph with one arc u->v for every edge {u, v}, u < v.
Digraph orient_low_to_high(const UndirectedGraph& g);
// Orientation selected by the bits of `bits`: edge i of g.edges() goes
// u->v when bit i is clear and v->u when set. Requires size() <= 64.
Digraph orientation_from_bits(const UndirectedGraph& g, std::uint64_t bits);
// Both arcs for every edge.
Digraph bidirected(const UndirectedGraph& g);

}  // namespace dicol
