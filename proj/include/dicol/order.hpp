#pragma once

#include <cstdint>
#include <vector>

#include "dicol/error.hpp"
#include "dicol/graph.hpp"

namespace dicol {

// A total order on the vertices: sequence[i] is the i-th smallest vertex.
class VertexOrder {
 public:
  VertexOrder() = default;
  explicit VertexOrder(std::vector<int> sequence);  // throws unless a permutation
  static VertexOrder identity(int n);

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& sequence() const { return seq_; }
  int position(int v) const { return pos_[v]; }
  bool before(int u, int v) const { return pos_[u] < pos_[v]; }

 private:
  std::vector<int> seq_;
  std::vector<int> pos_;
};

// Edge {u, v} for every arc v->u with u before v.
UndirectedGraph backedge_graph(const Digraph& d, const VertexOrder& order);

struct OrderMinimum {
  int value = 0;
  VertexOrder order;  // an order attaining the minimum
};

inline constexpr int kOrderEnumerationMaxVertices = 9;

// Minimum over all n! orders of chromatic_number(backedge_graph). Throws
// LimitExceeded above kOrderEnumerationMaxVertices.
OrderMinimum dichromatic_via_orders(const Digraph& d);

// Local search that moves a violating vertex to an end of the order until
// every vertex v has backedge degree at most floor(deg(v) / 2).
VertexOrder halve_degree_order(const Digraph& d);

bool satisfies_half_degree_bound(const Digraph& d, const VertexOrder& order);

// Vertex-disjoint directed paths, stored as the chosen arcs.
struct LinearForest {
  std::vector<Arc> arcs;
};

bool is_directed_linear_forest(const Digraph& d, const LinearForest& f);

struct LinearForestResult {
  int value = 0;
  LinearForest witness;
  SearchStats stats;
};

// Maximum number of arcs of a directed linear forest (order <= 64; practical
// up to about 20). Stops early once `stop_at` arcs are found.
LinearForestResult max_directed_linear_forest(const Digraph& d,
                                              std::uint64_t budget = kDefaultBudget,
                                              int stop_at = -1);

struct OrientationForest {
  int value = 0;                // n - alpha(g)
  Digraph orientation;          // an orientation attaining it
  VertexSet sources;            // the maximum independent set used as sources
};

// Orients g with a maximum independent set as sources and the remaining
// edges from lower to higher index.
OrientationForest min_orientation_linear_forest(const UndirectedGraph& g,
                                                std::uint64_t budget = kDefaultBudget);

}  // namespace dicol
