#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dicol/error.hpp"
#include "dicol/graph.hpp"

namespace dicol {

UndirectedGraph underlying_graph(const Digraph& d);

bool is_triangle_free(const UndirectedGraph& g);
// Undirected acyclicity.
bool is_forest(const UndirectedGraph& g);
bool is_connected(const UndirectedGraph& g);
// K2 counts as biconnected; graphs on fewer than two vertices do not.
bool is_biconnected(const UndirectedGraph& g);

bool is_acyclic_induced(const Digraph& d, const VertexSet& s);
inline bool is_acyclic(const Digraph& d) { return is_acyclic_induced(d, d.vertices()); }

// Vertex sequence of some directed cycle inside d[s], if any.
std::optional<std::vector<int>> find_directed_cycle(const Digraph& d, const VertexSet& s);

struct AcyclicNumberResult {
  int value = 0;
  VertexSet witness;
  SearchStats stats;
};

// Maximum acyclic vertex set by branch and bound. Throws LimitExceeded for
// order > 64 and BudgetExceeded when more than `budget` nodes are expanded.
AcyclicNumberResult acyclic_number(const Digraph& d, std::uint64_t budget = kDefaultBudget);

struct IndependenceResult {
  int value = 0;
  VertexSet witness;
  SearchStats stats;
};

IndependenceResult independence_number(const UndirectedGraph& g,
                                       std::uint64_t budget = kDefaultBudget);

struct ForestPartition {
  bool feasible = false;
  // forest_of[i] is the forest index of edge i of g.edges(); set only when feasible.
  std::vector<int> forest_of;
};

// Exact decision whether the edges split into at most k forests.
ForestPartition arboricity_at_most(const UndirectedGraph& g, int k);
int arboricity(const UndirectedGraph& g);

}  // namespace dicol
