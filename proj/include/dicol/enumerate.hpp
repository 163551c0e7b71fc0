#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dicol/graph.hpp"

namespace dicol {

struct EnumerationOptions {
  int n = 0;
  int min_degree = 0;
  int max_degree = -1;  // -1: no bound
  bool triangle_free = true;
  int threads = 1;
};

struct EnumeratedGraph {
  UndirectedGraph graph;  // canonically labelled
  std::string graph6;     // encoding of graph, the canonical id
};

// Largest order accepted by internal generation. Counts grow quickly; the
// degree bounds are what make the upper end practical.
inline constexpr int kEnumerationMaxVertices = 20;

// Orderly generation by canonical vertex augmentation: exactly one graph per
// isomorphism class satisfying the options. The sink is called under a lock,
// in unspecified order when threads > 1. Returns the number of graphs emitted.
std::uint64_t enumerate_graphs(const EnumerationOptions& opts,
                               const std::function<void(const EnumeratedGraph&)>& sink);

// Same, collected and sorted by graph6.
std::vector<EnumeratedGraph> enumerate_sorted(const EnumerationOptions& opts);

std::vector<EnumeratedGraph> enumerate_triangle_free(int n, int min_degree, int threads = 1);

}  // namespace dicol
