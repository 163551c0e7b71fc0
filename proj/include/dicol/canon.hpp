#pragma once

#include <string>
#include <vector>

#include "dicol/graph.hpp"

namespace dicol {

// Canonical labelling by partition refinement and individualisation with
// automorphism pruning. Order is limited to 64.
struct CanonicalForm {
  std::vector<int> labelling;  // labelling[v] = canonical index of v
  std::string encoding;        // graph6 (undirected) or digraph6 of the relabelled graph
  std::vector<int> orbit;      // smallest vertex in the automorphism orbit of v
  std::vector<std::vector<int>> generators;  // automorphisms found, as images
};

CanonicalForm canonical_form(const UndirectedGraph& g);
CanonicalForm canonical_form(const Digraph& d);

bool are_isomorphic(const UndirectedGraph& a, const UndirectedGraph& b);
bool are_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace dicol
