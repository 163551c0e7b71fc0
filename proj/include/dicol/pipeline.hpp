#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dicol/dicolour.hpp"
#include "dicol/graph.hpp"

namespace dicol {

// ---------------------------------------------------------------------------
// Small-order witnesses

// A single vertex, or the two ends of an arc, whose removal leaves d acyclic.
// Singletons are tried first, then arcs in lexicographic order. The empty set
// is returned for the empty digraph.
std::optional<VertexSet> small_witness(const Digraph& d);

enum class ExceptionTag {
  two_disjoint_c4,
  cube,
  cube_plus_two_diagonals,
  k44,
  k44_minus_edge,
  k44_subgraph_2244_3333,
};

const char* to_string(ExceptionTag t);
std::optional<ExceptionTag> exception_tag_from_string(const std::string& s);

struct CatalogEntry {
  ExceptionTag tag;
  UndirectedGraph graph;
  std::string graph6;  // canonical
};

// The six 8-vertex graphs with orientations that have no arc uv such that
// removing u and v leaves an acyclic digraph.
const std::vector<CatalogEntry>& exception_catalog();
std::optional<ExceptionTag> match_exception(const UndirectedGraph& g);

struct OrderEightResult {
  enum class Kind { witness, exception, acyclic } kind = Kind::acyclic;
  Arc arc{-1, -1};              // kind == witness
  std::optional<ExceptionTag> tag;  // kind == exception
};

// Requires an oriented triangle-free digraph on 8 vertices. Reports an arc
// whose ends cover every directed cycle, else the catalog entry of the
// underlying graph; `acyclic` when d has no arc at all. Throws Error(internal)
// when neither applies.
OrderEightResult classify_order_eight(const Digraph& d);

struct OrderEightCounts {
  int graphs = 0;                       // triangle-free, order 8, min degree >= 2
  int survivors = 0;                    // no edge uv with G - {u,v} a forest
  std::uint64_t orientations = 0;       // orientations of the survivors examined
  std::uint64_t exceptional_raw = 0;    // labelled orientations with no witness arc
  std::uint64_t exceptional_classes = 0;  // same, up to digraph isomorphism
  int exceptional_graphs = 0;           // survivors with some exceptional orientation
  bool all_in_catalog = false;          // every exceptional orientation matches the catalog
  std::map<std::string, std::uint64_t> raw_by_tag;
  std::map<std::string, std::uint64_t> classes_by_tag;
};

OrderEightCounts order_eight_counts();

struct SmallWitnessReport {
  int max_order = 0;
  std::uint64_t digraphs = 0;  // labelled orientations with min in/out-degree >= 1
  std::uint64_t failures = 0;
  std::vector<std::string> failing;  // digraph6 of the first failures
};

// Every orientation of every triangle-free graph of order <= max_order whose
// minimum in- and out-degree are at least 1.
SmallWitnessReport verify_small_witnesses(int max_order);

// ---------------------------------------------------------------------------
// Decompositions

enum class CoreRule {
  small,           // 2-core of G[Z] has at most 7 vertices
  eight_not_exception,  // 2-core has 8 vertices, not isomorphic to a catalog graph
};

const char* to_string(CoreRule r);

// X, Y, Z partition V(G). X = {pivot} together with every vertex whose
// neighbourhood lies inside N(pivot), Y = N(pivot), Z the rest. In a
// triangle-free graph X and Y are independent and X has no neighbour in Z,
// so D[X] is acyclic for every orientation D. The colour-1 part of Z is
// chosen per orientation by decomposition_dicolouring from the 2-core of
// G[Z]; `rule` records why a suitable part always exists.
struct Decomposition {
  int pivot = -1;
  VertexSet x, y, z;
  VertexSet core;  // 2-core of G[Z]
  CoreRule rule = CoreRule::small;
};

struct DecompositionCheck {
  bool valid = false;
  std::string reason;  // first failed condition
};

DecompositionCheck validate_decomposition(const UndirectedGraph& g, const Decomposition& dec);

// The candidate of a given pivot, whether or not it satisfies the core condition.
Decomposition pivot_candidate(const UndirectedGraph& g, int pivot);

struct DecompositionSearch {
  std::optional<Decomposition> found;
  // Pivot with the largest |X| + |Y| (smallest index on ties) and its |Z|;
  // used for bucket statistics.
  int best_pivot = -1;
  int best_z = 0;
  int best_core = 0;
  bool best_core_exception = false;
  int pivots_tried = 0;
};

// Tries pivots by decreasing |X| + |Y|, then increasing index. Requires g
// triangle-free.
DecompositionSearch cut_decomposition_search(const UndirectedGraph& g);
std::optional<Decomposition> find_decomposition(const UndirectedGraph& g);

// For an orientation d of g: colour Y and the chosen part of Z with 1, the
// rest with 2. Throws InvalidArgument if d is not an orientation of g.
Dicolouring decomposition_dicolouring(const UndirectedGraph& g, const Decomposition& dec,
                                      const Digraph& d);

VertexSet two_core(const UndirectedGraph& g, const VertexSet& within);

// ---------------------------------------------------------------------------
// Sweep

struct SweepFilters {
  bool min_degree = false;   // min degree >= 4
  bool max_degree = false;   // max degree <= n - 9
  bool biconnected = false;
  bool arboricity = false;   // arboricity >= 3
  bool all() const { return min_degree && max_degree && biconnected && arboricity; }
};

enum class SweepVerdict { filtered, decomposed, exception, unresolved };
const char* to_string(SweepVerdict v);

struct SweepRecord {
  std::string id;  // canonical graph6
  int n = 0;
  SweepFilters filters;
  SweepVerdict verdict = SweepVerdict::filtered;
  std::optional<Decomposition> decomposition;
  int z_size = -1;     // |Z| of the best pivot, for surviving instances
  int core_size = -1;
  double seconds = 0;
};

struct SweepOptions {
  int threads = 1;
  std::string checkpoint;   // empty: none
  bool timing = false;
  // Applied to internally generated instances; ingested streams are always
  // checked against every filter.
  bool apply_degree_filters = true;
};

struct SweepBuckets {
  std::uint64_t z_at_most_7 = 0;
  std::uint64_t z_eq_8 = 0;
  std::uint64_t z_other = 0;
};

struct SweepSummary {
  std::map<int, std::uint64_t> instances;  // per order
  std::map<int, std::uint64_t> survivors;  // passed every filter
  std::map<int, SweepBuckets> buckets;
  std::uint64_t decomposed = 0;
  std::uint64_t exceptions = 0;
  std::uint64_t unresolved = 0;
  std::uint64_t resumed = 0;  // records taken from the checkpoint
  std::vector<SweepRecord> records;  // sorted by (n, id)
};

SweepRecord process_instance(const UndirectedGraph& g);

// One JSON object per line; `seconds` is written only when timing is set.
std::string to_json_line(const SweepRecord& r, bool timing);
// Throws ParseError on malformed input.
SweepRecord sweep_record_from_json(const std::string& line);
std::string decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const std::string& text);

// Internal source: triangle-free graphs of every order in [n_min, n_max],
// generated with the degree filters built in.
SweepSummary sweep_generated(int n_min, int n_max, const SweepOptions& opts);
// Ingested source: graph6 lines (blank lines and headers skipped).
SweepSummary sweep_graphs(const std::vector<UndirectedGraph>& graphs, const SweepOptions& opts);

// ---------------------------------------------------------------------------
// Extremal values over oriented triangle-free graphs

struct ExtremalResult {
  int n = 0;
  int min_acyclic = 0;     // minimum acyclic number
  Digraph min_acyclic_witness;
  int max_dichromatic = 0;
  Digraph max_dichromatic_witness;
  std::uint64_t digraphs = 0;  // isomorphism classes examined
};

inline constexpr int kExtremalMaxVertices = 7;
ExtremalResult extremal_scan(int n);

}  // namespace dicol
