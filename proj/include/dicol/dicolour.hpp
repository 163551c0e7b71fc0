#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dicol/error.hpp"
#include "dicol/graph.hpp"

namespace dicol {

// Vertex colouring with colours in [1, k]. A valid dicolouring has every
// colour class acyclic.
struct Dicolouring {
  int k = 0;
  std::vector<int> colour;

  VertexSet colour_class(int c) const;
  friend bool operator==(const Dicolouring&, const Dicolouring&) = default;
};

// Throws InvalidArgument when the assignment is not total on V(d) or uses a
// colour outside [1, k].
bool verify_dicolouring(const Digraph& d, const Dicolouring& c);

enum class Verdict { dicolourable, not_dicolourable, budget_exceeded };

const char* to_string(Verdict v);

struct SolveOutcome {
  Verdict verdict = Verdict::budget_exceeded;
  std::optional<Dicolouring> certificate;  // present iff dicolourable
  SearchStats stats;
};

// Complete decision of k-dicolourability (order <= 64). Negative verdicts are
// exhaustive; the node count in stats is the audit trail.
SolveOutcome is_k_dicolourable(const Digraph& d, int k, std::uint64_t budget = kDefaultBudget);

struct DichromaticResult {
  int value = 0;
  Dicolouring certificate;
  // Search statistics of the exhaustive refusal at value - 1 (zero for value <= 1).
  SearchStats refusal;
  SearchStats total;
};

// Throws BudgetExceeded if any single decision runs out of budget.
DichromaticResult dichromatic_number(const Digraph& d, std::uint64_t budget = kDefaultBudget);

struct DeletionCertificate {
  int vertex = -1;            // deleted vertex, or -1
  Arc arc{-1, -1};            // deleted arc, or (-1, -1)
  bool dicolourable = false;  // (k-1)-dicolourable after the deletion
  // Colouring indexed by the original vertices; the deleted vertex gets 0.
  std::optional<Dicolouring> colouring;
  SearchStats stats;
};

struct DicriticalReport {
  int k = 0;
  bool not_below_k = false;   // not (k-1)-dicolourable
  bool k_dicolourable = false;
  std::optional<Dicolouring> k_certificate;
  SearchStats refusal;        // stats of the (k-1) refusal
  std::vector<DeletionCertificate> vertex_deletions;
  std::vector<DeletionCertificate> arc_deletions;

  bool dichromatic_is_k() const { return not_below_k && k_dicolourable; }
  bool vertex_critical() const;
  bool arc_critical() const;
  bool critical() const { return dichromatic_is_k() && vertex_critical() && arc_critical(); }
  std::vector<int> failing_vertices() const;
  std::vector<Arc> failing_arcs() const;
};

DicriticalReport is_k_dicritical(const Digraph& d, int k, std::uint64_t budget = kDefaultBudget);

struct ChromaticResult {
  int value = 0;
  std::vector<int> colouring;  // colours in [1, value]
  SearchStats stats;
};

ChromaticResult chromatic_number(const UndirectedGraph& g, std::uint64_t budget = kDefaultBudget);

bool is_proper_colouring(const UndirectedGraph& g, const std::vector<int>& colouring);

}  // namespace dicol
