#pragma once

#include <cstdint>
#include <string>

#include "dicol/dicolour.hpp"
#include "dicol/graph.hpp"
#include "dicol/order.hpp"
#include "dicol/pipeline.hpp"
#include "dicol/structure.hpp"

namespace dicol {

inline constexpr const char* kToolkitVersion = "1.0.0";

// Claims understood by check_certificate.
namespace claim {
inline constexpr const char* dicolourable = "dicolourable";
inline constexpr const char* not_dicolourable = "not-dicolourable";
inline constexpr const char* dichromatic = "dichromatic";
inline constexpr const char* dicritical = "dicritical";
inline constexpr const char* decomposition = "decomposition";
inline constexpr const char* acyclic_set = "acyclic-set";
inline constexpr const char* order_colouring = "order-colouring";
inline constexpr const char* linear_forest = "linear-forest";
}  // namespace claim

// One JSON object per line: instance (graph6 for decompositions, digraph6
// otherwise), claim, evidence (a JSON object, kept as text), version, seed.
struct CertificateDocument {
  std::string instance;
  std::string claim;
  std::string evidence;
  std::string version = kToolkitVersion;
  std::uint64_t seed = 0;
};

std::string to_json_line(const CertificateDocument& doc);
// Throws ParseError (kind schema) when the line is not a certificate document.
CertificateDocument parse_certificate(const std::string& line);

struct CertificateVerdict {
  bool valid = false;
  // False when the claim is a search refusal that can only be checked for
  // consistency, not re-proved in polynomial time.
  bool rechecked = false;
  std::string reason;
};

// Re-checks the evidence without searching. Schema problems in the evidence
// throw ParseError; failed checks return valid = false.
CertificateVerdict check_certificate(const CertificateDocument& doc);
bool verify_certificate(const CertificateDocument& doc);

CertificateDocument dicolouring_certificate(const Digraph& d, const Dicolouring& c);
CertificateDocument refusal_certificate(const Digraph& d, int k, const SearchStats& stats);
CertificateDocument dichromatic_certificate(const Digraph& d, const DichromaticResult& r);
CertificateDocument dicritical_certificate(const Digraph& d, const DicriticalReport& r);
CertificateDocument decomposition_certificate(const UndirectedGraph& g, const Decomposition& dec);
CertificateDocument acyclic_set_certificate(const Digraph& d, const AcyclicNumberResult& r);
// Proper colouring of the backedge graph of `order` with `colours` colours.
CertificateDocument order_certificate(const Digraph& d, const VertexOrder& order,
                                      const std::vector<int>& colouring);
CertificateDocument linear_forest_certificate(const Digraph& d, const LinearForest& f);

}  // namespace dicol
