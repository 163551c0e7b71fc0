#include "dicol/certificate.hpp"

#include <json.hpp>

#include "dicol/graph6.hpp"
#include "dicol/structure.hpp"

namespace dicol {

using json = nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& what) { throw ParseError(ParseErrc::schema, what); }

json stats_json(const SearchStats& s) { return json{{"nodes", s.nodes}, {"max_depth", s.max_depth}}; }

CertificateDocument make(std::string instance, const char* c, const json& evidence) {
  CertificateDocument doc;
  doc.instance = std::move(instance);
  doc.claim = c;
  doc.evidence = evidence.dump();
  return doc;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    schema(std::string("field '") + key + "' has the wrong type");
  }
}

CertificateVerdict fail(const std::string& why) { return {false, true, why}; }

// True when c is a valid dicolouring; out-of-range or partial assignments count as invalid.
bool colouring_ok(const Digraph& d, int k, const std::vector<int>& colour, std::string& why) {
  try {
    if (verify_dicolouring(d, Dicolouring{k, colour})) return true;
    why = "colour class contains a directed cycle";
  } catch (const InvalidArgument& e) {
    why = e.what();
  }
  return false;
}

Digraph instance_digraph(const CertificateDocument& doc) {
  try {
    return decode_digraph6(doc.instance);
  } catch (const ParseError& e) {
    schema(std::string("instance: ") + e.what());
  }
}

CertificateVerdict check_dicolourable(const Digraph& d, const json& ev) {
  std::string why;
  if (!colouring_ok(d, field<int>(ev, "k"), field<std::vector<int>>(ev, "colouring"), why)) return fail(why);
  return {true, true, ""};
}

// Cheap evidence that d is k-dicolourable, which contradicts a refusal: few
// vertices, or a first-fit colouring that keeps every class acyclic.
std::string refutes_refusal(const Digraph& d, int k) {
  if (k >= 1 && d.order() <= k) return "instance has at most k vertices";
  if (k < 1) return d.order() == 0 ? "instance is empty" : "";
  std::vector<VertexSet> classes(k);
  for (int v = 0; v < d.order(); ++v) {
    bool placed = false;
    for (auto& c : classes) {
      c.insert(v);
      if (is_acyclic_induced(d, c)) {
        placed = true;
        break;
      }
      c.erase(v);
    }
    if (!placed) return "";
  }
  return "a first-fit colouring uses at most k colours";
}

CertificateVerdict check_refusal(const Digraph& d, const json& ev) {
  int k = field<int>(ev, "k");
  field<std::uint64_t>(ev, "nodes");
  if (k < 0) return fail("negative k");
  if (auto why = refutes_refusal(d, k); !why.empty()) return fail(why);
  return {true, false, "exhaustive refusal; node count recorded, not re-searched"};
}

CertificateVerdict check_dichromatic(const Digraph& d, const json& ev) {
  int value = field<int>(ev, "value");
  std::string why;
  if (!colouring_ok(d, value, field<std::vector<int>>(ev, "colouring"), why)) return fail(why);
  if (value >= 2) {
    if (!ev.contains("refusal")) schema("missing field 'refusal'");
    field<std::uint64_t>(ev.at("refusal"), "nodes");
    if (auto lower = refutes_refusal(d, value - 1); !lower.empty()) return fail("lower bound: " + lower);
  }
  if (value == 1 && !is_acyclic(d)) return fail("value 1 on a digraph with a cycle");
  if (value == 0 && d.order() != 0) return fail("value 0 on a nonempty digraph");
  return {true, value < 2, value < 2 ? "" : "lower bound is a recorded refusal"};
}

CertificateVerdict check_dicritical(const Digraph& d, const json& ev) {
  int k = field<int>(ev, "k");
  if (k < 1) return fail("k must be positive");
  std::string why;
  if (!colouring_ok(d, k, field<std::vector<int>>(ev, "colouring"), why)) return fail("k-colouring: " + why);
  if (k >= 2) {
    if (!ev.contains("refusal")) schema("missing field 'refusal'");
    field<std::uint64_t>(ev.at("refusal"), "nodes");
    if (auto lower = refutes_refusal(d, k - 1); !lower.empty()) return fail("lower bound: " + lower);
  }
  auto vd = field<json>(ev, "vertex_deletions");
  auto ad = field<json>(ev, "arc_deletions");
  if (!vd.is_array() || !ad.is_array()) schema("deletions must be arrays");
  std::vector<bool> seen_v(d.order(), false);
  for (const auto& e : vd) {
    int v = field<int>(e, "vertex");
    if (v < 0 || v >= d.order()) return fail("deleted vertex out of range");
    auto col = field<std::vector<int>>(e, "colouring");
    if (static_cast<int>(col.size()) != d.order()) return fail("vertex-deletion colouring has wrong length");
    if (col[v] != 0) return fail("deleted vertex must have colour 0");
    col.erase(col.begin() + v);
    if (!colouring_ok(d.without_vertex(v), k - 1, col, why))
      return fail("deletion of vertex " + std::to_string(v) + ": " + why);
    seen_v[v] = true;
  }
  for (int v = 0; v < d.order(); ++v)
    if (!seen_v[v]) return fail("no certificate for deleting vertex " + std::to_string(v));
  std::size_t arcs_covered = 0;
  std::vector<std::vector<bool>> seen_a(d.order(), std::vector<bool>(d.order(), false));
  for (const auto& e : ad) {
    auto a = field<std::vector<int>>(e, "arc");
    if (a.size() != 2) schema("arc must have two ends");
    int u = a[0], v = a[1];
    if (u < 0 || v < 0 || u >= d.order() || v >= d.order() || !d.has_arc(u, v)) return fail("deleted arc not in digraph");
    if (!colouring_ok(d.without_arc(u, v), k - 1, field<std::vector<int>>(e, "colouring"), why))
      return fail("deletion of arc " + std::to_string(u) + "->" + std::to_string(v) + ": " + why);
    if (!seen_a[u][v]) ++arcs_covered;
    seen_a[u][v] = true;
  }
  if (arcs_covered != static_cast<std::size_t>(d.arc_count())) return fail("some arc deletions are missing");
  return {true, k < 2, k < 2 ? "" : "lower bound is a recorded refusal"};
}

CertificateVerdict check_decomposition(const CertificateDocument& doc, const json& ev) {
  UndirectedGraph g;
  try {
    g = decode_graph6(doc.instance);
  } catch (const ParseError& e) {
    schema(std::string("instance: ") + e.what());
  }
  Decomposition dec;
  try {
    dec = decomposition_from_json(field<json>(ev, "decomposition").dump());
  } catch (const InvalidArgument& e) {
    schema(e.what());
  }
  auto check = validate_decomposition(g, dec);
  if (!check.valid) return fail(check.reason);
  return {true, true, ""};
}

CertificateVerdict check_acyclic_set(const Digraph& d, const json& ev) {
  int value = field<int>(ev, "value");
  auto set = field<std::vector<int>>(ev, "set");
  VertexSet s;
  for (int v : set) {
    if (v < 0 || v >= d.order()) return fail("vertex out of range");
    s.insert(v);
  }
  if (s.size() != value || static_cast<int>(set.size()) != value) return fail("set size differs from value");
  if (!is_acyclic_induced(d, s)) return fail("set induces a directed cycle");
  return {true, false, "maximality is a recorded search result"};
}

CertificateVerdict check_order(const Digraph& d, const json& ev) {
  auto seq = field<std::vector<int>>(ev, "order");
  int colours = field<int>(ev, "colours");
  auto col = field<std::vector<int>>(ev, "colouring");
  VertexOrder order;
  try {
    order = VertexOrder(seq);
  } catch (const InvalidArgument& e) {
    return fail(e.what());
  }
  if (order.size() != d.order()) return fail("order has the wrong length");
  if (static_cast<int>(col.size()) != d.order()) return fail("colouring has the wrong length");
  for (int c : col)
    if (c < 1 || c > colours) return fail("colour out of range");
  if (!is_proper_colouring(backedge_graph(d, order), col)) return fail("colouring is not proper on the backedge graph");
  std::string why;
  if (!colouring_ok(d, colours, col, why)) return fail(why);
  return {true, true, ""};
}

CertificateVerdict check_linear_forest(const Digraph& d, const json& ev) {
  int value = field<int>(ev, "value");
  LinearForest f;
  for (const auto& a : field<json>(ev, "arcs")) {
    auto p = a.get<std::vector<int>>();
    if (p.size() != 2) schema("arc must have two ends");
    f.arcs.emplace_back(p[0], p[1]);
  }
  if (static_cast<int>(f.arcs.size()) != value) return fail("arc count differs from value");
  for (auto [u, v] : f.arcs)
    if (u < 0 || v < 0 || u >= d.order() || v >= d.order()) return fail("arc out of range");
  if (!is_directed_linear_forest(d, f)) return fail("arcs do not form a directed linear forest");
  return {true, false, "maximality is a recorded search result"};
}

}  // namespace

std::string to_json_line(const CertificateDocument& doc) {
  json ev = json::parse(doc.evidence);
  json j{{"instance", doc.instance}, {"claim", doc.claim}, {"evidence", ev}, {"version", doc.version}, {"seed", doc.seed}};
  return j.dump();
}

CertificateDocument parse_certificate(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    schema(std::string("not JSON: ") + e.what());
  }
  CertificateDocument doc;
  doc.instance = field<std::string>(j, "instance");
  doc.claim = field<std::string>(j, "claim");
  auto ev = field<json>(j, "evidence");
  if (!ev.is_object()) schema("evidence must be an object");
  doc.evidence = ev.dump();
  doc.version = field<std::string>(j, "version");
  doc.seed = field<std::uint64_t>(j, "seed");
  return doc;
}

CertificateVerdict check_certificate(const CertificateDocument& doc) {
  json ev;
  try {
    ev = json::parse(doc.evidence);
  } catch (const json::exception& e) {
    schema(std::string("evidence is not JSON: ") + e.what());
  }
  if (doc.claim == claim::decomposition) return check_decomposition(doc, ev);
  Digraph d = instance_digraph(doc);
  if (doc.claim == claim::dicolourable) return check_dicolourable(d, ev);
  if (doc.claim == claim::not_dicolourable) return check_refusal(d, ev);
  if (doc.claim == claim::dichromatic) return check_dichromatic(d, ev);
  if (doc.claim == claim::dicritical) return check_dicritical(d, ev);
  if (doc.claim == claim::acyclic_set) return check_acyclic_set(d, ev);
  if (doc.claim == claim::order_colouring) return check_order(d, ev);
  if (doc.claim == claim::linear_forest) return check_linear_forest(d, ev);
  schema("unknown claim '" + doc.claim + "'");
}

bool verify_certificate(const CertificateDocument& doc) { return check_certificate(doc).valid; }

CertificateDocument dicolouring_certificate(const Digraph& d, const Dicolouring& c) {
  return make(encode_digraph6(d), claim::dicolourable, json{{"k", c.k}, {"colouring", c.colour}});
}

CertificateDocument refusal_certificate(const Digraph& d, int k, const SearchStats& stats) {
  return make(encode_digraph6(d), claim::not_dicolourable,
              json{{"k", k}, {"nodes", stats.nodes}, {"max_depth", stats.max_depth}});
}

CertificateDocument dichromatic_certificate(const Digraph& d, const DichromaticResult& r) {
  json ev{{"value", r.value}, {"colouring", r.certificate.colour}};
  if (r.value >= 2) ev["refusal"] = stats_json(r.refusal);
  return make(encode_digraph6(d), claim::dichromatic, ev);
}

CertificateDocument dicritical_certificate(const Digraph& d, const DicriticalReport& r) {
  json ev{{"k", r.k}};
  ev["colouring"] = r.k_certificate ? json(r.k_certificate->colour) : json::array();
  ev["refusal"] = stats_json(r.refusal);
  json vd = json::array(), ad = json::array();
  for (const auto& c : r.vertex_deletions)
    if (c.colouring) vd.push_back(json{{"vertex", c.vertex}, {"colouring", c.colouring->colour}});
  for (const auto& c : r.arc_deletions)
    if (c.colouring) ad.push_back(json{{"arc", {c.arc.first, c.arc.second}}, {"colouring", c.colouring->colour}});
  ev["vertex_deletions"] = vd;
  ev["arc_deletions"] = ad;
  return make(encode_digraph6(d), claim::dicritical, ev);
}

CertificateDocument decomposition_certificate(const UndirectedGraph& g, const Decomposition& dec) {
  return make(encode_graph6(g), claim::decomposition, json{{"decomposition", json::parse(decomposition_to_json(dec))}});
}

CertificateDocument acyclic_set_certificate(const Digraph& d, const AcyclicNumberResult& r) {
  return make(encode_digraph6(d), claim::acyclic_set,
              json{{"value", r.value}, {"set", r.witness.to_vector()}, {"nodes", r.stats.nodes}});
}

CertificateDocument order_certificate(const Digraph& d, const VertexOrder& order, const std::vector<int>& colouring) {
  int colours = 0;
  for (int c : colouring) colours = std::max(colours, c);
  return make(encode_digraph6(d), claim::order_colouring,
              json{{"order", order.sequence()}, {"colours", colours}, {"colouring", colouring}});
}

CertificateDocument linear_forest_certificate(const Digraph& d, const LinearForest& f) {
  json arcs = json::array();
  for (auto [u, v] : f.arcs) arcs.push_back({u, v});
  return make(encode_digraph6(d), claim::linear_forest, json{{"value", f.arcs.size()}, {"arcs", arcs}});
}

}  // namespace dicol
