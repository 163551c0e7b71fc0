#include "dicol/dicol.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <string>

#include <json.hpp>

#include "dicol/canon.hpp"
#include "dicol/certificate.hpp"
#include "dicol/constructions.hpp"
#include "dicol/dicolour.hpp"
#include "dicol/enumerate.hpp"
#include "dicol/graph6.hpp"
#include "dicol/order.hpp"
#include "dicol/pipeline.hpp"
#include "dicol/rng.hpp"
#include "dicol/sparse.hpp"
#include "dicol/structure.hpp"

struct dicol_graph {
  dicol::UndirectedGraph g;
};

struct dicol_digraph {
  dicol::Digraph d;
};

namespace {

using json = nlohmann::json;
using namespace dicol;

thread_local std::string last_error;

// Raised inside guarded bodies when an argument pointer is null.
struct NullArgument {
  const char* what;
};

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class T>
T* need(T* p, const char* what) {
  if (!p) throw NullArgument{what};
  return p;
}

json stats_json(const SearchStats& s) { return json{{"nodes", s.nodes}, {"max_depth", s.max_depth}}; }

void set_report(char** out, const json& j) {
  if (out) *out = dup(j.dump());
}

template <class F>
dicol_status guard(char** report, F&& body) {
  last_error.clear();
  try {
    body();
    return DICOL_OK;
  } catch (const NullArgument& e) {
    last_error = std::string("null argument: ") + e.what;
    return DICOL_ERR_NULL;
  } catch (const BudgetExceeded& e) {
    last_error = e.what();
    set_report(report, json{{"verdict", "budget-exceeded"}, {"stats", stats_json(e.stats())}, {"message", e.what()}});
    return DICOL_ERR_BUDGET;
  } catch (const Error& e) {
    last_error = e.what();
    switch (e.code()) {
      case Errc::invalid_argument: return DICOL_ERR_INVALID_ARGUMENT;
      case Errc::parse: return DICOL_ERR_PARSE;
      case Errc::limit: return DICOL_ERR_LIMIT;
      case Errc::budget: return DICOL_ERR_BUDGET;
      case Errc::io: return DICOL_ERR_IO;
      case Errc::internal: return DICOL_ERR_INTERNAL;
    }
    return DICOL_ERR_INTERNAL;
  } catch (const json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return DICOL_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DICOL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DICOL_ERR_INTERNAL;
  }
}

void emit(dicol_line_sink sink, void* ctx, const CertificateDocument& doc) {
  if (sink) sink(to_json_line(doc).c_str(), ctx);
}

int parse_suffix(const std::string& name, const std::string& prefix) {
  std::string rest = name.substr(prefix.size());
  if (rest.empty() || rest.size() > 4 || !std::all_of(rest.begin(), rest.end(), ::isdigit))
    throw InvalidArgument("bad size in name '" + name + "'");
  return std::stoi(rest);
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

UndirectedGraph named_graph(const std::string& name) {
  if (name == "grotzsch") return grotzsch();
  if (name == "cube") {
    UndirectedGraph g(8);
    for (int v = 0; v < 8; ++v)
      for (int b = 0; b < 3; ++b)
        if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    return g;
  }
  if (starts_with(name, "cycle")) return cycle_graph(parse_suffix(name, "cycle"));
  if (starts_with(name, "path")) return path_graph(parse_suffix(name, "path"));
  if (starts_with(name, "complete")) return complete_graph(parse_suffix(name, "complete"));
  if (starts_with(name, "bipartite")) {
    auto rest = name.substr(9);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw InvalidArgument("bipartite needs A,B");
    return complete_bipartite(parse_suffix(rest.substr(0, comma), ""), parse_suffix(rest.substr(comma + 1), ""));
  }
  throw InvalidArgument("unknown graph name '" + name + "'");
}

Digraph named_digraph(const std::string& name) {
  if (name == "d25") return d25();
  if (name == "c5-acyclic-a") return acyclic_c5_no_p4().first;
  if (name == "c5-acyclic-b") return acyclic_c5_no_p4().second;
  if (starts_with(name, "dcycle")) return directed_cycle(parse_suffix(name, "dcycle"));
  if (starts_with(name, "dpath")) return directed_path(parse_suffix(name, "dpath"));
  if (starts_with(name, "tt")) return transitive_tournament(parse_suffix(name, "tt"));
  if (starts_with(name, "paley")) return paley_tournament(parse_suffix(name, "paley"));
  throw InvalidArgument("unknown digraph name '" + name + "'");
}

json dicritical_json(const DicriticalReport& r) {
  json j{{"k", r.k},
         {"not_below_k", r.not_below_k},
         {"k_dicolourable", r.k_dicolourable},
         {"refusal", stats_json(r.refusal)},
         {"vertex_deletions", r.vertex_deletions.size()},
         {"arc_deletions", r.arc_deletions.size()},
         {"vertex_critical", r.vertex_critical()},
         {"arc_critical", r.arc_critical()},
         {"critical", r.critical()}};
  json fv = json::array(), fa = json::array();
  for (int v : r.failing_vertices()) fv.push_back(v);
  for (auto [u, v] : r.failing_arcs()) fa.push_back({u, v});
  j["failing_vertices"] = fv;
  j["failing_arcs"] = fa;
  return j;
}

std::vector<UndirectedGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<UndirectedGraph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("read error on " + path);
  return out;
}

json param(const json& p, const char* key, const json& fallback) {
  return p.contains(key) ? p.at(key) : fallback;
}

}  // namespace

extern "C" {

const char* dicol_version(void) { return kToolkitVersion; }

const char* dicol_last_error(void) { return last_error.c_str(); }

const char* dicol_status_name(dicol_status status) {
  switch (status) {
    case DICOL_OK: return "ok";
    case DICOL_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case DICOL_ERR_PARSE: return "parse-error";
    case DICOL_ERR_LIMIT: return "limit-exceeded";
    case DICOL_ERR_BUDGET: return "budget-exceeded";
    case DICOL_ERR_IO: return "io-error";
    case DICOL_ERR_INTERNAL: return "internal-error";
    case DICOL_ERR_NULL: return "null-argument";
  }
  return "unknown";
}

void dicol_string_free(char* s) { std::free(s); }

dicol_status dicol_graph_new(int n, dicol_graph** out) {
  return guard(nullptr, [&] {
    need(out, "out");
    if (n < 0) throw InvalidArgument("negative order");
    *out = new dicol_graph{UndirectedGraph(n)};
  });
}

void dicol_graph_free(dicol_graph* g) { delete g; }

dicol_status dicol_graph_add_edge(dicol_graph* g, int u, int v) {
  return guard(nullptr, [&] { need(g, "g")->g.add_edge(u, v); });
}

dicol_status dicol_graph_order(const dicol_graph* g, int* n) {
  return guard(nullptr, [&] { *need(n, "n") = need(g, "g")->g.order(); });
}

dicol_status dicol_graph_size(const dicol_graph* g, int* m) {
  return guard(nullptr, [&] { *need(m, "m") = need(g, "g")->g.size(); });
}

dicol_status dicol_graph_has_edge(const dicol_graph* g, int u, int v, int* present) {
  return guard(nullptr, [&] {
    const auto& gr = need(g, "g")->g;
    if (u < 0 || v < 0 || u >= gr.order() || v >= gr.order()) throw InvalidArgument("vertex out of range");
    *need(present, "present") = gr.has_edge(u, v) ? 1 : 0;
  });
}

dicol_status dicol_graph_from_graph6(const char* line, dicol_graph** out) {
  return guard(nullptr, [&] {
    need(out, "out");
    *out = new dicol_graph{decode_graph6(need(line, "line"))};
  });
}

dicol_status dicol_graph_to_graph6(const dicol_graph* g, char** out) {
  return guard(nullptr, [&] { *need(out, "out") = dup(encode_graph6(need(g, "g")->g)); });
}

dicol_status dicol_graph_named(const char* name, dicol_graph** out) {
  return guard(nullptr, [&] {
    need(out, "out");
    *out = new dicol_graph{named_graph(need(name, "name"))};
  });
}

dicol_status dicol_digraph_new(int n, dicol_digraph** out) {
  return guard(nullptr, [&] {
    need(out, "out");
    if (n < 0) throw InvalidArgument("negative order");
    *out = new dicol_digraph{Digraph(n)};
  });
}

void dicol_digraph_free(dicol_digraph* d) { delete d; }

dicol_status dicol_digraph_add_arc(dicol_digraph* d, int u, int v) {
  return guard(nullptr, [&] { need(d, "d")->d.add_arc(u, v); });
}

dicol_status dicol_digraph_order(const dicol_digraph* d, int* n) {
  return guard(nullptr, [&] { *need(n, "n") = need(d, "d")->d.order(); });
}

dicol_status dicol_digraph_arc_count(const dicol_digraph* d, int* m) {
  return guard(nullptr, [&] { *need(m, "m") = need(d, "d")->d.arc_count(); });
}

dicol_status dicol_digraph_has_arc(const dicol_digraph* d, int u, int v, int* present) {
  return guard(nullptr, [&] {
    const auto& dg = need(d, "d")->d;
    if (u < 0 || v < 0 || u >= dg.order() || v >= dg.order()) throw InvalidArgument("vertex out of range");
    *need(present, "present") = dg.has_arc(u, v) ? 1 : 0;
  });
}

dicol_status dicol_digraph_from_digraph6(const char* line, dicol_digraph** out) {
  return guard(nullptr, [&] {
    need(out, "out");
    *out = new dicol_digraph{decode_digraph6(need(line, "line"))};
  });
}

dicol_status dicol_digraph_to_digraph6(const dicol_digraph* d, char** out) {
  return guard(nullptr, [&] { *need(out, "out") = dup(encode_digraph6(need(d, "d")->d)); });
}

dicol_status dicol_digraph_named(const char* name, dicol_digraph** out) {
  return guard(nullptr, [&] {
    need(out, "out");
    *out = new dicol_digraph{named_digraph(need(name, "name"))};
  });
}

dicol_status dicol_backward_blowup(const dicol_digraph* d, int m, dicol_digraph** out) {
  return guard(nullptr, [&] {
    need(out, "out");
    *out = new dicol_digraph{backward_blowup(need(d, "d")->d, m)};
  });
}

dicol_status dicol_dicolourable(const dicol_digraph* d, int k, uint64_t budget, int* decision, char** report_json,
                                dicol_line_sink certificates, void* context) {
  return guard(report_json, [&] {
    const auto& dg = need(d, "d")->d;
    need(decision, "decision");
    auto r = is_k_dicolourable(dg, k, budget);
    json j{{"instance", encode_digraph6(dg)}, {"k", k}, {"verdict", to_string(r.verdict)}, {"stats", stats_json(r.stats)}};
    if (r.certificate) j["colouring"] = r.certificate->colour;
    set_report(report_json, j);
    if (r.verdict == Verdict::budget_exceeded) {
      throw BudgetExceeded("budget of " + std::to_string(budget) + " nodes exhausted", r.stats);
    }
    *decision = r.verdict == Verdict::dicolourable ? DICOL_YES : DICOL_NO;
    if (r.certificate)
      emit(certificates, context, dicolouring_certificate(dg, *r.certificate));
    else
      emit(certificates, context, refusal_certificate(dg, k, r.stats));
  });
}

dicol_status dicol_dichromatic(const dicol_digraph* d, uint64_t budget, int* value, char** report_json,
                               dicol_line_sink certificates, void* context) {
  return guard(report_json, [&] {
    const auto& dg = need(d, "d")->d;
    auto r = dichromatic_number(dg, budget);
    *need(value, "value") = r.value;
    set_report(report_json, json{{"instance", encode_digraph6(dg)},
                                 {"dichromatic_number", r.value},
                                 {"colouring", r.certificate.colour},
                                 {"refusal", stats_json(r.refusal)},
                                 {"stats", stats_json(r.total)}});
    emit(certificates, context, dichromatic_certificate(dg, r));
  });
}

dicol_status dicol_acyclic(const dicol_digraph* d, uint64_t budget, int* value, char** report_json,
                           dicol_line_sink certificates, void* context) {
  return guard(report_json, [&] {
    const auto& dg = need(d, "d")->d;
    auto r = acyclic_number(dg, budget);
    *need(value, "value") = r.value;
    set_report(report_json, json{{"instance", encode_digraph6(dg)},
                                 {"acyclic_number", r.value},
                                 {"witness", r.witness.to_vector()},
                                 {"stats", stats_json(r.stats)}});
    emit(certificates, context, acyclic_set_certificate(dg, r));
  });
}

dicol_status dicol_dicritical(const dicol_digraph* d, int k, uint64_t budget, int* decision, char** report_json,
                              dicol_line_sink certificates, void* context) {
  return guard(report_json, [&] {
    const auto& dg = need(d, "d")->d;
    need(decision, "decision");
    auto r = is_k_dicritical(dg, k, budget);
    auto j = dicritical_json(r);
    j["instance"] = encode_digraph6(dg);
    set_report(report_json, j);
    *decision = r.critical() ? DICOL_YES : DICOL_NO;
    if (r.critical()) emit(certificates, context, dicritical_certificate(dg, r));
  });
}

dicol_status dicol_verify_d25(uint64_t budget, int* decision, char** report_json, dicol_line_sink certificates,
                              void* context) {
  return guard(report_json, [&] {
    need(decision, "decision");
    auto d = d25();
    auto g = underlying_graph(d);
    auto prof = degree_profile(d);
    bool degrees_10 = std::all_of(prof.total.begin(), prof.total.end(), [](int x) { return x == 10; });
    auto two = is_k_dicolourable(d, 2, budget);
    if (two.verdict == Verdict::budget_exceeded) throw BudgetExceeded("D25: 2-dicolourability undecided", two.stats);
    auto crit = is_k_dicritical(d, 3, budget);
    bool ok = d.is_oriented() && is_triangle_free(g) && two.verdict == Verdict::not_dicolourable &&
              crit.dichromatic_is_k() && crit.critical();
    json j{{"instance", encode_digraph6(d)},
           {"order", d.order()},
           {"arcs", d.arc_count()},
           {"oriented", d.is_oriented()},
           {"triangle_free", is_triangle_free(g)},
           {"all_degrees_10", degrees_10},
           {"two_dicolourable", two.verdict == Verdict::dicolourable},
           {"refusal", stats_json(two.stats)},
           {"dichromatic_number", crit.dichromatic_is_k() ? 3 : -1},
           {"dicritical", dicritical_json(crit)},
           {"verified", ok}};
    set_report(report_json, j);
    *decision = ok ? DICOL_YES : DICOL_NO;
    emit(certificates, context, refusal_certificate(d, 2, two.stats));
    if (crit.k_certificate) emit(certificates, context, dicolouring_certificate(d, *crit.k_certificate));
    if (crit.critical()) emit(certificates, context, dicritical_certificate(d, crit));
  });
}

dicol_status dicol_order(const dicol_digraph* d, int exact, char** report_json, dicol_line_sink certificates,
                         void* context) {
  return guard(report_json, [&] {
    const auto& dg = need(d, "d")->d;
    auto order = halve_degree_order(dg);
    auto back = backedge_graph(dg, order);
    auto chi = chromatic_number(back);
    json j{{"instance", encode_digraph6(dg)},
           {"halving_order", order.sequence()},
           {"half_degree_bound", satisfies_half_degree_bound(dg, order)},
           {"backedge_edges", back.size()},
           {"backedge_max_degree", back.order() ? back.max_degree() : 0},
           {"backedge_chromatic", chi.value}};
    emit(certificates, context, order_certificate(dg, order, chi.colouring));
    if (exact) {
      auto best = dichromatic_via_orders(dg);
      auto best_chi = chromatic_number(backedge_graph(dg, best.order));
      j["dichromatic_via_orders"] = best.value;
      j["optimal_order"] = best.order.sequence();
      emit(certificates, context, order_certificate(dg, best.order, best_chi.colouring));
    }
    set_report(report_json, j);
  });
}

dicol_status dicol_linforest_digraph(const dicol_digraph* d, uint64_t budget, int* value, char** report_json,
                                     dicol_line_sink certificates, void* context) {
  return guard(report_json, [&] {
    const auto& dg = need(d, "d")->d;
    auto r = max_directed_linear_forest(dg, budget);
    *need(value, "value") = r.value;
    json arcs = json::array();
    for (auto [u, v] : r.witness.arcs) arcs.push_back({u, v});
    set_report(report_json, json{{"instance", encode_digraph6(dg)},
                                 {"max_linear_forest", r.value},
                                 {"arcs", arcs},
                                 {"stats", stats_json(r.stats)}});
    emit(certificates, context, linear_forest_certificate(dg, r.witness));
  });
}

dicol_status dicol_linforest_graph(const dicol_graph* g, uint64_t budget, int* value, char** report_json) {
  return guard(report_json, [&] {
    const auto& gr = need(g, "g")->g;
    auto r = min_orientation_linear_forest(gr, budget);
    auto attained = max_directed_linear_forest(r.orientation, budget);
    *need(value, "value") = r.value;
    set_report(report_json, json{{"instance", encode_graph6(gr)},
                                 {"order", gr.order()},
                                 {"independence_number", gr.order() - r.value},
                                 {"min_orientation_linear_forest", r.value},
                                 {"orientation", encode_digraph6(r.orientation)},
                                 {"sources", r.sources.to_vector()},
                                 {"orientation_linear_forest", attained.value}});
  });
}

dicol_status dicol_enumerate(int n, int min_degree, int max_degree, int triangle_free, int threads,
                             dicol_line_sink sink, void* context, uint64_t* count) {
  return guard(nullptr, [&] {
    need(sink, "sink");
    EnumerationOptions o;
    o.n = n;
    o.min_degree = min_degree;
    o.max_degree = max_degree;
    o.triangle_free = triangle_free != 0;
    o.threads = threads;
    auto all = enumerate_sorted(o);
    for (const auto& e : all) sink(e.graph6.c_str(), context);
    if (count) *count = all.size();
  });
}

dicol_status dicol_sweep(int n_min, int n_max, const char* input_path, const char* checkpoint_path, int threads,
                         int timing, dicol_line_sink records, void* context, uint64_t* unresolved,
                         char** summary_json) {
  return guard(summary_json, [&] {
    SweepOptions o;
    o.threads = threads;
    o.timing = timing != 0;
    if (checkpoint_path) o.checkpoint = checkpoint_path;
    SweepSummary s = input_path ? sweep_graphs(read_graph6_file(input_path), o) : sweep_generated(n_min, n_max, o);
    if (records)
      for (const auto& r : s.records) records(to_json_line(r, o.timing).c_str(), context);
    json per = json::array();
    for (const auto& [n, count] : s.instances) {
      auto b = s.buckets.count(n) ? s.buckets.at(n) : SweepBuckets{};
      per.push_back(json{{"n", n},
                         {"instances", count},
                         {"survivors", s.survivors.count(n) ? s.survivors.at(n) : 0},
                         {"z_at_most_7", b.z_at_most_7},
                         {"z_eq_8", b.z_eq_8},
                         {"z_other", b.z_other}});
    }
    json unresolved_ids = json::array();
    for (const auto& r : s.records)
      if (r.verdict == SweepVerdict::unresolved || r.verdict == SweepVerdict::exception) unresolved_ids.push_back(r.id);
    set_report(summary_json, json{{"source", input_path ? json(input_path) : json("generated")},
                                  {"n_min", n_min},
                                  {"n_max", n_max},
                                  {"per_order", per},
                                  {"decomposed", s.decomposed},
                                  {"exceptions", s.exceptions},
                                  {"unresolved", s.unresolved},
                                  {"unresolved_ids", unresolved_ids},
                                  {"resumed", s.resumed}});
    if (unresolved) *unresolved = s.unresolved + s.exceptions;
  });
}

dicol_status dicol_experiment(const char* kind, const char* params_json, uint64_t seed, int threads, int* decision,
                              char** report_json) {
  return guard(report_json, [&] {
    std::string k = need(kind, "kind");
    need(decision, "decision");
    json p = params_json && *params_json ? json::parse(params_json) : json::object();
    json j{{"kind", k}, {"seed", seed}};
    bool ok = true;
    if (k == "alpha") {
      auto orders = param(p, "orders", json{10, 20, 30, 40}).get<std::vector<int>>();
      int trials = param(p, "trials", 3).get<int>();
      double c0 = param(p, "c0", 0.513).get<double>();
      json rows = json::array();
      for (const auto& s : alpha_experiment(orders, trials, seed, c0))
        rows.push_back(json{{"n", s.n},
                            {"trial", s.trial},
                            {"edges", s.edges},
                            {"rejections", s.rejections},
                            {"independence_number", s.independence},
                            {"acyclic_number", s.acyclic},
                            {"threshold_ln", s.threshold_ln},
                            {"threshold_log2", s.threshold_log2}});
      j["samples"] = rows;
      j["note"] = "demonstration only; the asymptotic bound is not tested at this scale";
    } else if (k == "dsparse") {
      int graphs = param(p, "graphs", 100).get<int>();
      int n_min = param(p, "n_min", 14).get<int>();
      int n_max = param(p, "n_max", 18).get<int>();
      int max_trials = param(p, "max_trials", 20).get<int>();
      if (graphs < 1 || n_min < 1 || n_max < n_min) throw InvalidArgument("dsparse: bad parameters");
      Rng rng(seed);
      std::uint64_t total_trials = 0;
      int successes = 0, max_used = 0;
      bool exhaustive = true;
      for (int i = 0; i < graphs; ++i) {
        auto r = rng.split(i);
        int n = n_min + static_cast<int>(r.below(n_max - n_min + 1));
        auto g = random_maximal_triangle_free(n, r.next());
        auto f = find_dsparse_orientation(g, max_trials, r.next());
        total_trials += f.trials;
        max_used = std::max(max_used, f.trials);
        successes += f.success;
        exhaustive = exhaustive && f.check.exhaustive;
      }
      j["graphs"] = graphs;
      j["successes"] = successes;
      j["mean_trials"] = static_cast<double>(total_trials) / graphs;
      j["max_trials"] = max_used;
      j["exhaustive"] = exhaustive;
      ok = successes == graphs;
    } else if (k == "chi-bound") {
      json rows = json::array();
      std::vector<std::pair<std::string, UndirectedGraph>> list{
          {"complete3", complete_graph(3)}, {"cycle5", cycle_graph(5)}, {"complete4", complete_graph(4)},
          {"bipartite3,3", complete_bipartite(3, 3)}, {"empty4", UndirectedGraph(4)}, {"grotzsch", grotzsch()}};
      Rng rng(seed);
      int randoms = param(p, "random_graphs", 20).get<int>();
      for (int i = 0; i < randoms; ++i) {
        auto r = rng.split(i);
        int n = 2 + static_cast<int>(r.below(5));
        list.emplace_back("random" + std::to_string(i), random_gnp(n, 0.5, r.next()));
      }
      for (const auto& [name, g] : list) {
        auto r = chi_bound_check(g, 16, 200, seed);
        ok = ok && r.holds;
        rows.push_back(json{{"graph", name},
                            {"graph6", encode_graph6(g)},
                            {"chromatic", r.chromatic},
                            {"max_dichromatic", r.max_dichromatic},
                            {"exhaustive", r.exhaustive},
                            {"orientations", r.orientations},
                            {"bound", r.bound},
                            {"holds", r.holds}});
      }
      j["graphs"] = rows;
    } else if (k == "small-witness") {
      auto r = verify_small_witnesses(param(p, "max_order", 7).get<int>());
      j["max_order"] = r.max_order;
      j["digraphs"] = r.digraphs;
      j["failures"] = r.failures;
      j["failing"] = r.failing;
      ok = r.failures == 0;
    } else if (k == "order-eight") {
      auto c = order_eight_counts();
      j["graphs"] = c.graphs;
      j["survivors"] = c.survivors;
      j["orientations"] = c.orientations;
      j["exceptional_raw"] = c.exceptional_raw;
      j["exceptional_classes"] = c.exceptional_classes;
      j["exceptional_graphs"] = c.exceptional_graphs;
      j["all_in_catalog"] = c.all_in_catalog;
      j["raw_by_tag"] = c.raw_by_tag;
      j["classes_by_tag"] = c.classes_by_tag;
      ok = c.all_in_catalog;
    } else if (k == "tournaments") {
      int n = param(p, "n", 4).get<int>();
      auto samples = param(p, "samples", 0).get<std::uint64_t>();
      auto s = tournament_scan(n, samples, seed);
      j["n"] = n;
      j["exhaustive"] = s.exhaustive;
      j["tournaments"] = s.tournaments;
      j["min_acyclic"] = s.min_acyclic;
      j["witness"] = encode_digraph6(s.witness);
    } else {
      throw InvalidArgument("unknown experiment kind '" + k + "'");
    }
    (void)threads;
    j["holds"] = ok;
    set_report(report_json, j);
    *decision = ok ? DICOL_YES : DICOL_NO;
  });
}

dicol_status dicol_constants(double c0, double c1, double c2, double eps, int* decision, char** report_json) {
  return guard(report_json, [&] {
    need(decision, "decision");
    auto r = verify_lll_constants(c0, c1, c2, eps);
    set_report(report_json, json{{"c0", c0},
                                 {"c1", c1},
                                 {"c2", c2},
                                 {"eps", eps},
                                 {"inequality1", {{"lhs", r.lhs1}, {"rhs", r.rhs1}, {"margin", r.margin1}, {"holds", r.holds1}}},
                                 {"inequality2", {{"lhs", r.lhs2}, {"rhs", r.rhs2}, {"margin", r.margin2}, {"holds", r.holds2}}},
                                 {"holds", r.holds()}});
    *decision = r.holds() ? DICOL_YES : DICOL_NO;
  });
}

dicol_status dicol_extremal(int n, char** report_json) {
  return guard(report_json, [&] {
    need(report_json, "report_json");
    auto r = extremal_scan(n);
    set_report(report_json, json{{"n", n},
                                 {"min_acyclic_number", r.min_acyclic},
                                 {"min_acyclic_witness", encode_digraph6(r.min_acyclic_witness)},
                                 {"max_dichromatic_number", r.max_dichromatic},
                                 {"max_dichromatic_witness", encode_digraph6(r.max_dichromatic_witness)},
                                 {"digraphs", r.digraphs}});
  });
}

dicol_status dicol_verify_certificate(const char* line, int* valid, char** report_json) {
  return guard(report_json, [&] {
    need(valid, "valid");
    auto doc = parse_certificate(need(line, "line"));
    auto v = check_certificate(doc);
    *valid = v.valid ? 1 : 0;
    set_report(report_json, json{{"claim", doc.claim},
                                 {"instance", doc.instance},
                                 {"valid", v.valid},
                                 {"rechecked", v.rechecked},
                                 {"reason", v.reason}});
  });
}

}  // extern "C"
