#include "dicol/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "dicol/canon.hpp"
#include "dicol/constructions.hpp"
#include "dicol/enumerate.hpp"
#include "dicol/graph6.hpp"
#include "dicol/structure.hpp"
#include "internal/canon_impl.hpp"
#include "internal/mask.hpp"

namespace dicol {

using internal::acyclic_on;
using internal::bit;
using internal::Mask;
using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Small-order witnesses

std::optional<VertexSet> small_witness(const Digraph& d) {
  internal::require_solver_order(d.order(), "small_witness");
  int n = d.order();
  if (n == 0) return VertexSet();
  auto out = d.out_masks();
  Mask all = internal::all(n);
  for (int v = 0; v < n; ++v)
    if (acyclic_on(out, all & ~bit(v))) return VertexSet::from_mask(bit(v));
  for (auto [u, v] : d.arcs())
    if (acyclic_on(out, all & ~bit(u) & ~bit(v))) return VertexSet::from_mask(bit(u) | bit(v));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exception catalog

const char* to_string(ExceptionTag t) {
  switch (t) {
    case ExceptionTag::two_disjoint_c4: return "two-disjoint-C4";
    case ExceptionTag::cube: return "cube";
    case ExceptionTag::cube_plus_two_diagonals: return "cube-plus-two-diagonals";
    case ExceptionTag::k44: return "K44";
    case ExceptionTag::k44_minus_edge: return "K44-minus-edge";
    case ExceptionTag::k44_subgraph_2244_3333: return "K44-subgraph-2244-3333";
  }
  return "unknown";
}

std::optional<ExceptionTag> exception_tag_from_string(const std::string& s) {
  for (const auto& e : exception_catalog())
    if (s == to_string(e.tag)) return e.tag;
  return std::nullopt;
}

namespace {

UndirectedGraph cube() {
  UndirectedGraph g(8);
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  return g;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<std::pair<ExceptionTag, UndirectedGraph>> raw;
  UndirectedGraph two_c4(8);
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i) two_c4.add_edge(base + i, base + (i + 1) % 4);
  raw.emplace_back(ExceptionTag::two_disjoint_c4, two_c4);
  raw.emplace_back(ExceptionTag::cube, cube());
  auto diag = cube();
  diag.add_edge(0, 7);
  diag.add_edge(1, 6);
  raw.emplace_back(ExceptionTag::cube_plus_two_diagonals, diag);
  auto k44 = complete_bipartite(4, 4);
  raw.emplace_back(ExceptionTag::k44, k44);
  auto k44e = k44;
  k44e.remove_edge(0, 4);
  raw.emplace_back(ExceptionTag::k44_minus_edge, k44e);
  // Sides {0..3} with degrees (2,2,4,4) and {4..7} all of degree 3.
  UndirectedGraph sub(8);
  for (int b = 4; b < 8; ++b) {
    sub.add_edge(2, b);
    sub.add_edge(3, b);
  }
  sub.add_edge(0, 4);
  sub.add_edge(0, 5);
  sub.add_edge(1, 6);
  sub.add_edge(1, 7);
  raw.emplace_back(ExceptionTag::k44_subgraph_2244_3333, sub);
  std::vector<CatalogEntry> out;
  for (auto& [tag, g] : raw) out.push_back({tag, g, canonical_form(g).encoding});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& exception_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

std::optional<ExceptionTag> match_exception(const UndirectedGraph& g) {
  if (g.order() != 8) return std::nullopt;
  auto id = canonical_form(g).encoding;
  for (const auto& e : exception_catalog())
    if (e.graph6 == id) return e.tag;
  return std::nullopt;
}

namespace {

void require_oriented_triangle_free(const Digraph& d, const char* what) {
  if (!d.is_oriented()) throw InvalidArgument(std::string(what) + ": digraph has a digon");
  if (!is_triangle_free(underlying_graph(d)))
    throw InvalidArgument(std::string(what) + ": underlying graph has a triangle");
}

std::optional<Arc> covering_arc(const std::array<Mask, 64>& out, int n, const std::vector<Arc>& arcs) {
  Mask all = internal::all(n);
  for (auto [u, v] : arcs)
    if (acyclic_on(out, all & ~bit(u) & ~bit(v))) return Arc{u, v};
  return std::nullopt;
}

}  // namespace

OrderEightResult classify_order_eight(const Digraph& d) {
  if (d.order() != 8) throw InvalidArgument("classify_order_eight: order must be 8");
  require_oriented_triangle_free(d, "classify_order_eight");
  OrderEightResult r;
  auto arcs = d.arcs();
  if (arcs.empty()) {
    r.kind = OrderEightResult::Kind::acyclic;
    return r;
  }
  if (auto a = covering_arc(d.out_masks(), 8, arcs)) {
    r.kind = OrderEightResult::Kind::witness;
    r.arc = *a;
    return r;
  }
  if (auto t = match_exception(underlying_graph(d))) {
    r.kind = OrderEightResult::Kind::exception;
    r.tag = t;
    return r;
  }
  throw Error(Errc::internal, "classify_order_eight: no covering arc and not a catalog graph: " +
                                  encode_digraph6(d));
}

OrderEightCounts order_eight_counts() {
  OrderEightCounts c;
  auto graphs = enumerate_triangle_free(8, 2);
  c.graphs = static_cast<int>(graphs.size());
  c.all_in_catalog = true;
  for (const auto& eg : graphs) {
    const auto& g = eg.graph;
    auto edges = g.edges();
    bool filtered = false;
    for (auto [u, v] : edges) {
      auto rest = g.vertices();
      rest.erase(u);
      rest.erase(v);
      if (is_forest(g.induced(rest))) {
        filtered = true;
        break;
      }
    }
    if (filtered) continue;
    ++c.survivors;
    auto tag = match_exception(g);
    std::string tag_name = tag ? to_string(*tag) : "none";
    std::unordered_set<std::string> classes;
    std::uint64_t raw = 0;
    int m = static_cast<int>(edges.size());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      std::array<Mask, 64> out{}, in{};
      std::vector<Arc> arcs(m);
      for (int i = 0; i < m; ++i) {
        auto [u, v] = edges[i];
        if ((bits >> i) & 1) std::swap(u, v);
        out[u] |= bit(v);
        in[v] |= bit(u);
        arcs[i] = {u, v};
      }
      ++c.orientations;
      if (covering_arc(out, 8, arcs)) continue;
      ++raw;
      auto canon = internal::canonical_label(8, out, in);
      classes.insert(std::string(reinterpret_cast<const char*>(canon.cert.data()), 8 * sizeof(Mask)));
    }
    if (raw > 0) {
      ++c.exceptional_graphs;
      if (!tag) c.all_in_catalog = false;
      c.exceptional_raw += raw;
      c.exceptional_classes += classes.size();
      c.raw_by_tag[tag_name] += raw;
      c.classes_by_tag[tag_name] += classes.size();
    }
  }
  return c;
}

SmallWitnessReport verify_small_witnesses(int max_order) {
  if (max_order > kEnumerationMaxVertices) throw LimitExceeded("verify_small_witnesses: order too large");
  SmallWitnessReport rep;
  rep.max_order = max_order;
  for (int n = 1; n <= max_order; ++n) {
    for (const auto& eg : enumerate_triangle_free(n, 2)) {
      auto edges = eg.graph.edges();
      int m = static_cast<int>(edges.size());
      if (m > 62) throw LimitExceeded("verify_small_witnesses: too many edges");
      Mask all = internal::all(n);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        std::array<Mask, 64> out{}, in{};
        for (int i = 0; i < m; ++i) {
          auto [u, v] = edges[i];
          if ((bits >> i) & 1) std::swap(u, v);
          out[u] |= bit(v);
          in[v] |= bit(u);
        }
        bool ok_degrees = true;
        for (int v = 0; v < n && ok_degrees; ++v) ok_degrees = out[v] && in[v];
        if (!ok_degrees) continue;
        ++rep.digraphs;
        bool found = false;
        for (int v = 0; v < n && !found; ++v) found = acyclic_on(out, all & ~bit(v));
        for (int i = 0; i < m && !found; ++i)
          found = acyclic_on(out, all & ~bit(edges[i].first) & ~bit(edges[i].second));
        if (!found) {
          ++rep.failures;
          if (rep.failing.size() < 10) {
            Digraph d(n);
            for (int u = 0; u < n; ++u)
              for (Mask x = out[u]; x; x &= x - 1) d.add_arc(u, std::countr_zero(x));
            rep.failing.push_back(encode_digraph6(d));
          }
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Decompositions

const char* to_string(CoreRule r) {
  switch (r) {
    case CoreRule::small: return "core-at-most-7";
    case CoreRule::eight_not_exception: return "core-8-not-exception";
  }
  return "unknown";
}

VertexSet two_core(const UndirectedGraph& g, const VertexSet& within) {
  VertexSet core = within;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : core) {
      if ((g.neighbours(v) & core).size() < 2) {
        core.erase(v);
        changed = true;
      }
    }
  }
  return core;
}

Decomposition pivot_candidate(const UndirectedGraph& g, int pivot) {
  if (pivot < 0 || pivot >= g.order()) throw InvalidArgument("pivot_candidate: pivot out of range");
  Decomposition dec;
  dec.pivot = pivot;
  dec.y = g.neighbours(pivot);
  for (int v = 0; v < g.order(); ++v)
    if (v == pivot || g.neighbours(v).is_subset_of(dec.y)) dec.x.insert(v);
  dec.z = g.vertices() - dec.x - dec.y;
  dec.core = two_core(g, dec.z);
  dec.rule = dec.core.size() <= 7 ? CoreRule::small : CoreRule::eight_not_exception;
  return dec;
}

namespace {

bool independent(const UndirectedGraph& g, const VertexSet& s) {
  for (int v : s)
    if (g.neighbours(v).intersects(s)) return false;
  return true;
}

bool core_ok(const UndirectedGraph& g, const VertexSet& core) {
  if (core.size() <= 7) return true;
  if (core.size() != 8) return false;
  return !match_exception(g.induced(core)).has_value();
}

}  // namespace

DecompositionCheck validate_decomposition(const UndirectedGraph& g, const Decomposition& dec) {
  auto fail = [](const std::string& why) { return DecompositionCheck{false, why}; };
  auto v = g.vertices();
  if (!dec.x.is_subset_of(v) || !dec.y.is_subset_of(v) || !dec.z.is_subset_of(v))
    return fail("sets out of range");
  if (dec.x.intersects(dec.y) || dec.x.intersects(dec.z) || dec.y.intersects(dec.z))
    return fail("sets not disjoint");
  if ((dec.x | dec.y | dec.z) != v) return fail("sets do not cover V");
  if (!is_triangle_free(g)) return fail("graph has a triangle");
  if (g.order() > 0) {
    if (dec.pivot < 0 || dec.pivot >= g.order() || !dec.x.contains(dec.pivot)) return fail("pivot not in X");
    if (dec.y != g.neighbours(dec.pivot)) return fail("Y is not the neighbourhood of the pivot");
  }
  if (!independent(g, dec.x)) return fail("X not independent");
  if (!independent(g, dec.y)) return fail("Y not independent");
  for (int x : dec.x)
    if (g.neighbours(x).intersects(dec.z)) return fail("edge between X and Z");
  if (two_core(g, dec.z) != dec.core) return fail("core is not the 2-core of G[Z]");
  switch (dec.rule) {
    case CoreRule::small:
      if (dec.core.size() > 7) return fail("core larger than 7");
      break;
    case CoreRule::eight_not_exception:
      if (dec.core.size() != 8) return fail("core size is not 8");
      if (auto t = match_exception(g.induced(dec.core)))
        return fail(std::string("core is the exception ") + to_string(*t));
      break;
  }
  return {true, ""};
}

DecompositionSearch cut_decomposition_search(const UndirectedGraph& g) {
  if (!is_triangle_free(g)) throw InvalidArgument("cut_decomposition_search: graph has a triangle");
  DecompositionSearch s;
  int n = g.order();
  if (n == 0) {
    s.found = Decomposition{};
    return s;
  }
  std::vector<Decomposition> cands;
  for (int u = 0; u < n; ++u) cands.push_back(pivot_candidate(g, u));
  std::stable_sort(cands.begin(), cands.end(), [](const Decomposition& a, const Decomposition& b) {
    return a.x.size() + a.y.size() > b.x.size() + b.y.size();
  });
  s.best_pivot = cands.front().pivot;
  s.best_z = cands.front().z.size();
  s.best_core = cands.front().core.size();
  s.best_core_exception =
      s.best_core == 8 && match_exception(g.induced(cands.front().core)).has_value();
  for (auto& c : cands) {
    ++s.pivots_tried;
    if (core_ok(g, c.core)) {
      s.found = c;
      break;
    }
  }
  return s;
}

std::optional<Decomposition> find_decomposition(const UndirectedGraph& g) {
  return cut_decomposition_search(g).found;
}

Dicolouring decomposition_dicolouring(const UndirectedGraph& g, const Decomposition& dec,
                                      const Digraph& d) {
  if (underlying_graph(d) != g || !d.is_oriented())
    throw InvalidArgument("decomposition_dicolouring: digraph is not an orientation of the graph");
  Dicolouring c;
  c.k = 2;
  c.colour.assign(g.order(), 2);
  for (int y : dec.y) c.colour[y] = 1;
  auto core = dec.core.to_vector();
  auto sub = d.induced(dec.core);
  VertexSet part;
  if (sub.order() <= 7) {
    auto w = small_witness(sub);
    if (!w) throw Error(Errc::internal, "decomposition_dicolouring: no small witness for the core");
    part = *w;
  } else {
    auto r = classify_order_eight(sub);
    if (r.kind == OrderEightResult::Kind::exception)
      throw Error(Errc::internal, "decomposition_dicolouring: core is an exception");
    if (r.kind == OrderEightResult::Kind::witness) {
      part.insert(r.arc.first);
      part.insert(r.arc.second);
    }
  }
  for (int i : part) c.colour[core[i]] = 1;
  return c;
}

// ---------------------------------------------------------------------------
// Sweep

const char* to_string(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::filtered: return "filtered";
    case SweepVerdict::decomposed: return "decomposed";
    case SweepVerdict::exception: return "exception";
    case SweepVerdict::unresolved: return "unresolved";
  }
  return "unknown";
}

SweepRecord process_instance(const UndirectedGraph& g) {
  auto t0 = std::chrono::steady_clock::now();
  SweepRecord r;
  r.n = g.order();
  r.id = canonical_form(g).encoding;
  if (!is_triangle_free(g)) throw InvalidArgument("sweep: graph has a triangle: " + r.id);
  int n = g.order();
  r.filters.min_degree = n > 0 && g.min_degree() >= 4;
  r.filters.max_degree = n > 0 && g.max_degree() <= n - 9;
  r.filters.biconnected = is_biconnected(g);
  r.filters.arboricity = !arboricity_at_most(g, 2).feasible;
  if (r.filters.all()) {
    auto s = cut_decomposition_search(g);
    r.z_size = s.best_z;
    r.core_size = s.best_core;
    if (s.found) {
      r.verdict = SweepVerdict::decomposed;
      r.decomposition = s.found;
    } else {
      r.verdict = s.best_core_exception ? SweepVerdict::exception : SweepVerdict::unresolved;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

json set_json(const VertexSet& s) { return s.to_vector(); }

VertexSet set_from(const json& j) {
  VertexSet s;
  for (int v : j.get<std::vector<int>>()) {
    if (v < 0 || v >= kMaxVertices) throw InvalidArgument("vertex out of range in JSON");
    s.insert(v);
  }
  return s;
}

json dec_json(const Decomposition& d) {
  return json{{"pivot", d.pivot}, {"X", set_json(d.x)},   {"Y", set_json(d.y)},
              {"Z", set_json(d.z)}, {"core", set_json(d.core)}, {"rule", to_string(d.rule)}};
}

Decomposition dec_from(const json& j) {
  Decomposition d;
  d.pivot = j.at("pivot").get<int>();
  d.x = set_from(j.at("X"));
  d.y = set_from(j.at("Y"));
  d.z = set_from(j.at("Z"));
  d.core = set_from(j.at("core"));
  auto rule = j.at("rule").get<std::string>();
  if (rule == to_string(CoreRule::small))
    d.rule = CoreRule::small;
  else if (rule == to_string(CoreRule::eight_not_exception))
    d.rule = CoreRule::eight_not_exception;
  else
    throw InvalidArgument("unknown decomposition rule: " + rule);
  return d;
}

}  // namespace

std::string decomposition_to_json(const Decomposition& dec) { return dec_json(dec).dump(); }

Decomposition decomposition_from_json(const std::string& text) {
  try {
    return dec_from(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(ParseErrc::schema, std::string("decomposition JSON: ") + e.what());
  }
}

std::string to_json_line(const SweepRecord& r, bool timing) {
  json j{{"id", r.id},
         {"n", r.n},
         {"filters",
          {{"min_degree", r.filters.min_degree},
           {"max_degree", r.filters.max_degree},
           {"biconnected", r.filters.biconnected},
           {"arboricity", r.filters.arboricity}}},
         {"verdict", to_string(r.verdict)}};
  if (r.z_size >= 0) {
    j["z_size"] = r.z_size;
    j["core_size"] = r.core_size;
  }
  if (r.decomposition) j["decomposition"] = dec_json(*r.decomposition);
  if (timing) j["seconds"] = r.seconds;
  return j.dump();
}

SweepRecord sweep_record_from_json(const std::string& line) {
  try {
    auto j = json::parse(line);
    SweepRecord r;
    r.id = j.at("id").get<std::string>();
    r.n = j.at("n").get<int>();
    const auto& f = j.at("filters");
    r.filters.min_degree = f.at("min_degree").get<bool>();
    r.filters.max_degree = f.at("max_degree").get<bool>();
    r.filters.biconnected = f.at("biconnected").get<bool>();
    r.filters.arboricity = f.at("arboricity").get<bool>();
    auto v = j.at("verdict").get<std::string>();
    bool known = false;
    for (auto c : {SweepVerdict::filtered, SweepVerdict::decomposed, SweepVerdict::exception,
                   SweepVerdict::unresolved})
      if (v == to_string(c)) {
        r.verdict = c;
        known = true;
      }
    if (!known) throw InvalidArgument("unknown verdict " + v);
    if (j.contains("z_size")) {
      r.z_size = j.at("z_size").get<int>();
      r.core_size = j.at("core_size").get<int>();
    }
    if (j.contains("decomposition")) r.decomposition = dec_from(j.at("decomposition"));
    if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(ParseErrc::schema, std::string("sweep record: ") + e.what());
  }
}

namespace {

// Loads finished records and cuts a torn final line off the file so that
// appends start on a fresh line.
std::map<std::string, SweepRecord> load_checkpoint(const std::string& path) {
  std::map<std::string, SweepRecord> done;
  std::ifstream in(path, std::ios::binary);
  if (!in) return done;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  std::size_t pos = 0, good_end = 0;
  bool torn = false;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    bool last = nl == std::string::npos;
    std::string line = text.substr(pos, last ? std::string::npos : nl - pos);
    std::size_t next = last ? text.size() : nl + 1;
    if (!line.empty()) {
      try {
        SweepRecord r = sweep_record_from_json(line);
        done[r.id] = r;
      } catch (const ParseError&) {
        if (!last) throw;
        torn = true;
        break;
      }
    }
    if (last) {
      torn = true;  // complete record without its newline: rewrite it
      if (!line.empty()) done.erase(sweep_record_from_json(line).id);
      break;
    }
    pos = good_end = next;
  }
  if (torn) {
    std::error_code ec;
    std::filesystem::resize_file(path, good_end, ec);
    if (ec) throw IoError("cannot truncate checkpoint " + path + ": " + ec.message());
  }
  return done;
}

SweepSummary run_sweep(std::vector<UndirectedGraph> graphs, const SweepOptions& opts) {
  SweepSummary sum;
  std::map<std::string, SweepRecord> done;
  if (!opts.checkpoint.empty()) done = load_checkpoint(opts.checkpoint);

  // Canonical ids first, so duplicates and resumed instances drop out.
  std::vector<std::pair<std::string, UndirectedGraph>> pending;
  std::set<std::string> ids;
  std::vector<SweepRecord> records;
  for (auto& g : graphs) {
    auto f = canonical_form(g);
    if (!ids.insert(f.encoding).second) continue;
    if (auto it = done.find(f.encoding); it != done.end()) {
      records.push_back(it->second);
      ++sum.resumed;
      continue;
    }
    pending.emplace_back(f.encoding, g.relabelled(f.labelling));
  }
  std::sort(pending.begin(), pending.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::ofstream ckpt;
  if (!opts.checkpoint.empty()) {
    ckpt.open(opts.checkpoint, std::ios::app);
    if (!ckpt) throw IoError("cannot open checkpoint " + opts.checkpoint);
  }
  std::vector<SweepRecord> fresh(pending.size());
  std::mutex mu;
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < pending.size();) {
      try {
        fresh[i] = process_instance(pending[i].second);
        if (ckpt.is_open()) {
          std::lock_guard lock(mu);
          ckpt << to_json_line(fresh[i], opts.timing) << '\n';
          ckpt.flush();
          if (!ckpt) throw IoError("write failed on checkpoint " + opts.checkpoint);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& r : fresh) records.push_back(std::move(r));
  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.n, a.id) < std::tie(b.n, b.id);
  });
  for (const auto& r : records) {
    ++sum.instances[r.n];
    if (!r.filters.all()) continue;
    ++sum.survivors[r.n];
    auto& b = sum.buckets[r.n];
    if (r.z_size <= 7)
      ++b.z_at_most_7;
    else if (r.z_size == 8)
      ++b.z_eq_8;
    else
      ++b.z_other;
    switch (r.verdict) {
      case SweepVerdict::decomposed: ++sum.decomposed; break;
      case SweepVerdict::exception: ++sum.exceptions; break;
      case SweepVerdict::unresolved: ++sum.unresolved; break;
      case SweepVerdict::filtered: break;
    }
  }
  sum.records = std::move(records);
  return sum;
}

}  // namespace

SweepSummary sweep_generated(int n_min, int n_max, const SweepOptions& opts) {
  std::vector<UndirectedGraph> graphs;
  for (int n = std::max(0, n_min); n <= n_max; ++n) {
    EnumerationOptions eo;
    eo.n = n;
    eo.triangle_free = true;
    eo.threads = opts.threads;
    if (opts.apply_degree_filters) {
      eo.min_degree = 4;
      eo.max_degree = std::max(0, n - 9);
      if (n - 9 < 4) continue;
    }
    enumerate_graphs(eo, [&](const EnumeratedGraph& e) { graphs.push_back(e.graph); });
  }
  return run_sweep(std::move(graphs), opts);
}

SweepSummary sweep_graphs(const std::vector<UndirectedGraph>& graphs, const SweepOptions& opts) {
  return run_sweep(graphs, opts);
}

// ---------------------------------------------------------------------------
// Extremal scan

ExtremalResult extremal_scan(int n) {
  if (n < 1) throw InvalidArgument("extremal_scan: order must be positive");
  if (n > kExtremalMaxVertices)
    throw LimitExceeded("extremal_scan: order " + std::to_string(n) + " exceeds " +
                        std::to_string(kExtremalMaxVertices));
  ExtremalResult r;
  r.n = n;
  r.min_acyclic = n + 1;
  for (const auto& eg : enumerate_triangle_free(n, 0)) {
    const auto& g = eg.graph;
    std::unordered_set<std::string> seen;
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      auto d = orientation_from_bits(g, bits);
      auto c = internal::canonical_label(n, d.out_masks(), d.in_masks());
      if (!seen.insert(std::string(reinterpret_cast<const char*>(c.cert.data()), n * sizeof(Mask))).second)
        continue;
      ++r.digraphs;
      int a = acyclic_number(d).value;
      if (a < r.min_acyclic) {
        r.min_acyclic = a;
        r.min_acyclic_witness = d;
      }
      int chi = dichromatic_number(d).value;
      if (chi > r.max_dichromatic) {
        r.max_dichromatic = chi;
        r.max_dichromatic_witness = d;
      }
    }
  }
  return r;
}

}  // namespace dicol
