#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dicol/dicol.h"

namespace {

using json = nlohmann::json;

enum Exit { kDecided = 0, kRefuted = 1, kUsage = 2, kBudget = 3 };

struct GraphDeleter {
  void operator()(dicol_graph* g) const { dicol_graph_free(g); }
};
struct DigraphDeleter {
  void operator()(dicol_digraph* d) const { dicol_digraph_free(d); }
};
using GraphPtr = std::unique_ptr<dicol_graph, GraphDeleter>;
using DigraphPtr = std::unique_ptr<dicol_digraph, DigraphDeleter>;

struct Failure {
  dicol_status status;
  std::string message;
};

void check(dicol_status s) {
  if (s != DICOL_OK) throw Failure{s, dicol_last_error()};
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  dicol_string_free(s);
  return out;
}

struct Options {
  std::optional<int> k;
  uint64_t budget = 10'000'000'000ULL;
  uint64_t seed = 1;
  int threads = 0;
  std::string checkpoint;
  std::string format = "text";
  std::string input;
  std::string output;
  std::string certificates;
  std::vector<std::string> named;
  std::vector<std::string> instances;
  bool timing = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Failure{DICOL_ERR_IO, "cannot open " + path + " for writing"};
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

class CertificateWriter {
 public:
  explicit CertificateWriter(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Failure{DICOL_ERR_IO, "cannot open " + path + " for writing"};
    }
  }
  static void sink(const char* line, void* ctx) {
    auto* self = static_cast<CertificateWriter*>(ctx);
    ++self->count_;
    if (self->file_.is_open()) self->file_ << line << '\n';
  }
  dicol_line_sink fn() { return &CertificateWriter::sink; }
  std::size_t count() const { return count_; }
  bool saving() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::size_t count_ = 0;
};

struct Instance {
  std::string label;
  bool directed = true;
  std::string encoding;
};

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

bool looks_directed(const std::string& enc) { return !enc.empty() && enc[0] == '&'; }

std::vector<Instance> gather(const Options& o) {
  std::vector<Instance> out;
  for (const auto& name : o.named) {
    dicol_digraph* d = nullptr;
    if (dicol_digraph_named(name.c_str(), &d) == DICOL_OK) {
      DigraphPtr hold(d);
      char* enc = nullptr;
      check(dicol_digraph_to_digraph6(d, &enc));
      out.push_back({name, true, take(enc)});
      continue;
    }
    dicol_graph* g = nullptr;
    check(dicol_graph_named(name.c_str(), &g));
    GraphPtr hold(g);
    char* enc = nullptr;
    check(dicol_graph_to_graph6(g, &enc));
    out.push_back({name, false, take(enc)});
  }
  for (const auto& s : o.instances) {
    auto t = trim(s);
    out.push_back({t, looks_directed(t), t});
  }
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw Failure{DICOL_ERR_IO, "cannot open " + o.input};
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line == ">>graph6<<" || line == ">>digraph6<<") continue;
      out.push_back({line, looks_directed(line), line});
    }
  }
  if (out.empty()) throw Failure{DICOL_ERR_INVALID_ARGUMENT, "no instance given (use --named, --input or a positional encoding)"};
  return out;
}

DigraphPtr load_digraph(const Instance& in) {
  if (!in.directed) throw Failure{DICOL_ERR_INVALID_ARGUMENT, in.label + ": expected a digraph6 instance"};
  dicol_digraph* d = nullptr;
  check(dicol_digraph_from_digraph6(in.encoding.c_str(), &d));
  return DigraphPtr(d);
}

GraphPtr load_graph(const Instance& in) {
  if (in.directed) throw Failure{DICOL_ERR_INVALID_ARGUMENT, in.label + ": expected a graph6 instance"};
  dicol_graph* g = nullptr;
  check(dicol_graph_from_graph6(in.encoding.c_str(), &g));
  return GraphPtr(g);
}

int worst(int a, int b) {
  auto rank = [](int c) { return c == kUsage ? 3 : c == kBudget ? 2 : c == kRefuted ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

bool json_mode(const Options& o) { return o.format == "json"; }

std::string stats_text(const json& s) {
  return "search nodes: " + std::to_string(s.at("nodes").get<uint64_t>()) +
         ", max depth: " + std::to_string(s.at("max_depth").get<int>());
}

// Runs fn per instance; a budget overrun on one instance is reported and the rest continue.
template <class F>
int per_instance(const Options& o, Output& out, F&& fn) {
  int code = kDecided;
  for (const auto& in : gather(o)) {
    try {
      code = worst(code, fn(in));
    } catch (const Failure& f) {
      if (f.status != DICOL_ERR_BUDGET) throw;
      if (json_mode(o))
        out.out() << json{{"instance", in.encoding}, {"verdict", "budget-exceeded"}, {"message", f.message}}.dump() << '\n';
      else
        out.out() << in.label << ": budget exceeded (" << f.message << ")\n";
      code = worst(code, kBudget);
    }
  }
  return code;
}

int cmd_dichromatic(const Options& o) {
  Output out(o.output);
  CertificateWriter certs(o.certificates);
  return per_instance(o, out, [&](const Instance& in) {
    auto d = load_digraph(in);
    char* rep = nullptr;
    if (o.k) {
      int decision = 0;
      auto s = dicol_dicolourable(d.get(), *o.k, o.budget, &decision, &rep, certs.fn(), &certs);
      auto report = take(rep);
      if (s == DICOL_ERR_BUDGET) {
        auto j = json::parse(report);
        if (json_mode(o))
          out.out() << report << '\n';
        else
          out.out() << in.label << ": undecided, budget exceeded (" << stats_text(j.at("stats")) << ")\n";
        return static_cast<int>(kBudget);
      }
      check(s);
      auto j = json::parse(report);
      if (json_mode(o))
        out.out() << report << '\n';
      else
        out.out() << in.label << ": " << (decision ? "" : "not ") << *o.k << "-dicolourable ("
                  << stats_text(j.at("stats")) << ")\n";
      return decision ? static_cast<int>(kDecided) : static_cast<int>(kRefuted);
    }
    int value = 0;
    check(dicol_dichromatic(d.get(), o.budget, &value, &rep, certs.fn(), &certs));
    auto report = take(rep);
    if (json_mode(o))
      out.out() << report << '\n';
    else
      out.out() << in.label << ": χ⃗ = " << value << " (" << stats_text(json::parse(report).at("stats")) << ")\n";
    return static_cast<int>(kDecided);
  });
}

int cmd_acyclic(const Options& o) {
  Output out(o.output);
  CertificateWriter certs(o.certificates);
  return per_instance(o, out, [&](const Instance& in) {
    auto d = load_digraph(in);
    char* rep = nullptr;
    int value = 0;
    check(dicol_acyclic(d.get(), o.budget, &value, &rep, certs.fn(), &certs));
    auto report = take(rep);
    if (json_mode(o)) {
      out.out() << report << '\n';
    } else {
      auto j = json::parse(report);
      out.out() << in.label << ": α⃗ = " << value << ", witness " << j.at("witness").dump() << '\n';
    }
    return static_cast<int>(kDecided);
  });
}

int cmd_dicritical(const Options& o) {
  Output out(o.output);
  CertificateWriter certs(o.certificates);
  int k = o.k.value_or(3);
  return per_instance(o, out, [&](const Instance& in) {
    auto d = load_digraph(in);
    char* rep = nullptr;
    int decision = 0;
    check(dicol_dicritical(d.get(), k, o.budget, &decision, &rep, certs.fn(), &certs));
    auto report = take(rep);
    if (json_mode(o)) {
      out.out() << report << '\n';
    } else {
      auto j = json::parse(report);
      out.out() << in.label << ": " << k << "-dicritical: " << (decision ? "yes" : "no");
      if (!j.at("not_below_k").get<bool>()) out.out() << " (" << k - 1 << "-dicolourable)";
      if (!j.at("k_dicolourable").get<bool>()) out.out() << " (not " << k << "-dicolourable)";
      if (!j.at("failing_vertices").empty()) out.out() << " failing vertices " << j.at("failing_vertices").dump();
      if (!j.at("failing_arcs").empty()) out.out() << " failing arcs " << j.at("failing_arcs").dump();
      out.out() << '\n';
    }
    return decision ? static_cast<int>(kDecided) : static_cast<int>(kRefuted);
  });
}

int cmd_blowup(const Options& o, int m) {
  Output out(o.output);
  return per_instance(o, out, [&](const Instance& in) {
    auto d = load_digraph(in);
    dicol_digraph* b = nullptr;
    check(dicol_backward_blowup(d.get(), m, &b));
    DigraphPtr hold(b);
    char* enc = nullptr;
    check(dicol_digraph_to_digraph6(b, &enc));
    auto e = take(enc);
    if (json_mode(o)) {
      int n = 0, arcs = 0;
      check(dicol_digraph_order(b, &n));
      check(dicol_digraph_arc_count(b, &arcs));
      out.out() << json{{"instance", in.encoding}, {"m", m}, {"blowup", e}, {"order", n}, {"arcs", arcs}}.dump() << '\n';
    } else {
      out.out() << e << '\n';
    }
    return static_cast<int>(kDecided);
  });
}

int cmd_verify_d25(const Options& o) {
  Output out(o.output);
  CertificateWriter certs(o.certificates);
  char* rep = nullptr;
  int decision = 0;
  auto s = dicol_verify_d25(o.budget, &decision, &rep, certs.fn(), &certs);
  auto report = take(rep);
  if (s == DICOL_ERR_BUDGET) {
    out.out() << (json_mode(o) ? report : "budget exceeded: " + std::string(dicol_last_error())) << '\n';
    return kBudget;
  }
  check(s);
  auto j = json::parse(report);
  if (json_mode(o)) {
    out.out() << report << '\n';
  } else {
    const auto& crit = j.at("dicritical");
    out.out() << "χ⃗ = " << j.at("dichromatic_number").get<int>()
              << ", 3-dicritical: " << (crit.at("critical").get<bool>() ? "yes" : "no") << '\n';
    out.out() << "order " << j.at("order") << ", arcs " << j.at("arcs") << ", oriented "
              << (j.at("oriented").get<bool>() ? "yes" : "no") << ", triangle-free "
              << (j.at("triangle_free").get<bool>() ? "yes" : "no") << '\n';
    out.out() << "not 2-dicolourable (" << stats_text(j.at("refusal")) << ")\n";
    out.out() << crit.at("vertex_deletions") << " vertex deletions and " << crit.at("arc_deletions")
              << " arc deletions checked\n";
    if (certs.saving())
      out.out() << certs.count() << " certificates written to " << o.certificates << '\n';
    else
      out.out() << certs.count() << " certificates produced (save them with --certificates FILE)\n";
  }
  return decision ? kDecided : kRefuted;
}

int cmd_order(const Options& o, bool exact) {
  Output out(o.output);
  CertificateWriter certs(o.certificates);
  return per_instance(o, out, [&](const Instance& in) {
    auto d = load_digraph(in);
    char* rep = nullptr;
    check(dicol_order(d.get(), exact ? 1 : 0, &rep, certs.fn(), &certs));
    auto report = take(rep);
    auto j = json::parse(report);
    if (json_mode(o)) {
      out.out() << report << '\n';
    } else {
      out.out() << in.label << ": order " << j.at("halving_order").dump() << ", backedge graph has "
                << j.at("backedge_edges") << " edges, max degree " << j.at("backedge_max_degree")
                << ", chromatic number " << j.at("backedge_chromatic");
      if (exact) out.out() << "; min over orders = " << j.at("dichromatic_via_orders");
      out.out() << '\n';
    }
    return j.at("half_degree_bound").get<bool>() ? static_cast<int>(kDecided) : static_cast<int>(kRefuted);
  });
}

int cmd_linforest(const Options& o) {
  Output out(o.output);
  CertificateWriter certs(o.certificates);
  return per_instance(o, out, [&](const Instance& in) {
    char* rep = nullptr;
    int value = 0;
    if (in.directed) {
      auto d = load_digraph(in);
      check(dicol_linforest_digraph(d.get(), o.budget, &value, &rep, certs.fn(), &certs));
    } else {
      auto g = load_graph(in);
      check(dicol_linforest_graph(g.get(), o.budget, &value, &rep));
    }
    auto report = take(rep);
    if (json_mode(o)) {
      out.out() << report << '\n';
    } else if (in.directed) {
      out.out() << in.label << ": ℓ⃗ = " << value << '\n';
    } else {
      auto j = json::parse(report);
      out.out() << in.label << ": min over orientations of ℓ⃗ = " << value << " (n − α = "
                << j.at("order").get<int>() - j.at("independence_number").get<int>() << "), attained by "
                << j.at("orientation").get<std::string>() << '\n';
    }
    return static_cast<int>(kDecided);
  });
}

struct LineCollector {
  std::ostream* out;
  bool as_json;
  static void sink(const char* line, void* ctx) {
    auto* self = static_cast<LineCollector*>(ctx);
    if (self->as_json)
      *self->out << json{{"graph6", line}}.dump() << '\n';
    else
      *self->out << line << '\n';
  }
};

int cmd_enumerate(const Options& o, int n, int min_degree, int max_degree, bool all_graphs) {
  Output out(o.output);
  LineCollector c{&out.out(), json_mode(o)};
  uint64_t count = 0;
  check(dicol_enumerate(n, min_degree, max_degree, all_graphs ? 0 : 1, o.threads, &LineCollector::sink, &c, &count));
  if (!o.output.empty() && !json_mode(o)) std::cout << count << " graphs written to " << o.output << '\n';
  return kDecided;
}

struct RecordWriter {
  std::ostream* out;
  static void sink(const char* line, void* ctx) { *static_cast<RecordWriter*>(ctx)->out << line << '\n'; }
};

int cmd_sweep(const Options& o, int n_min, int n_max) {
  Output out(o.output);
  RecordWriter w{&out.out()};
  bool records = json_mode(o) || !o.output.empty();
  uint64_t unresolved = 0;
  char* rep = nullptr;
  check(dicol_sweep(n_min, n_max, o.input.empty() ? nullptr : o.input.c_str(),
                    o.checkpoint.empty() ? nullptr : o.checkpoint.c_str(), o.threads, o.timing ? 1 : 0,
                    records ? &RecordWriter::sink : nullptr, &w, &unresolved, &rep));
  auto report = take(rep);
  auto j = json::parse(report);
  std::ostream& summary = json_mode(o) && o.output.empty() ? std::cerr : std::cout;
  if (json_mode(o) && !o.output.empty()) {
    std::cout << report << '\n';
  } else {
    for (const auto& row : j.at("per_order"))
      summary << "n = " << row.at("n") << ": " << row.at("instances") << " instances, " << row.at("survivors")
              << " pass the filters; 2-core of Z ≤ 7: " << row.at("z_at_most_7") << ", = 8: " << row.at("z_eq_8")
              << ", larger: " << row.at("z_other") << '\n';
    summary << "decomposed " << j.at("decomposed") << ", exceptions " << j.at("exceptions") << ", unresolved "
            << j.at("unresolved");
    if (j.at("resumed").get<uint64_t>()) summary << ", resumed " << j.at("resumed");
    summary << '\n';
    for (const auto& id : j.at("unresolved_ids")) summary << "  unresolved: " << id.get<std::string>() << '\n';
  }
  return unresolved ? kRefuted : kDecided;
}

int cmd_experiment(const Options& o, const std::string& kind, const std::string& params) {
  Output out(o.output);
  char* rep = nullptr;
  int decision = 0;
  check(dicol_experiment(kind.c_str(), params.c_str(), o.seed, o.threads, &decision, &rep));
  auto report = take(rep);
  out.out() << (json_mode(o) ? report : json::parse(report).dump(2)) << '\n';
  return decision ? kDecided : kRefuted;
}

int cmd_constants(const Options& o, double c0, double c1, double c2, double eps) {
  Output out(o.output);
  char* rep = nullptr;
  int decision = 0;
  check(dicol_constants(c0, c1, c2, eps, &decision, &rep));
  auto report = take(rep);
  if (json_mode(o)) {
    out.out() << report << '\n';
  } else {
    auto j = json::parse(report);
    char buf[256];
    for (const char* key : {"inequality1", "inequality2"}) {
      const auto& q = j.at(key);
      std::snprintf(buf, sizeof buf, "%s: lhs = %.10f, rhs = %.10f, margin = %.10f, %s\n", key,
                    q.at("lhs").get<double>(), q.at("rhs").get<double>(), q.at("margin").get<double>(),
                    q.at("holds").get<bool>() ? "holds" : "FAILS");
      out.out() << buf;
    }
  }
  return decision ? kDecided : kRefuted;
}

int cmd_extremal(const Options& o, int n) {
  Output out(o.output);
  char* rep = nullptr;
  check(dicol_extremal(n, &rep));
  auto report = take(rep);
  if (json_mode(o)) {
    out.out() << report << '\n';
  } else {
    auto j = json::parse(report);
    out.out() << "n = " << n << ": min α⃗ = " << j.at("min_acyclic_number") << " ("
              << j.at("min_acyclic_witness").get<std::string>() << "), max χ⃗ = " << j.at("max_dichromatic_number")
              << " (" << j.at("max_dichromatic_witness").get<std::string>() << "), " << j.at("digraphs")
              << " oriented triangle-free digraphs up to isomorphism\n";
  }
  return kDecided;
}

int cmd_verify(const Options& o, const std::string& path) {
  Output out(o.output);
  std::ifstream in(path);
  if (!in) throw Failure{DICOL_ERR_IO, "cannot open " + path};
  std::string line;
  std::size_t number = 0, total = 0, valid_count = 0, consistency_only = 0;
  int code = kDecided;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty()) continue;
    ++total;
    char* rep = nullptr;
    int valid = 0;
    auto s = dicol_verify_certificate(line.c_str(), &valid, &rep);
    auto report = take(rep);
    if (s != DICOL_OK) {
      out.out() << path << ":" << number << ": " << dicol_status_name(s) << ": " << dicol_last_error() << '\n';
      code = worst(code, kUsage);
      continue;
    }
    valid_count += valid;
    if (valid && !json::parse(report).at("rechecked").get<bool>()) ++consistency_only;
    if (json_mode(o)) out.out() << report << '\n';
    if (!valid) {
      if (!json_mode(o))
        out.out() << path << ":" << number << ": invalid: " << json::parse(report).at("reason").get<std::string>()
                  << '\n';
      code = worst(code, kRefuted);
    }
  }
  if (!json_mode(o)) {
    out.out() << valid_count << " of " << total << " certificates valid";
    if (consistency_only) out.out() << " (" << consistency_only << " search refusals checked for consistency only)";
    out.out() << '\n';
  }
  return code;
}

int default_threads() {
  unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dicolouring tools for oriented triangle-free graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dicol_version()));

  Options o;
  std::vector<CLI::Option*> thread_flags;
  auto common = [&](CLI::App* s, bool instances) {
    s->add_option("--budget", o.budget, "Search node budget per decision")->check(CLI::PositiveNumber);
    s->add_option("--seed", o.seed, "Random seed");
    thread_flags.push_back(s->add_option("--threads", o.threads, "Worker threads (default: DICOL_THREADS, then available parallelism)")
                               ->check(CLI::Range(1, 1024)));
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "g6", "d6"}));
    s->add_option("--output", o.output, "Write output to this file");
    if (instances) {
      s->add_option("--input", o.input, "File with one graph6/digraph6 instance per line");
      s->add_option("--named", o.named, "Named instance (d25, paley7, dcycle3, grotzsch, ...)");
      s->add_option("instances", o.instances, "Instances in graph6/digraph6");
      s->add_option("--certificates", o.certificates, "Write JSONL certificates to this file");
    }
  };

  auto* dichromatic = app.add_subcommand("dichromatic", "Dichromatic number, or k-dicolourability with --k");
  common(dichromatic, true);
  dichromatic->add_option("--k", o.k, "Decide k-dicolourability")->check(CLI::Range(1, 64));

  auto* acyclic = app.add_subcommand("acyclic", "Acyclic number with a witness set");
  common(acyclic, true);

  auto* dicritical = app.add_subcommand("dicritical", "Check k-dicriticality (default k = 3)");
  common(dicritical, true);
  dicritical->add_option("--k", o.k, "Dichromatic number to test")->check(CLI::Range(1, 64));

  int blow_m = 2;
  auto* blowup = app.add_subcommand("blowup", "Backward blow-up of a digraph");
  common(blowup, true);
  blowup->add_option("--m", blow_m, "Copies per vertex")->check(CLI::Range(1, 256));

  auto* verify_d25 = app.add_subcommand("verify-d25", "Verify the dichromatic number and 3-dicriticality of D25");
  common(verify_d25, false);
  verify_d25->add_option("--certificates", o.certificates, "Write JSONL certificates to this file");

  bool exact = false;
  auto* order = app.add_subcommand("order", "Degree-halving order and its backedge graph");
  common(order, true);
  order->add_flag("--exact", exact, "Also minimise the backedge chromatic number over all orders");

  auto* linforest = app.add_subcommand("linforest", "Directed linear forests");
  common(linforest, true);

  int en_n = 0, en_min = 0, en_max = -1;
  bool en_all = false;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate graphs up to isomorphism (triangle-free by default)");
  common(enumerate, false);
  enumerate->add_option("--n", en_n, "Order")->required()->check(CLI::Range(0, 20));
  enumerate->add_option("--min-degree", en_min, "Minimum degree")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--max-degree", en_max, "Maximum degree (-1 for none)");
  enumerate->add_flag("--all", en_all, "Include graphs with triangles");

  int sw_min = 0, sw_max = 0;
  auto* sweep = app.add_subcommand("sweep", "Decomposition sweep over filtered triangle-free graphs");
  common(sweep, false);
  sweep->add_option("--n-min", sw_min, "Smallest order");
  sweep->add_option("--n-max", sw_max, "Largest order");
  sweep->add_option("--input", o.input, "graph6 file to sweep instead of generating");
  sweep->add_option("--checkpoint", o.checkpoint, "JSONL checkpoint file (resumed if present)");
  sweep->add_flag("--timing", o.timing, "Record wall time per instance");

  std::string kind, params;
  auto* experiment = app.add_subcommand("experiment", "Run an experiment and print its report");
  common(experiment, false);
  experiment->add_option("kind", kind, "alpha, dsparse, chi-bound, small-witness, order-eight or tournaments")->required();
  experiment->add_option("--params", params, "Parameters as a JSON object");

  double c0 = 0.513, c1 = 3.43, c2 = 3.1, eps = 1e-4;
  auto* constants = app.add_subcommand("constants", "Check the local lemma inequalities");
  common(constants, false);
  constants->add_option("--c0", c0);
  constants->add_option("--c1", c1);
  constants->add_option("--c2", c2);
  constants->add_option("--eps", eps);

  int ex_n = 5;
  auto* extremal = app.add_subcommand("extremal", "Extremal acyclic and dichromatic numbers at order n");
  common(extremal, false);
  extremal->add_option("--n", ex_n, "Order")->check(CLI::Range(1, 7));

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Re-check a JSONL certificate file");
  common(verify, false);
  verify->add_option("file", cert_path, "Certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  bool flag_given = std::any_of(thread_flags.begin(), thread_flags.end(), [](CLI::Option* f) { return f->count() > 0; });
  if (!flag_given) {
    if (const char* env = std::getenv("DICOL_THREADS")) {
      char* end = nullptr;
      long t = std::strtol(env, &end, 10);
      if (*env == '\0' || *end != '\0' || t < 1 || t > 1024) {
        std::cerr << "DICOL_THREADS: expected an integer in [1, 1024], got '" << env << "'\n";
        return kUsage;
      }
      o.threads = static_cast<int>(t);
    } else {
      o.threads = default_threads();
    }
  }

  try {
    if (*dichromatic) return cmd_dichromatic(o);
    if (*acyclic) return cmd_acyclic(o);
    if (*dicritical) return cmd_dicritical(o);
    if (*blowup) return cmd_blowup(o, blow_m);
    if (*verify_d25) return cmd_verify_d25(o);
    if (*order) return cmd_order(o, exact);
    if (*linforest) return cmd_linforest(o);
    if (*enumerate) return cmd_enumerate(o, en_n, en_min, en_max, en_all);
    if (*sweep) {
      if (o.input.empty() && (sw_min < 1 || sw_max < sw_min)) throw Failure{DICOL_ERR_INVALID_ARGUMENT, "sweep needs --input or 1 <= --n-min <= --n-max"};
      return cmd_sweep(o, sw_min, sw_max);
    }
    if (*experiment) return cmd_experiment(o, kind, params);
    if (*constants) return cmd_constants(o, c0, c1, c2, eps);
    if (*extremal) return cmd_extremal(o, ex_n);
    if (*verify) return cmd_verify(o, cert_path);
  } catch (const Failure& f) {
    std::cerr << "dicol: " << dicol_status_name(f.status) << ": " << f.message << '\n';
    return f.status == DICOL_ERR_BUDGET ? kBudget : kUsage;
  }
  return kUsage;
}
