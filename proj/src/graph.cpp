#include "dicol/graph.hpp"

#include <algorithm>
#include <string>

#include "dicol/error.hpp"

namespace dicol {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw LimitExceeded("graph order " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxVertices) + "]");
}

void check_pair(int n, int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InvalidArgument("vertex index out of range");
  if (u == v) throw InvalidArgument("self-loops are not allowed");
}

}  // namespace

UndirectedGraph::UndirectedGraph(int n) : n_(n) {
  check_order(n);
  adj_.resize(n);
}

UndirectedGraph UndirectedGraph::from_edges(int n, std::span<const Edge> edges) {
  UndirectedGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int UndirectedGraph::size() const {
  int twice = 0;
  for (const auto& r : adj_) twice += r.size();
  return twice / 2;
}

void UndirectedGraph::add_edge(int u, int v) {
  check_pair(n_, u, v);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void UndirectedGraph::remove_edge(int u, int v) {
  check_pair(n_, u, v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

int UndirectedGraph::min_degree() const {
  int m = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
  return m;
}

int UndirectedGraph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

UndirectedGraph UndirectedGraph::induced(const VertexSet& s) const {
  std::vector<int> label(n_, -1);
  int k = 0;
  for (int v : s) label[v] = k++;
  UndirectedGraph h(k);
  for (int u : s)
    for (int v : adj_[u] & s)
      if (u < v) h.add_edge(label[u], label[v]);
  return h;
}

UndirectedGraph UndirectedGraph::without_vertex(int v) const {
  auto s = vertices();
  s.erase(v);
  return induced(s);
}

UndirectedGraph UndirectedGraph::relabelled(std::span<const int> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) throw InvalidArgument("relabelling size mismatch");
  UndirectedGraph h(n_);
  for (auto [u, v] : edges()) h.add_edge(new_label[u], new_label[v]);
  return h;
}

std::array<std::uint64_t, 64> UndirectedGraph::masks() const {
  std::array<std::uint64_t, 64> m{};
  for (int v = 0; v < std::min(n_, 64); ++v) m[v] = adj_[v].low_mask();
  return m;
}

bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
  return a.n_ == b.n_ && a.adj_ == b.adj_;
}

Digraph::Digraph(int n) : n_(n) {
  check_order(n);
  out_.resize(n);
  in_.resize(n);
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

int Digraph::arc_count() const {
  int m = 0;
  for (const auto& r : out_) m += r.size();
  return m;
}

void Digraph::add_arc(int u, int v) {
  check_pair(n_, u, v);
  out_[u].insert(v);
  in_[v].insert(u);
}

void Digraph::remove_arc(int u, int v) {
  check_pair(n_, u, v);
  out_[u].erase(v);
  in_[v].erase(u);
}

bool Digraph::is_oriented() const {
  for (int v = 0; v < n_; ++v)
    if (out_[v].intersects(in_[v])) return false;
  return true;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u)
    for (int v : out_[u]) out.emplace_back(u, v);
  return out;
}

Digraph Digraph::induced(const VertexSet& s) const {
  std::vector<int> label(n_, -1);
  int k = 0;
  for (int v : s) label[v] = k++;
  Digraph h(k);
  for (int u : s)
    for (int v : out_[u] & s) h.add_arc(label[u], label[v]);
  return h;
}

Digraph Digraph::without_vertex(int v) const {
  auto s = vertices();
  s.erase(v);
  return induced(s);
}

Digraph Digraph::without_arc(int u, int v) const {
  Digraph h = *this;
  h.remove_arc(u, v);
  return h;
}

Digraph Digraph::relabelled(std::span<const int> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) throw InvalidArgument("relabelling size mismatch");
  Digraph h(n_);
  for (auto [u, v] : arcs()) h.add_arc(new_label[u], new_label[v]);
  return h;
}

Digraph Digraph::converse() const {
  Digraph h(n_);
  for (auto [u, v] : arcs()) h.add_arc(v, u);
  return h;
}

std::array<std::uint64_t, 64> Digraph::out_masks() const {
  std::array<std::uint64_t, 64> m{};
  for (int v = 0; v < std::min(n_, 64); ++v) m[v] = out_[v].low_mask();
  return m;
}

std::array<std::uint64_t, 64> Digraph::in_masks() const {
  std::array<std::uint64_t, 64> m{};
  for (int v = 0; v < std::min(n_, 64); ++v) m[v] = in_[v].low_mask();
  return m;
}

bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.out_ == b.out_; }

DegreeProfile degree_profile(const UndirectedGraph& g) {
  DegreeProfile p;
  for (int v = 0; v < g.order(); ++v) {
    p.total.push_back(g.degree(v));
    p.in.push_back(g.degree(v));
    p.out.push_back(g.degree(v));
  }
  return p;
}

DegreeProfile degree_profile(const Digraph& d) {
  DegreeProfile p;
  for (int v = 0; v < d.order(); ++v) {
    p.in.push_back(d.in_degree(v));
    p.out.push_back(d.out_degree(v));
    p.total.push_back(d.in_degree(v) + d.out_degree(v));
  }
  return p;
}

Digraph orient_low_to_high(const UndirectedGraph& g) {
  Digraph d(g.order());
  for (auto [u, v] : g.edges()) d.add_arc(u, v);
  return d;
}

Digraph orientation_from_bits(const UndirectedGraph& g, std::uint64_t bits) {
  if (g.size() > 64) throw LimitExceeded("orientation_from_bits needs at most 64 edges");
  Digraph d(g.order());
  int i = 0;
  for (auto [u, v] : g.edges()) {
    if ((bits >> i) & 1ULL)
      d.add_arc(v, u);
    else
      d.add_arc(u, v);
    ++i;
  }
  return d;
}

Digraph bidirected(const UndirectedGraph& g) {
  Digraph d(g.order());
  for (auto [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

}  // namespace dicol
