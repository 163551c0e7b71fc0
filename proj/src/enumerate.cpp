#include "dicol/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "dicol/graph6.hpp"
#include "internal/canon_impl.hpp"
#include "internal/mask.hpp"

namespace dicol {

using internal::bit;
using internal::Mask;

namespace {

struct Node {
  int k = 0;
  std::array<Mask, 64> adj{};
};

class Generator {
 public:
  Generator(const EnumerationOptions& opts, const std::function<void(const EnumeratedGraph&)>& sink)
      : o_(opts), sink_(sink) {
    max_deg_ = o_.max_degree < 0 ? o_.n : o_.max_degree;
  }

  // Lower bound on degrees at level j implied by the final minimum degree.
  int lower(int j) const { return o_.min_degree - (o_.n - j); }

  // Children of `node` accepted by the canonical deletion rule, deduplicated.
  template <class F>
  void children(const Node& node, F&& on_child) const {
    int k = node.k;
    std::array<int, 64> deg{};
    Mask required = 0;
    for (int u = 0; u < k; ++u) {
      deg[u] = std::popcount(node.adj[u]);
      if (deg[u] < lower(k + 1)) required |= bit(u);
      if (deg[u] + 1 < lower(k + 1)) return;
    }
    Mask allowed = 0;
    for (int u = 0; u < k; ++u)
      if (deg[u] < max_deg_) allowed |= bit(u);
    if ((required & ~allowed) != 0) return;
    if (o_.triangle_free)
      for (int u = 0; u < k; ++u)
        if ((required & bit(u)) && (node.adj[u] & required)) return;

    std::unordered_set<std::string> seen;
    Node child = node;
    child.k = k + 1;
    auto visit = [&](Mask s) {
      int size = std::popcount(s);
      if (size < lower(k + 1) || size > max_deg_) return;
      for (int u = 0; u < k; ++u)
        if (size > deg[u] + static_cast<int>((s >> u) & 1)) return;  // new vertex must have minimum degree
      for (int u = 0; u < k; ++u) child.adj[u] = (s >> u) & 1 ? node.adj[u] | bit(k) : node.adj[u];
      child.adj[k] = s;
      auto c = internal::canonical_label(k + 1, child.adj, child.adj);
      int w = -1;
      int best = -1;
      std::array<int, 64> label{};
      for (int i = 0; i <= k; ++i) label[c.lab[i]] = i;
      for (int u = 0; u <= k; ++u)
        if (std::popcount(child.adj[u]) == size && label[u] > best) {
          best = label[u];
          w = u;
        }
      if (c.orbit[w] != c.orbit[k]) return;
      std::string key(reinterpret_cast<const char*>(c.cert.data()), sizeof(Mask) * (k + 1));
      if (!seen.insert(key).second) return;
      on_child(child, c);
    };
    // Subsets containing `required`, drawn from `allowed`, independent when
    // triangle-freeness is requested.
    std::vector<int> free;
    for (int u = 0; u < k; ++u)
      if ((allowed & bit(u)) && !(required & bit(u))) free.push_back(u);
    auto rec = [&](auto&& self, std::size_t i, Mask s) -> void {
      if (std::popcount(s) > max_deg_) return;
      if (i == free.size()) {
        visit(s);
        return;
      }
      self(self, i + 1, s);
      int u = free[i];
      if (o_.triangle_free && (node.adj[u] & s)) return;
      self(self, i + 1, s | bit(u));
    };
    rec(rec, 0, required);
  }

  void emit(const Node& node, const internal::CanonResult& c) {
    int n = node.k;
    UndirectedGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (c.cert[i] & bit(j)) g.add_edge(i, j);
    EnumeratedGraph e{g, encode_graph6(g)};
    std::lock_guard lock(mu_);
    ++count_;
    sink_(e);
  }

  void dfs(const Node& node) {
    if (node.k == o_.n) return;
    children(node, [&](const Node& child, const internal::CanonResult& c) {
      if (child.k == o_.n)
        emit(child, c);
      else
        dfs(child);
    });
  }

  std::uint64_t run() {
    if (o_.n == 0) {
      EnumeratedGraph e{UndirectedGraph(0), encode_graph6(UndirectedGraph(0))};
      sink_(e);
      return 1;
    }
    Node root;
    root.k = 1;
    if (o_.n == 1) {
      if (o_.min_degree <= 0) {
        emit(root, internal::canonical_label(1, root.adj, root.adj));
      }
      return count_;
    }
    if (lower(1) > 0) return 0;
    int threads = std::max(1, o_.threads);
    if (threads == 1) {
      dfs(root);
      return count_;
    }
    // Expand breadth-first until there is enough work to share.
    std::vector<Node> frontier{root};
    while (!frontier.empty() && frontier.front().k < o_.n - 1 &&
           frontier.size() < static_cast<std::size_t>(threads) * 32) {
      std::vector<Node> next;
      for (const auto& node : frontier)
        children(node, [&](const Node& child, const internal::CanonResult& c) {
          if (child.k == o_.n)
            emit(child, c);
          else
            next.push_back(child);
        });
      frontier = std::move(next);
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < frontier.size();) dfs(frontier[i]);
      });
    for (auto& th : pool) th.join();
    return count_;
  }

 private:
  EnumerationOptions o_;
  const std::function<void(const EnumeratedGraph&)>& sink_;
  int max_deg_;
  std::mutex mu_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t enumerate_graphs(const EnumerationOptions& opts,
                               const std::function<void(const EnumeratedGraph&)>& sink) {
  if (opts.n < 0) throw InvalidArgument("enumerate_graphs: negative order");
  if (opts.n > kEnumerationMaxVertices)
    throw LimitExceeded("enumerate_graphs: order " + std::to_string(opts.n) + " exceeds " +
                        std::to_string(kEnumerationMaxVertices));
  if (opts.n > 0 && opts.max_degree >= 0 && opts.min_degree > opts.max_degree) return 0;
  return Generator(opts, sink).run();
}

std::vector<EnumeratedGraph> enumerate_sorted(const EnumerationOptions& opts) {
  std::vector<EnumeratedGraph> out;
  enumerate_graphs(opts, [&](const EnumeratedGraph& e) { out.push_back(e); });
  std::sort(out.begin(), out.end(),
            [](const EnumeratedGraph& a, const EnumeratedGraph& b) { return a.graph6 < b.graph6; });
  return out;
}

std::vector<EnumeratedGraph> enumerate_triangle_free(int n, int min_degree, int threads) {
  EnumerationOptions o;
  o.n = n;
  o.min_degree = min_degree;
  o.triangle_free = true;
  o.threads = threads;
  return enumerate_sorted(o);
}

}  // namespace dicol
