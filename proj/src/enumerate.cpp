#include "geodetic/enumerate.hpp"

#include <algorithm>
#include <map>

#include "geodetic/graph6.hpp"

namespace geodetic {

namespace {

// stable 1-WL refinement; colors keep isomorphism-invariant values
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  while (true) {
    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      nb.reserve(g.degree(v));
      for (int u : g.neighbors(v)) nb.push_back(colors[u]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {{colors[v], std::move(nb)}, v};
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> fresh(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      fresh[sig[i].second] = c;
    }
    bool stable = true;
    {
      int old_count = 0;
      for (int v = 0; v < n; ++v) old_count = std::max(old_count, colors[v]);
      stable = c == old_count;
    }
    colors = std::move(fresh);
    if (stable) return colors;
  }
}

// upper-triangle bits of g relabeled by order, packed MSB-first so
// lexicographic block comparison equals bit-sequence comparison
std::vector<uint64_t> triangle_bits(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<uint64_t> bits((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.has_edge(order[i], order[j])) bits[k / 64] |= 1ull << (63 - k % 64);
  return bits;
}

struct CanonicalSearch {
  const Graph& g;
  std::optional<std::vector<uint64_t>> best_bits;
  std::vector<int> best_order;

  explicit CanonicalSearch(const Graph& graph) : g(graph) {}

  void descend(std::vector<int> colors) {
    colors = refine(g, colors);
    const int n = g.vertex_count();
    // first non-singleton cell by color value
    int target = -1;
    std::vector<int> count(n + 1, 0);
    for (int v = 0; v < n; ++v) ++count[colors[v]];
    for (int c = 0; c <= n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target == -1) {
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[colors[v]] = v;
      std::vector<uint64_t> bits = triangle_bits(g, order);
      if (!best_bits || bits < *best_bits) {
        best_bits = std::move(bits);
        best_order = std::move(order);
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n);
      for (int u = 0; u < n; ++u) next[u] = colors[u] * 2 + 1;
      next[v] -= 1;  // v now precedes the rest of its cell
      descend(std::move(next));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  CanonicalSearch search(g);
  search.descend(std::vector<int>(n, 0));
  return search.best_order;
}

std::string canonical_key(const Graph& g) {
  return emit_graph6(relabel(g, canonical_labeling(g)));
}

std::string canonical_graph6(const Graph& g) { return canonical_key(g); }

namespace detail {

std::vector<Graph> enumerate_unchecked(int n, const EnumerateConstraints& cons) {
  if (n < 1) throw GraphError("enumeration needs n >= 1");
  const int cap = cons.regular_degree.value_or(n - 1 > 0 ? n - 1 : 0);
  if (cons.regular_degree) {
    if (*cons.regular_degree < 0) throw GraphError("negative regular degree");
    if ((static_cast<int64_t>(n) * *cons.regular_degree) % 2 != 0) return {};
  }

  // canonical key -> graph6, one level at a time
  std::map<std::string, std::string> level;
  level[canonical_key(build_graph(1, {}))] = emit_graph6(build_graph(1, {}));

  for (int k = 1; k < n; ++k) {
    std::map<std::string, std::string> next;
    const int remaining_after = n - (k + 1);
    for (const auto& [key, g6] : level) {
      Graph base = parse_graph6(g6);
      for (uint32_t mask = 0; mask < (1u << k); ++mask) {
        int new_deg = __builtin_popcount(mask);
        if (cons.connected && mask == 0) continue;
        if (new_deg > cap) continue;
        bool ok = true;
        std::vector<std::pair<int, int>> edges(base.edges());
        for (int v = 0; v < k && ok; ++v) {
          int deg = base.degree(v) + ((mask >> v) & 1);
          if (deg > cap) ok = false;
          // every vertex must still be able to reach its degree targets
          if (cons.regular_degree && *cons.regular_degree - deg > remaining_after) ok = false;
          if (deg + remaining_after < cons.min_degree) ok = false;
          if ((mask >> v) & 1) edges.emplace_back(v, k);
        }
        if (!ok) continue;
        if (new_deg + remaining_after < cons.min_degree) continue;
        if (cons.regular_degree) {
          if (*cons.regular_degree - new_deg > remaining_after) continue;
          int64_t deficiency = 0;
          for (int v = 0; v < k; ++v)
            deficiency += *cons.regular_degree - (base.degree(v) + ((mask >> v) & 1));
          deficiency += *cons.regular_degree - new_deg;
          if (deficiency > static_cast<int64_t>(*cons.regular_degree) * remaining_after)
            continue;
        }
        Graph cand = build_graph(k + 1, edges);
        std::string ck = canonical_key(cand);
        if (!next.count(ck)) next[ck] = emit_graph6(cand);
      }
    }
    level = std::move(next);
  }

  std::vector<Graph> out;
  for (const auto& [key, g6] : level) {
    Graph g = parse_graph6(g6);
    if (cons.connected && !is_connected(g)) continue;
    if (g.min_degree() < cons.min_degree) continue;
    if (cons.regular_degree) {
      bool regular = true;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != *cons.regular_degree) regular = false;
      if (!regular) continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detail

std::vector<Graph> enumerate_graphs(int n, const EnumerateConstraints& constraints) {
  if (n > 10)
    throw GraphError("enumerator is capped at n = 10; ingest a graph6 corpus for larger n");
  return detail::enumerate_unchecked(n, constraints);
}

}  // namespace geodetic
