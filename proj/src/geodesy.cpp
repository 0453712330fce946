#include "geodetic/geodesy.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace geodetic {

namespace {

// First two u->v geodesics in lexicographic order, via DFS over the
// shortest-path DAG restricted to vertices on some u-v geodesic.
std::pair<std::vector<int>, std::vector<int>> two_lex_geodesics(const Graph& g, int u, int v,
                                                                const std::vector<int>& du,
                                                                const std::vector<int>& dv) {
  const int d = du[v];
  std::vector<std::vector<int>> found;
  std::vector<int> path{u};
  auto on_path = [&](int w) { return du[w] != kInf && dv[w] != kInf && du[w] + dv[w] == d; };
  std::vector<std::pair<int, size_t>> stack{{u, 0}};
  while (!stack.empty() && found.size() < 2) {
    auto& [cur, idx] = stack.back();
    if (cur == v) {
      found.push_back(path);
      stack.pop_back();
      path.pop_back();
      continue;
    }
    const auto& nb = g.neighbors(cur);
    bool advanced = false;
    while (idx < nb.size()) {
      int w = nb[idx++];
      if (on_path(w) && du[w] == du[cur] + 1) {
        path.push_back(w);
        stack.push_back({w, 0});
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      stack.pop_back();
      path.pop_back();
    }
  }
  if (found.size() < 2) throw GraphError("internal: expected two geodesics");
  return {found[0], found[1]};
}

GeodeticWitness make_witness(const Graph& g, int u, int v, const std::vector<int>& du) {
  BfsResult rv = bfs_layers(g, v);
  auto [a, b] = two_lex_geodesics(g, u, v, du, rv.dist);
  GeodeticWitness w;
  w.u = u;
  w.v = v;
  w.path_a = a;
  w.path_b = b;
  w.closed_walk = a;
  for (size_t i = b.size() - 1; i >= 1; --i) w.closed_walk.push_back(b[i - 1]);
  w.closed_walk.pop_back();  // drop the repeated u
  return w;
}

}  // namespace

GeodeticVerdict is_geodetic_sigma(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw GraphError("empty graph");
  if (!is_connected(g)) throw DisconnectedError("is_geodetic_sigma requires a connected graph");
  for (int u = 0; u < n; ++u) {
    BfsResult r = bfs_layers(g, u);
    for (int v = u + 1; v < n; ++v) {
      if (r.sigma[v] >= 2) {
        GeodeticVerdict verdict;
        verdict.geodetic = false;
        verdict.witness = make_witness(g, u, v, r.dist);
        return verdict;
      }
    }
  }
  return {};
}

EvenCircuit even_circuit_from_witness(const Graph& g, const GeodeticWitness& w) {
  std::vector<int> a = w.path_a, b = w.path_b;
  // Shrink (a, b) until the two geodesics are internally disjoint. Every
  // shared internal vertex sits at the same position in both (both paths are
  // shortest), so cutting there yields a shorter pair of distinct geodesics.
  while (true) {
    size_t lo = 0;
    while (a[lo + 1] == b[lo + 1]) ++lo;
    size_t hi = a.size() - 1;
    while (a[hi - 1] == b[hi - 1]) --hi;
    a = std::vector<int>(a.begin() + lo, a.begin() + hi + 1);
    b = std::vector<int>(b.begin() + lo, b.begin() + hi + 1);
    std::set<int> inner_a(a.begin() + 1, a.end() - 1);
    size_t cut = 0;
    for (size_t i = 1; i + 1 < b.size(); ++i)
      if (inner_a.count(b[i])) {
        cut = i;
        break;
      }
    if (cut == 0) break;
    int shared = b[cut];
    size_t pos_a = std::find(a.begin(), a.end(), shared) - a.begin();
    a.resize(pos_a + 1);
    b.resize(cut + 1);
  }
  EvenCircuit c;
  c.circuit = a;
  c.antipodal_a = 0;
  c.antipodal_b = static_cast<int>(a.size()) - 1;
  for (size_t i = b.size() - 1; i >= 1; --i) c.circuit.push_back(b[i - 1]);
  c.circuit.pop_back();
  (void)g;
  return c;
}

VerticalProfile vertical_profile(const Graph& g, int root) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw GraphError("vertical_profile root out of range");
  if (!is_connected(g)) throw DisconnectedError("vertical_profile requires a connected graph");
  BfsResult r = bfs_layers(g, root);
  int maxd = 0;
  for (int v = 0; v < n; ++v) maxd = std::max(maxd, r.dist[v]);
  VerticalProfile p;
  p.root = root;
  p.heights.assign(maxd + 1, 0);
  p.spheres.assign(maxd + 1, 0);
  for (int v = 0; v < n; ++v) ++p.spheres[r.dist[v]];
  p.edge_class.resize(g.edges().size());
  for (size_t e = 0; e < g.edges().size(); ++e) {
    auto [x, y] = g.edges()[e];
    if (r.dist[x] == r.dist[y]) {
      p.edge_class[e] = EdgeClass::horizontal;
      ++p.horizontal_count;
    } else {
      p.edge_class[e] = EdgeClass::vertical;
      ++p.heights[std::max(r.dist[x], r.dist[y])];
    }
  }
  return p;
}

bool is_geodetic_vertical(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw GraphError("empty graph");
  if (!is_connected(g)) throw DisconnectedError("is_geodetic_vertical requires a connected graph");
  for (int root = 0; root < n; ++root) {
    BfsResult r = bfs_layers(g, root);
    int64_t vertical = 0;
    for (auto [x, y] : g.edges())
      if (r.dist[x] != r.dist[y]) ++vertical;
    if (vertical != n - 1) return false;
  }
  return true;
}

std::vector<int> geodesic(const Graph& g, int u, int v) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) throw GraphError("geodesic endpoint out of range");
  BfsResult r = bfs_layers(g, u);
  if (r.dist[v] == kInf) throw DisconnectedError("no path between the endpoints");
  if (r.sigma[v] >= 2) throw NonUniqueGeodesicError("shortest path is not unique");
  std::vector<int> path{v};
  int cur = v;
  while (cur != u) {
    cur = r.parents[cur][0];  // unique chain when sigma == 1
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

BlocksVerdict blocks_geodetic(const Graph& g) {
  BlocksVerdict out;
  BlockDecomposition dec = biconnected_blocks(g);
  for (const auto& block : dec.blocks) {
    auto [sub, ids] = induced_subgraph(g, block);
    BlockVerdict bv;
    bv.vertices = ids;
    bv.verdict = is_geodetic_sigma(sub);
    if (bv.verdict.witness) {
      GeodeticWitness& w = *bv.verdict.witness;
      w.u = ids[w.u];
      w.v = ids[w.v];
      for (int& x : w.path_a) x = ids[x];
      for (int& x : w.path_b) x = ids[x];
      for (int& x : w.closed_walk) x = ids[x];
    }
    out.geodetic = out.geodetic && bv.verdict.geodetic;
    out.blocks.push_back(std::move(bv));
  }
  return out;
}

int64_t WeightedGraph::weight(int u, int v) const {
  int e = graph.edge_index(u, v);
  if (e < 0) throw GraphError("weight of a non-edge");
  return weights[e];
}

SmoothResult smooth(const Graph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw DisconnectedError("smooth requires a connected graph");
  std::vector<int> branch;  // degree >= 3
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) <= 1)
      throw SmoothError("smoothing undefined with degree-" + std::to_string(g.degree(v)) +
                        " vertices");
    if (g.degree(v) >= 3) branch.push_back(v);
  }
  if (branch.empty()) throw SmoothError("graph is a cycle or path: no branch vertices");

  std::vector<int> new_id(n, -1);
  for (size_t i = 0; i < branch.size(); ++i) new_id[branch[i]] = static_cast<int>(i);

  std::map<std::pair<int, int>, int64_t> collapsed;
  std::vector<char> used(n, 0);  // chain interiors already consumed
  for (int b : branch) {
    for (int start : g.neighbors(b)) {
      if (new_id[start] >= 0) {
        // direct branch-branch edge, record once
        if (b < start) {
          auto key = std::make_pair(new_id[b], new_id[start]);
          if (collapsed.count(key))
            throw SmoothError("smoothing would create parallel edges");
          collapsed[key] = 1;
        }
        continue;
      }
      if (used[start]) continue;
      // walk the degree-2 chain away from b
      int prev = b, cur = start;
      int64_t len = 1;
      while (new_id[cur] < 0) {
        used[cur] = 1;
        int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      if (cur == b)
        throw SmoothError("cycle of degree-2 vertices attached at one branch vertex");
      auto key = std::minmax(new_id[b], new_id[cur]);
      if (collapsed.count({key.first, key.second}))
        throw SmoothError("smoothing would create parallel edges");
      collapsed[{key.first, key.second}] = len;
    }
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<int64_t> weights;
  for (const auto& [e, w] : collapsed) edges.push_back(e);
  SmoothResult res;
  res.weighted.graph = build_graph(static_cast<int>(branch.size()), edges);
  res.weighted.weights.resize(res.weighted.graph.edges().size());
  for (const auto& [e, w] : collapsed)
    res.weighted.weights[res.weighted.graph.edge_index(e.first, e.second)] = w;
  res.vertex_map = branch;
  return res;
}

namespace {

constexpr int64_t kNoDist = -1;

struct DijkstraCounts {
  std::vector<int64_t> dist;   // kNoDist where unreachable
  std::vector<uint64_t> count; // saturating at 2
};

// banned edge ids are skipped entirely
DijkstraCounts dijkstra_counts(const WeightedGraph& wg, int src, int ban1 = -1, int ban2 = -1) {
  const Graph& g = wg.graph;
  const int n = g.vertex_count();
  DijkstraCounts r;
  r.dist.assign(n, kNoDist);
  r.count.assign(n, 0);
  std::priority_queue<std::pair<int64_t, int>, std::vector<std::pair<int64_t, int>>,
                      std::greater<>>
      pq;
  std::vector<char> done(n, 0);
  r.dist[src] = 0;
  r.count[src] = 1;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (int v : g.neighbors(u)) {
      int e = g.edge_index(u, v);
      if (e == ban1 || e == ban2) continue;
      int64_t nd = d + wg.weights[e];
      if (r.dist[v] == kNoDist || nd < r.dist[v]) {
        r.dist[v] = nd;
        r.count[v] = r.count[u];
        pq.push({nd, v});
      } else if (nd == r.dist[v] && !done[v]) {
        r.count[v] = std::min<uint64_t>(2, r.count[v] + r.count[u]);
      }
    }
  }
  return r;
}

// >= 2 shortest routes among the given (length, count) candidates?
bool tied(std::initializer_list<std::pair<int64_t, uint64_t>> routes) {
  int64_t best = kNoDist;
  for (auto [d, c] : routes)
    if (d != kNoDist && (best == kNoDist || d < best)) best = d;
  if (best == kNoDist) return false;
  uint64_t total = 0;
  for (auto [d, c] : routes)
    if (d == best) total += c;
  return total >= 2;
}

int64_t plus(int64_t base, int64_t d) { return d == kNoDist ? kNoDist : base + d; }

}  // namespace

bool is_geodetic_weighted(const WeightedGraph& wg) {
  const Graph& g = wg.graph;
  const int n = g.vertex_count();
  for (int64_t w : wg.weights)
    if (w < 1) throw GraphError("edge weights must be positive");

  // vertex pairs
  for (int u = 0; u < n; ++u) {
    DijkstraCounts r = dijkstra_counts(wg, u);
    for (int v = u + 1; v < n; ++v)
      if (r.dist[v] != kNoDist && r.count[v] >= 2) return false;
  }

  const auto& edges = g.edges();
  // positions strictly inside a weight-w edge, against everything else
  for (size_t e = 0; e < edges.size(); ++e) {
    int64_t w = wg.weights[e];
    if (w < 2) continue;
    auto [a, b] = edges[e];
    DijkstraCounts fa = dijkstra_counts(wg, a, static_cast<int>(e));
    DijkstraCounts fb = dijkstra_counts(wg, b, static_cast<int>(e));

    // two interiors of the same edge: inner segment vs detour through both ends
    int64_t detour = fa.dist[b];  // a..b avoiding e
    if (detour != kNoDist) {
      // positions i<j tie iff j-i == i + detour + (w-j), i.e. 2(j-i) = detour+w
      if ((detour + w) % 2 == 0 && (detour + w) / 2 <= w - 2) return false;
      // detour strictly shorter than the inner segment, realized by >= 2 paths
      if (fa.count[b] >= 2 && 2 * (w - 2) > detour + w) return false;
    }

    // interior vs vertex
    for (int v = 0; v < n; ++v) {
      for (int64_t i = 1; i < w; ++i) {
        if (tied({{plus(i, fa.dist[v]), fa.count[v]},
                  {plus(w - i, fb.dist[v]), fb.count[v]}}))
          return false;
      }
    }

    // interior vs interior of a different edge
    for (size_t e2 = e + 1; e2 < edges.size(); ++e2) {
      int64_t w2 = wg.weights[e2];
      if (w2 < 2) continue;
      auto [a2, b2] = edges[e2];
      DijkstraCounts ga = dijkstra_counts(wg, a, static_cast<int>(e), static_cast<int>(e2));
      DijkstraCounts gb = dijkstra_counts(wg, b, static_cast<int>(e), static_cast<int>(e2));
      for (int64_t i = 1; i < w; ++i) {
        for (int64_t j = 1; j < w2; ++j) {
          if (tied({{plus(i + j, ga.dist[a2]), ga.count[a2]},
                    {plus(i + w2 - j, ga.dist[b2]), ga.count[b2]},
                    {plus(w - i + j, gb.dist[a2]), gb.count[a2]},
                    {plus(w - i + w2 - j, gb.dist[b2]), gb.count[b2]}}))
            return false;
        }
      }
    }
  }
  return true;
}

}  // namespace geodetic
