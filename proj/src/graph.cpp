#include "geodetic/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace geodetic {

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int d = degree(0);
  for (int v = 1; v < vertex_count(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  std::set<std::pair<int, int>> uniq;
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    uniq.emplace(u, v);
  }
  Graph g;
  g.adj_.assign(n, {});
  g.edges_.assign(uniq.begin(), uniq.end());
  g.edge_count_ = static_cast<int64_t>(g.edges_.size());
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

Graph with_tags(Graph g, std::vector<VertexTag> tags) {
  if (static_cast<int>(tags.size()) != g.vertex_count())
    throw GraphError("tag vector size mismatch");
  g.tags_ = std::move(tags);
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw GraphError("relabel order size mismatch");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1)
      throw GraphError("relabel order is not a permutation");
    pos[order[i]] = i;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
  Graph out = build_graph(n, edges);
  if (g.has_tags()) {
    std::vector<VertexTag> tags(n);
    for (int i = 0; i < n; ++i) tags[pos[i]] = g.tag(i);
    out = with_tags(std::move(out), std::move(tags));
  }
  return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> where(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) where[vs[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (int v : vs)
    for (int u : g.neighbors(v))
      if (u > v && where[u] >= 0) edges.emplace_back(where[v], where[u]);
  return {build_graph(static_cast<int>(vs.size()), edges), vs};
}

uint64_t graph_hash(const Graph& g) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(g.vertex_count()));
  for (auto [u, v] : g.edges()) {
    mix(static_cast<uint64_t>(u));
    mix(static_cast<uint64_t>(v));
  }
  return h;
}

BfsResult bfs_layers(const Graph& g, int source, uint64_t sigma_cap) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) throw GraphError("bfs source out of range");
  if (sigma_cap < 2) sigma_cap = 2;
  BfsResult r;
  r.dist.assign(n, kInf);
  r.sigma.assign(n, 0);
  r.parents.assign(n, {});
  r.dist[source] = 0;
  r.sigma[source] = 1;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (r.dist[w] == kInf) {
        r.dist[w] = r.dist[u] + 1;
        q.push(w);
      }
      if (r.dist[w] == r.dist[u] + 1) {
        uint64_t s = r.sigma[w] + r.sigma[u];
        r.sigma[w] = std::min(s, sigma_cap);
        r.parents[w].push_back(u);
      }
    }
  }
  return r;
}

DistanceMatrix all_pairs(const Graph& g, uint64_t sigma_cap) {
  const int n = g.vertex_count();
  DistanceMatrix m;
  m.dist.reserve(n);
  m.sigma.reserve(n);
  for (int v = 0; v < n; ++v) {
    BfsResult r = bfs_layers(g, v, sigma_cap);
    m.dist.push_back(std::move(r.dist));
    m.sigma.push_back(std::move(r.sigma));
  }
  return m;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  BfsResult r = bfs_layers(g, 0);
  for (int v = 0; v < n; ++v)
    if (r.dist[v] == kInf) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

// girth contribution of BFS from root: shortest cycle detected through
// non-tree edges; min over all roots is the exact girth.
int girth_from(const Graph& g, int root) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, kInf), parent(n, -1);
  std::queue<int> q;
  dist[root] = 0;
  q.push(root);
  int best = kInf;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        q.push(w);
      } else if (w != parent[u] && u != parent[w]) {
        int c = dist[u] + dist[w] + 1;
        if (best == kInf || c < best) best = c;
      }
    }
  }
  return best;
}

// Dinic max-flow on the split-vertex digraph; unit capacity through each
// vertex, effectively infinite along edges.
struct Dinic {
  struct Arc {
    int to, rev, cap;
  };
  std::vector<std::vector<Arc>> arcs;
  std::vector<int> level, it;

  explicit Dinic(int nodes) : arcs(nodes), level(nodes), it(nodes) {}

  void add(int a, int b, int cap) {
    arcs[a].push_back({b, static_cast<int>(arcs[b].size()), cap});
    arcs[b].push_back({a, static_cast<int>(arcs[a].size()) - 1, 0});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : arcs[u])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& i = it[u]; i < static_cast<int>(arcs[u].size()); ++i) {
      Arc& a = arcs[u][i];
      if (a.cap > 0 && level[a.to] == level[u] + 1) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          arcs[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  int maxflow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      int f;
      while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
    }
    return flow;
  }
};

// lambda(s,t) for non-adjacent s,t: min number of vertices whose removal
// separates them. Also extracts a minimum separating set.
std::pair<int, std::vector<int>> min_vertex_cut_pair(const Graph& g, int s, int t) {
  const int n = g.vertex_count();
  const int big = n + 1;
  Dinic d(2 * n);
  for (int v = 0; v < n; ++v) d.add(2 * v, 2 * v + 1, v == s || v == t ? big : 1);
  for (auto [u, v] : g.edges()) {
    d.add(2 * u + 1, 2 * v, big);
    d.add(2 * v + 1, 2 * u, big);
  }
  int flow = d.maxflow(2 * s + 1, 2 * t, big);
  // residual reachability from the source side; cut = split arcs crossing it
  std::vector<char> reach(2 * n, 0);
  std::queue<int> q;
  q.push(2 * s + 1);
  reach[2 * s + 1] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (const Dinic::Arc& a : d.arcs[u])
      if (a.cap > 0 && !reach[a.to]) {
        reach[a.to] = 1;
        q.push(a.to);
      }
  }
  std::vector<int> cut;
  for (int v = 0; v < n; ++v)
    if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
  return {flow, cut};
}

}  // namespace

ConnectivityResult vertex_connectivity_with_cut(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return {0, {}};
  if (!is_connected(g)) return {0, {}};
  // complete graph: kappa = n-1 by convention, no certificate cut exists
  bool complete = true;
  for (int v = 0; v < n && complete; ++v)
    if (g.degree(v) != n - 1) complete = false;
  if (complete) return {n - 1, {}};

  // Even-style pair selection around a minimum-degree vertex: every minimum
  // cut either separates v* from a non-neighbor or, if it contains v*,
  // separates two non-adjacent neighbors of v*.
  int vstar = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(vstar)) vstar = v;

  ConnectivityResult best{n, {}};
  auto consider = [&](int s, int t) {
    auto [k, cut] = min_vertex_cut_pair(g, s, t);
    if (k < best.connectivity) best = {k, std::move(cut)};
  };
  for (int t = 0; t < n; ++t)
    if (t != vstar && !g.has_edge(vstar, t)) consider(vstar, t);
  const auto& nb = g.neighbors(vstar);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j])) consider(nb[i], nb[j]);
  std::sort(best.cut.begin(), best.cut.end());
  return best;
}

int vertex_connectivity(const Graph& g) { return vertex_connectivity_with_cut(g).connectivity; }

GraphMetrics metrics(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw GraphError("metrics of empty graph");
  if (!is_connected(g)) throw DisconnectedError("metrics requires a connected graph");
  GraphMetrics m;
  m.min_degree = g.min_degree();
  int diam = 0, rad = kInf;
  for (int v = 0; v < n; ++v) {
    BfsResult r = bfs_layers(g, v);
    int ecc = 0;
    for (int u = 0; u < n; ++u) ecc = std::max(ecc, r.dist[u]);
    diam = std::max(diam, ecc);
    rad = (rad == kInf) ? ecc : std::min(rad, ecc);
  }
  m.diameter = diam;
  m.radius = rad;
  int girth = kInf;
  for (int v = 0; v < n; ++v) {
    int c = girth_from(g, v);
    if (c != kInf && (girth == kInf || c < girth)) girth = c;
  }
  m.girth = girth;
  m.connectivity = vertex_connectivity(g);
  return m;
}

BlockDecomposition biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  // iterative DFS; frames carry the neighbor cursor
  struct Frame {
    int v;
    size_t i;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      int v = f.v;
      if (f.i < g.neighbors(v).size()) {
        int w = g.neighbors(v)[f.i++];
        if (disc[w] == -1) {
          parent[w] = v;
          estack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.push_back({w, 0});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          estack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = parent[v];
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            if (p != root) is_cut[p] = 1;
            // pop the block's edges
            std::vector<int> verts;
            std::pair<int, int> top;
            do {
              top = estack.back();
              estack.pop_back();
              verts.push_back(top.first);
              verts.push_back(top.second);
            } while (top != std::make_pair(p, v));
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            out.blocks.push_back(std::move(verts));
          }
        }
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
    if (g.degree(root) == 0) out.blocks.push_back({root});  // isolated vertex
  }
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

std::vector<TwoCut> enumerate_two_cuts(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<TwoCut> cuts;
  if (n < 4) return cuts;  // removal must leave >= 2 vertices to disconnect
  std::vector<int> dist_from_x;
  for (int x = 0; x < n; ++x) {
    BfsResult bx = bfs_layers(g, x);
    for (int y = x + 1; y < n; ++y) {
      // BFS over g minus {x,y}
      std::vector<char> seen(n, 0);
      seen[x] = seen[y] = 1;
      int start = -1;
      for (int v = 0; v < n && start == -1; ++v)
        if (!seen[v]) start = v;
      if (start == -1) continue;
      std::queue<int> q;
      q.push(start);
      seen[start] = 1;
      int reached = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
          if (!seen[w]) {
            seen[w] = 1;
            ++reached;
            q.push(w);
          }
      }
      if (reached < n - 2) cuts.push_back({x, y, bx.dist[y]});
    }
  }
  return cuts;
}

}  // namespace geodetic
