#include "geodetic/cut_analysis.hpp"

#include <algorithm>
#include <set>

#include "geodetic/geodesy.hpp"
#include "geodetic/graph6.hpp"
#include "geodetic/parallel.hpp"

namespace geodetic {

std::optional<TwoCut> min_distance_two_cut(const Graph& g) {
  std::optional<TwoCut> best;
  for (const TwoCut& c : enumerate_two_cuts(g)) {
    if (!best || c.distance < best->distance) best = c;  // lexicographic tie-break
  }
  return best;
}

namespace {

// lexicographically least shortest x..y path
std::vector<int> lex_least_geodesic(const Graph& g, int x, int y) {
  BfsResult fx = bfs_layers(g, x);
  BfsResult fy = bfs_layers(g, y);
  const int d = fx.dist[y];
  std::vector<int> path{x};
  int cur = x;
  while (cur != y) {
    for (int w : g.neighbors(cur)) {
      if (fx.dist[w] == fx.dist[cur] + 1 && fy.dist[w] != kInf &&
          fx.dist[w] + fy.dist[w] == d) {
        path.push_back(w);
        cur = w;
        break;
      }
    }
  }
  return path;
}

}  // namespace

CutProfile cut_profile(const Graph& g, int x, int y) {
  const int n = g.vertex_count();
  if (x < 0 || y < 0 || x >= n || y >= n || x == y) throw GraphError("invalid cut pair");
  if (!is_connected(g)) throw DisconnectedError("cut_profile requires a connected graph");

  // components of g minus {x,y}
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != x && v != y) rest.push_back(v);
  auto [sub, ids] = induced_subgraph(g, rest);
  std::vector<std::vector<int>> comps = connected_components(sub);
  for (auto& c : comps)
    for (int& v : c) v = ids[v];
  if (comps.size() < 2) throw GraphError("{x,y} is not a 2-cut");

  CutProfile p;
  p.x = x;
  p.y = y;
  p.graph_hash = graph_hash(g);

  BfsResult fx = bfs_layers(g, x);
  BfsResult fy = bfs_layers(g, y);
  p.ell = fx.dist[y];
  p.non_geodetic_basis = fx.sigma[y] >= 2;
  p.geodesic_xy = lex_least_geodesic(g, x, y);

  // A1 = component holding the geodesic's interior (any component with the
  // smallest vertex when the geodesic has none); A2 = least of the others
  int a1 = -1;
  if (p.geodesic_xy.size() > 2) {
    int interior = p.geodesic_xy[1];
    for (size_t i = 0; i < comps.size(); ++i)
      if (std::binary_search(comps[i].begin(), comps[i].end(), interior))
        a1 = static_cast<int>(i);
  } else {
    a1 = 0;
  }
  std::vector<std::vector<int>> ordered;
  ordered.push_back(comps[a1]);
  for (size_t i = 0; i < comps.size(); ++i)
    if (static_cast<int>(i) != a1) ordered.push_back(comps[i]);
  p.components = std::move(ordered);

  const int ell = p.ell;
  p.phi.assign(n, std::nullopt);
  p.r_diag.assign(2 * ell + 1, {});
  p.l_diag.assign(2 * ell + 1, {});
  auto diff = [&](int v) { return fy.dist[v] - fx.dist[v]; };

  for (int v : p.components[0]) {
    p.phi[v] = std::make_pair(fx.dist[v], fy.dist[v]);
    p.r_diag[diff(v) + ell].push_back(v);
  }
  for (int v : p.components[1]) {
    p.phi[v] = std::make_pair(-fy.dist[v] + ell, -fx.dist[v] + ell);
    p.l_diag[diff(v) + ell].push_back(v);
  }
  // x and y carry both coordinates and sit on both extreme diagonals
  p.phi[x] = std::make_pair(0, ell);
  p.phi[y] = std::make_pair(ell, 0);
  p.r_diag[2 * ell].push_back(x);
  p.l_diag[2 * ell].push_back(x);
  p.r_diag[0].push_back(y);
  p.l_diag[0].push_back(y);
  for (auto& d : p.r_diag) std::sort(d.begin(), d.end());
  for (auto& d : p.l_diag) std::sort(d.begin(), d.end());
  return p;
}

bool LemmaCheckReport::all_hold() const {
  for (const auto& c : checks)
    if (c.status != LemmaStatus::holds) return false;
  return true;
}

const LemmaCheck& LemmaCheckReport::find(const std::string& lemma) const {
  for (const auto& c : checks)
    if (c.lemma == lemma) return c;
  throw GraphError("no such lemma check: " + lemma);
}

namespace {

void report(LemmaCheckReport& r, const std::string& lemma, bool holds,
            const std::string& witness) {
  r.checks.push_back({lemma, holds ? LemmaStatus::holds : LemmaStatus::violated,
                      holds ? "" : witness});
}

}  // namespace

LemmaCheckReport check_cut_lemmas(const Graph& g, const CutProfile& p) {
  if (graph_hash(g) != p.graph_hash) throw GraphError("stale profile: graph hash mismatch");
  LemmaCheckReport r;
  const int ell = p.ell;

  report(r, "two-components", p.components.size() == 2,
         std::to_string(p.components.size()) + " components");

  // geodesic containment: for u,v in one component, some geodesic stays in
  // A_i together with the x..y geodesic and the cut
  {
    bool ok = true;
    std::string w;
    std::set<int> pi(p.geodesic_xy.begin(), p.geodesic_xy.end());
    for (size_t i = 0; i < p.components.size() && ok; ++i) {
      std::vector<int> keep = p.components[i];
      keep.insert(keep.end(), pi.begin(), pi.end());
      auto [sub, ids] = induced_subgraph(g, keep);
      std::vector<int> where(g.vertex_count(), -1);
      for (size_t j = 0; j < ids.size(); ++j) where[ids[j]] = static_cast<int>(j);
      for (size_t a = 0; a < p.components[i].size() && ok; ++a) {
        int u = p.components[i][a];
        BfsResult in_sub = bfs_layers(sub, where[u]);
        BfsResult in_g = bfs_layers(g, u);
        for (size_t b = a + 1; b < p.components[i].size(); ++b) {
          int v = p.components[i][b];
          if (in_sub.dist[where[v]] != in_g.dist[v]) {
            ok = false;
            w = "pair (" + std::to_string(u) + "," + std::to_string(v) + ") in component " +
                std::to_string(i) + " has no geodesic inside it";
            break;
          }
        }
      }
    }
    report(r, "geodesic-containment", ok, w);
  }

  // antipodal diagonals: |j| < ell requires R_j or L_{-j} empty
  {
    bool ok = true;
    std::string w;
    for (int j = -ell + 1; j < ell && ok; ++j) {
      const auto& rj = p.r_diag[j + ell];
      const auto& lmj = p.l_diag[-j + ell];
      if (!rj.empty() && !lmj.empty()) {
        ok = false;
        w = "R_" + std::to_string(j) + " holds " + std::to_string(rj[0]) + " and L_" +
            std::to_string(-j) + " holds " + std::to_string(lmj[0]);
      }
    }
    report(r, "antipodal-emptiness", ok, w);
  }

  // neighbor jump: adjacent vertices on one side differ by at most 2
  // diagonals, and a jump of exactly 2 maps to an antidiagonal lattice step
  {
    bool ok = true;
    std::string w;
    auto side_index = [&](const std::vector<std::vector<int>>& diag, int v) {
      for (int j = 0; j <= 2 * ell; ++j)
        if (std::binary_search(diag[j].begin(), diag[j].end(), v)) return j - ell;
      return kInf;
    };
    for (auto [u, v] : g.edges()) {
      for (int side = 0; side < 2 && ok; ++side) {
        const auto& diag = side == 0 ? p.r_diag : p.l_diag;
        int ju = side_index(diag, u);
        int jv = side_index(diag, v);
        if (ju == kInf || jv == kInf) continue;
        if (std::abs(ju - jv) > 2) {
          ok = false;
          w = "edge (" + std::to_string(u) + "," + std::to_string(v) + ") jumps from diagonal " +
              std::to_string(ju) + " to " + std::to_string(jv);
        } else if (std::abs(ju - jv) == 2 && p.phi[u] && p.phi[v]) {
          auto [xu, yu] = *p.phi[u];
          auto [xv, yv] = *p.phi[v];
          if (!((std::abs(xu - xv) == 1) && (yu - yv) == -(xu - xv))) {
            ok = false;
            w = "edge (" + std::to_string(u) + "," + std::to_string(v) +
                ") with diagonal jump 2 is not an antidiagonal lattice step";
          }
        }
      }
    }
    report(r, "neighbor-jump", ok, w);
  }

  // phi contraction: adjacent mapped vertices land on equal or king-adjacent
  // lattice points
  {
    bool ok = true;
    std::string w;
    for (auto [u, v] : g.edges()) {
      if (!p.phi[u] || !p.phi[v]) continue;
      auto [xu, yu] = *p.phi[u];
      auto [xv, yv] = *p.phi[v];
      if (std::max(std::abs(xu - xv), std::abs(yu - yv)) > 1) {
        ok = false;
        w = "edge (" + std::to_string(u) + "," + std::to_string(v) + ") maps to (" +
            std::to_string(xu) + "," + std::to_string(yu) + ")-(" + std::to_string(xv) + "," +
            std::to_string(yv) + ")";
        break;
      }
    }
    report(r, "phi-contraction", ok, w);
  }

  // SE edges: R_j and R_{j-2} nonempty with R_{j-1} empty forces an edge
  // between them (same for L)
  {
    bool ok = true;
    std::string w;
    for (int side = 0; side < 2 && ok; ++side) {
      const auto& diag = side == 0 ? p.r_diag : p.l_diag;
      for (int j = -ell + 2; j <= ell && ok; ++j) {
        const auto& top = diag[j + ell];
        const auto& mid = diag[j - 1 + ell];
        const auto& bot = diag[j - 2 + ell];
        if (top.empty() || bot.empty() || !mid.empty()) continue;
        bool edge = false;
        for (int u : top)
          for (int v : bot)
            if (g.has_edge(u, v)) edge = true;
        if (!edge) {
          ok = false;
          w = std::string(side == 0 ? "R" : "L") + "_" + std::to_string(j) + " and " +
              (side == 0 ? "R" : "L") + "_" + std::to_string(j - 2) +
              " are nonempty with the diagonal between them empty, yet no edge joins them";
        }
      }
    }
    report(r, "SE-edge-existence", ok, w);
  }

  // find square, both orientations: empty diagonals next to an end of the
  // geodesic pin the extreme diagonal to the cut vertex alone
  {
    bool ok = true;
    std::string w;
    auto empty_at = [&](int j) {
      return j < -ell || j > ell || p.r_diag[j + ell].empty();
    };
    if (empty_at(ell - 1) && empty_at(ell - 3)) {
      if (p.r_diag[2 * ell].size() != 1) {
        ok = false;
        w = "R_(ell-1), R_(ell-3) empty but R_ell has " +
            std::to_string(p.r_diag[2 * ell].size()) + " vertices";
      } else {
        // x1 must be the only neighbor of x in A1 together with the geodesic
        int x1 = p.geodesic_xy.size() > 1 ? p.geodesic_xy[1] : p.y;
        std::set<int> a1(p.components[0].begin(), p.components[0].end());
        for (int v : p.geodesic_xy) a1.insert(v);
        for (int u : g.neighbors(p.x))
          if (a1.count(u) && u != x1) {
            ok = false;
            w = "x has neighbor " + std::to_string(u) + " besides x1 in A1 and the geodesic";
          }
      }
    }
    if (ok && empty_at(1 - ell) && empty_at(3 - ell)) {
      if (p.r_diag[0].size() != 1) {
        ok = false;
        w = "R_(1-ell), R_(3-ell) empty but R_(-ell) has " +
            std::to_string(p.r_diag[0].size()) + " vertices";
      } else {
        int xl = p.geodesic_xy.size() > 1 ? p.geodesic_xy[p.geodesic_xy.size() - 2] : p.x;
        std::set<int> a1(p.components[0].begin(), p.components[0].end());
        for (int v : p.geodesic_xy) a1.insert(v);
        for (int u : g.neighbors(p.y))
          if (a1.count(u) && u != xl) {
            ok = false;
            w = "y has neighbor " + std::to_string(u) +
                " besides x_(ell-1) in A1 and the geodesic";
          }
      }
    }
    report(r, "find-square", ok, w);
  }
  return r;
}

std::string diagonal_grid(const CutProfile& p) {
  std::string out = "  j |  R_j  L_j\n";
  for (int j = p.ell; j >= -p.ell; --j) {
    std::string js = std::to_string(j);
    out += std::string(js.size() < 3 ? 3 - js.size() : 0, ' ') + js + " | ";
    std::string rs = std::to_string(p.r_diag[j + p.ell].size());
    std::string ls = std::to_string(p.l_diag[j + p.ell].size());
    out += std::string(rs.size() < 4 ? 4 - rs.size() : 0, ' ') + rs;
    out += std::string(ls.size() < 5 ? 5 - ls.size() : 0, ' ') + ls + "\n";
  }
  return out;
}

Theorem1Survey theorem1_scan(GraphSource& source, int jobs) {
  Theorem1Survey survey;
  struct Item {
    SourcedGraph in;
  };
  struct Result {
    bool block_geodetic = false;
    int n = 0, kappa = 0, diameter = 0, girth = 0, min_deg = 0;
    bool counterexample = false;
    std::string g6;
  };
  auto work = [](const SourcedGraph& sg) {
    Result res;
    const Graph& g = sg.graph;
    res.n = g.vertex_count();
    if (res.n == 0 || !is_connected(g)) return res;
    res.min_deg = g.min_degree();
    res.kappa = vertex_connectivity(g);
    if (res.kappa < 2) return res;
    GeodeticVerdict verdict = is_geodetic_sigma(g);
    if (!verdict.geodetic) return res;
    GraphMetrics m = metrics(g);
    res.block_geodetic = true;
    res.diameter = m.diameter;
    res.girth = m.girth;
    if (res.kappa == 2 && res.min_deg >= 3) {
      res.counterexample = true;
      res.g6 = emit_graph6(g);
    }
    return res;
  };

  scan_ordered<SourcedGraph, Result>(
      [&]() { return source.next(); }, work,
      [&](Result res) {
        ++survey.graphs_seen;
        if (res.block_geodetic)
          ++survey.tally[{res.n, res.kappa, res.diameter, res.girth}];
        if (res.counterexample) survey.counterexamples.push_back(res.g6);
      },
      jobs);
  survey.skipped = source.skipped();
  return survey;
}

}  // namespace geodetic
