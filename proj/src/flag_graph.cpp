#include "geodetic/flag_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace geodetic {

LabeledGraph levi_graph(const IncidenceStructure& s) {
  const int np = s.point_count;
  const int nl = s.line_count();
  std::vector<std::pair<int, int>> edges;
  for (int l = 0; l < nl; ++l)
    for (int p : s.lines[l]) edges.emplace_back(p, np + l);
  LabeledGraph out;
  out.graph = build_graph(np + nl, edges);
  out.labels.resize(np + nl);
  std::vector<VertexTag> tags(np + nl);
  for (int p = 0; p < np; ++p) {
    out.labels[p] = {VertexTag::point, p, -1};
    tags[p] = VertexTag::point;
  }
  for (int l = 0; l < nl; ++l) {
    out.labels[np + l] = {VertexTag::line, -1, l};
    tags[np + l] = VertexTag::line;
  }
  out.graph = with_tags(std::move(out.graph), std::move(tags));
  return out;
}

int flag_vertex_of_point(const IncidenceStructure& s, int p) {
  (void)s;
  return p;
}

int flag_vertex_of_flag(const IncidenceStructure& s, int p, int line) {
  // flags sorted by (line, point): count flags of earlier lines, then rank
  int idx = 0;
  for (int l = 0; l < line; ++l) idx += static_cast<int>(s.lines[l].size());
  const auto& pts = s.lines[line];
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  if (it == pts.end() || *it != p) throw PlaneError("not a flag: point not on line");
  return s.point_count + idx + static_cast<int>(it - pts.begin());
}

LabeledGraph flag_graph(const IncidenceStructure& s) {
  const int np = s.point_count;
  LabeledGraph out;
  std::vector<VertexLabel> labels(np);
  std::vector<VertexTag> tags(np, VertexTag::point);
  for (int p = 0; p < np; ++p) labels[p] = {VertexTag::point, p, -1};

  std::vector<std::pair<int, int>> edges;
  int next = np;
  for (int l = 0; l < s.line_count(); ++l) {
    int first = next;
    for (int p : s.lines[l]) {
      labels.push_back({VertexTag::flag, p, l});
      tags.push_back(VertexTag::flag);
      edges.emplace_back(p, next);  // pendant edge to the flag's point
      ++next;
    }
    // porcupine clique on the line's flags
    for (int a = first; a < next; ++a)
      for (int b = a + 1; b < next; ++b) edges.emplace_back(a, b);
  }
  out.graph = with_tags(build_graph(next, edges), std::move(tags));
  out.labels = std::move(labels);
  return out;
}

namespace {

bool is_levi_point(const IncidenceStructure& s, int v) { return v < s.point_count; }

void check_levi_edge(const IncidenceStructure& s, int a, int b) {
  int p = is_levi_point(s, a) ? a : b;
  int l = is_levi_point(s, a) ? b : a;
  if (is_levi_point(s, p) == is_levi_point(s, l))
    throw PlaneError("not a Levi path: consecutive vertices on the same side");
  if (!s.incident(p, l - s.point_count))
    throw PlaneError("not a Levi path: consecutive vertices not incident");
}

}  // namespace

std::vector<int> lift_path(const IncidenceStructure& s, const std::vector<int>& levi_path) {
  if (levi_path.empty()) throw PlaneError("empty path");
  const int total = s.point_count + s.line_count();
  for (int v : levi_path)
    if (v < 0 || v >= total) throw PlaneError("Levi vertex id out of range");
  std::set<int> seen(levi_path.begin(), levi_path.end());
  if (seen.size() != levi_path.size()) throw PlaneError("path is not simple");
  if (!is_levi_point(s, levi_path.front()) || !is_levi_point(s, levi_path.back()))
    throw PlaneError("lift requires point endpoints");
  for (size_t i = 0; i + 1 < levi_path.size(); ++i) check_levi_edge(s, levi_path[i], levi_path[i + 1]);

  std::vector<int> out;
  out.push_back(flag_vertex_of_point(s, levi_path[0]));
  for (size_t i = 1; i + 1 < levi_path.size(); i += 2) {
    int line = levi_path[i] - s.point_count;
    int p = levi_path[i - 1];
    int p2 = levi_path[i + 1];
    out.push_back(flag_vertex_of_flag(s, p, line));
    out.push_back(flag_vertex_of_flag(s, p2, line));
    out.push_back(flag_vertex_of_point(s, p2));
  }
  return out;
}

std::vector<int> lift_cycle(const IncidenceStructure& s, const std::vector<int>& levi_cycle) {
  if (levi_cycle.size() < 4 || levi_cycle.size() % 2 != 0)
    throw PlaneError("Levi cycle must alternate points and lines");
  std::set<int> seen(levi_cycle.begin(), levi_cycle.end());
  if (seen.size() != levi_cycle.size()) throw PlaneError("cycle is not simple");
  // rotate so the cycle starts at a point
  std::vector<int> cyc = levi_cycle;
  if (!is_levi_point(s, cyc[0])) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
  for (size_t i = 0; i < cyc.size(); ++i) check_levi_edge(s, cyc[i], cyc[(i + 1) % cyc.size()]);

  std::vector<int> out;
  const size_t k = cyc.size() / 2;
  for (size_t i = 0; i < k; ++i) {
    int p = cyc[2 * i];
    int line = cyc[2 * i + 1] - s.point_count;
    int p2 = cyc[(2 * i + 2) % cyc.size()];
    out.push_back(flag_vertex_of_point(s, p));
    out.push_back(flag_vertex_of_flag(s, p, line));
    out.push_back(flag_vertex_of_flag(s, p2, line));
  }
  return out;
}

namespace {

// incidence data recovered from flag-graph labels
struct FlagIndex {
  int point_count = 0;
  std::vector<std::vector<int>> line_points;   // sorted
  std::vector<std::vector<int>> point_lines;   // sorted
  std::map<std::pair<int, int>, int> flag_vertex;
  std::vector<int> point_vertex;

  int line_of(int p1, int p2) const {
    for (int l : point_lines[p1]) {
      const auto& pts = line_points[l];
      if (std::binary_search(pts.begin(), pts.end(), p2)) return l;
    }
    throw PlaneError("no line through the two points");
  }
  bool on_line(int p, int l) const {
    return std::binary_search(line_points[l].begin(), line_points[l].end(), p);
  }
  std::optional<int> common_point(int l1, int l2) const {
    std::vector<int> common;
    std::set_intersection(line_points[l1].begin(), line_points[l1].end(),
                          line_points[l2].begin(), line_points[l2].end(),
                          std::back_inserter(common));
    if (common.empty()) return std::nullopt;
    return common[0];
  }
  int first_point_of_line(int l, std::initializer_list<int> excluded) const {
    for (int p : line_points[l])
      if (std::find(excluded.begin(), excluded.end(), p) == excluded.end()) return p;
    throw PlaneError("line has no point outside the excluded set");
  }
  int first_line_of_point(int p, std::initializer_list<int> excluded) const {
    for (int l : point_lines[p])
      if (std::find(excluded.begin(), excluded.end(), l) == excluded.end()) return l;
    throw PlaneError("point has no line outside the excluded set");
  }
};

FlagIndex build_flag_index(const LabeledGraph& fg) {
  FlagIndex ix;
  int max_point = -1, max_line = -1;
  for (const auto& lab : fg.labels) {
    if (lab.kind == VertexTag::point) max_point = std::max(max_point, lab.point);
    if (lab.kind == VertexTag::flag) {
      max_point = std::max(max_point, lab.point);
      max_line = std::max(max_line, lab.line);
    }
  }
  ix.point_count = max_point + 1;
  ix.line_points.assign(max_line + 1, {});
  ix.point_lines.assign(ix.point_count, {});
  ix.point_vertex.assign(ix.point_count, -1);
  for (int v = 0; v < static_cast<int>(fg.labels.size()); ++v) {
    const auto& lab = fg.labels[v];
    if (lab.kind == VertexTag::point) {
      ix.point_vertex[lab.point] = v;
    } else if (lab.kind == VertexTag::flag) {
      ix.flag_vertex[{lab.point, lab.line}] = v;
      ix.line_points[lab.line].push_back(lab.point);
      ix.point_lines[lab.point].push_back(lab.line);
    } else {
      throw PlaneError("graph is not a flag graph: unlabeled vertex");
    }
  }
  for (auto& v : ix.line_points) std::sort(v.begin(), v.end());
  for (auto& v : ix.point_lines) std::sort(v.begin(), v.end());
  return ix;
}

// alternating [a0, M0, a1, M1, ...] of plane ids -> flag-graph vertex cycle
std::vector<int> realize_levi_cycle(const FlagIndex& ix,
                                    const std::vector<std::pair<int, int>>& pls) {
  std::vector<int> out;
  const size_t k = pls.size();
  for (size_t i = 0; i < k; ++i) {
    auto [p, l] = pls[i];
    int p2 = pls[(i + 1) % k].first;
    out.push_back(ix.point_vertex[p]);
    out.push_back(ix.flag_vertex.at({p, l}));
    out.push_back(ix.flag_vertex.at({p2, l}));
  }
  return out;
}

void validate_cycle(const LabeledGraph& fg, const std::vector<int>& cyc, int u, int v) {
  std::set<int> seen(cyc.begin(), cyc.end());
  if (seen.size() != cyc.size()) throw PlaneError("internal: certificate cycle not simple");
  if (!seen.count(u) || !seen.count(v))
    throw PlaneError("internal: certificate cycle misses an endpoint");
  for (size_t i = 0; i < cyc.size(); ++i)
    if (!fg.graph.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]))
      throw PlaneError("internal: certificate cycle uses a non-edge");
}

}  // namespace

std::vector<int> two_connectivity_certificate(const LabeledGraph& fg, int u, int v) {
  if (u == v) throw PlaneError("certificate needs two distinct vertices");
  const int n = fg.graph.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw PlaneError("vertex id out of range");
  FlagIndex ix = build_flag_index(fg);

  const VertexLabel& lu = fg.labels[u];
  const VertexLabel& lv = fg.labels[v];

  // template 1, paper order (L1, x1, M, x2, L2, x, L1)
  auto intersecting = [&](int L1, int x1, int M, int x2, int L2, int x) {
    return realize_levi_cycle(ix, {{x1, M}, {x2, L2}, {x, L1}});
  };

  std::vector<int> cyc;
  if (lu.kind == VertexTag::point && lv.kind == VertexTag::point) {
    int a = lu.point, b = lv.point;
    int m = ix.line_of(a, b);
    int x = -1;
    for (int p = 0; p < ix.point_count; ++p)
      if (!ix.on_line(p, m)) {
        x = p;
        break;
      }
    cyc = intersecting(ix.line_of(a, x), a, m, b, ix.line_of(b, x), x);
  } else if (lu.kind == VertexTag::flag && lv.kind == VertexTag::flag) {
    int p = lu.point, L = lu.line, p2 = lv.point, L2 = lv.line;
    if (L == L2) {
      // two flags of one line
      int side = ix.first_line_of_point(p2, {L});
      int x2 = ix.first_point_of_line(side, {p2});
      cyc = intersecting(L, p, ix.line_of(p, x2), x2, side, p2);
    } else if (auto z = ix.common_point(L, L2)) {
      if (p == p2) {  // both flags at the crossing point
        int x1 = ix.first_point_of_line(L, {*z});
        int x2 = ix.first_point_of_line(L2, {*z});
        cyc = intersecting(L, x1, ix.line_of(x1, x2), x2, L2, *z);
      } else if (p != *z && p2 != *z) {
        cyc = intersecting(L, p, ix.line_of(p, p2), p2, L2, *z);
      } else if (p == *z) {
        int x1 = ix.first_point_of_line(L, {*z});
        cyc = intersecting(L, x1, ix.line_of(x1, p2), p2, L2, *z);
      } else {  // p2 == *z
        int x2 = ix.first_point_of_line(L2, {*z});
        cyc = intersecting(L2, x2, ix.line_of(x2, p), p, L, *z);
      }
    } else {
      // parallel lines: (L1,x1,M1,x2,L2,x2',M2,x1',L1)
      int x1b = ix.first_point_of_line(L, {p});
      int x2b = ix.first_point_of_line(L2, {p2});
      cyc = realize_levi_cycle(
          ix, {{p, ix.line_of(p, p2)}, {p2, L2}, {x2b, ix.line_of(x1b, x2b)}, {x1b, L}});
    }
  } else {
    // one point, one flag
    int a = lu.kind == VertexTag::point ? lu.point : lv.point;
    const VertexLabel& fl = lu.kind == VertexTag::flag ? lu : lv;
    int p = fl.point, L = fl.line;
    if (a == p) {
      int x = ix.first_point_of_line(L, {p});
      int L2 = ix.first_line_of_point(x, {L});
      int x2 = ix.first_point_of_line(L2, {x});
      cyc = intersecting(L, p, ix.line_of(p, x2), x2, L2, x);
    } else if (ix.on_line(a, L)) {
      int L2 = ix.first_line_of_point(a, {L});
      int x2 = ix.first_point_of_line(L2, {a});
      cyc = intersecting(L, p, ix.line_of(p, x2), x2, L2, a);
    } else {
      int x = ix.first_point_of_line(L, {p});
      cyc = intersecting(L, p, ix.line_of(p, a), a, ix.line_of(a, x), x);
    }
  }
  validate_cycle(fg, cyc, u, v);
  return cyc;
}

bool ClaimReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string vec_str(const std::vector<int64_t>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void add_check(ClaimReport& r, const std::string& name, const std::string& expected,
               const std::string& measured) {
  r.checks.push_back({name, expected, measured, expected == measured});
}

void add_check_bool(ClaimReport& r, const std::string& name, bool pass,
                    const std::string& expected, const std::string& measured) {
  r.checks.push_back({name, expected, measured, pass});
}

std::vector<int> sample_roots(const std::vector<int>& all, bool everything) {
  if (everything || all.size() <= 10) return all;
  std::vector<int> out;
  size_t stride = all.size() / 10;
  for (size_t i = 0; i < all.size() && out.size() < 10; i += stride) out.push_back(all[i]);
  return out;
}

}  // namespace

ClaimReport verify_flag_claims(PlaneKind kind, int q, bool all_roots) {
  ClaimReport r;
  r.kind = kind;
  r.q = q;
  IncidenceStructure s = kind == PlaneKind::affine ? affine_plane(q) : projective_plane(q);
  LabeledGraph fg = flag_graph(s);
  const Graph& g = fg.graph;
  const int n = g.vertex_count();

  int64_t expect_n = kind == PlaneKind::affine
                         ? static_cast<int64_t>(q) * q * q + 2 * q * q
                         : static_cast<int64_t>(q + 1) * (q + 1) * (q + 1) + 1;
  add_check(r, "vertex count", std::to_string(expect_n), std::to_string(n));

  GraphMetrics m = metrics(g);
  add_check(r, "diameter", std::to_string(kind == PlaneKind::affine ? 5 : 4),
            std::to_string(m.diameter));

  GeodeticVerdict sv = is_geodetic_sigma(g);
  add_check(r, "geodetic (sigma checker)", "true", sv.geodetic ? "true" : "false");
  add_check(r, "geodetic (vertical checker)", "true", is_geodetic_vertical(g) ? "true" : "false");

  int kappa_bound = kind == PlaneKind::projective ? 3 : (q >= 3 ? 3 : 2);
  add_check_bool(r, "connectivity", m.connectivity >= kappa_bound,
                 ">=" + std::to_string(kappa_bound), std::to_string(m.connectivity));

  // degree law
  {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      int expect = kind == PlaneKind::projective
                       ? q + 1
                       : (fg.labels[v].kind == VertexTag::point ? q + 1 : q);
      ok = g.degree(v) == expect;
    }
    add_check_bool(r, "degree law", ok,
                   kind == PlaneKind::projective ? "regular q+1" : "points q+1, flags q",
                   ok ? "holds" : "violated");
  }

  if (kind == PlaneKind::affine) {
    const int64_t Q = q;
    std::vector<int64_t> point_vv{Q + 1, Q * Q - 1, Q * Q - 1, Q * (Q * Q - 1)};
    std::vector<int64_t> flag_vv{Q, 2 * Q - 1, 2 * Q * (Q - 1), Q * (Q - 1) + Q * (Q - 1) * (Q - 1),
                                 Q * (Q - 1)};
    std::vector<int64_t> point_spheres{1, Q + 1, Q * Q - 1, Q * Q - 1, Q * (Q * Q - 1)};
    std::vector<int64_t> flag_spheres{1, Q, 2 * Q - 1, 2 * Q * (Q - 1), Q * Q * (Q - 1),
                                      Q * (Q - 1)};

    bool everything = all_roots || q <= 4;
    std::vector<int> point_roots, flag_roots;
    for (int v = 0; v < n; ++v)
      (fg.labels[v].kind == VertexTag::point ? point_roots : flag_roots).push_back(v);

    bool pv_ok = true, ps_ok = true;
    for (int root : sample_roots(point_roots, everything)) {
      VerticalProfile p = vertical_profile(g, root);
      std::vector<int64_t> vv(p.heights.begin() + 1, p.heights.end());
      if (vv != point_vv) pv_ok = false;
      if (p.spheres != point_spheres) ps_ok = false;
    }
    add_check_bool(r, "point-root Vv profile", pv_ok, vec_str(point_vv),
                   pv_ok ? "matches on all checked roots" : "mismatch");
    add_check_bool(r, "point-root sphere sizes", ps_ok, vec_str(point_spheres),
                   ps_ok ? "matches on all checked roots" : "mismatch");

    bool fv_ok = true, fs_ok = true, n5_ok = true;
    for (int root : sample_roots(flag_roots, everything)) {
      VerticalProfile p = vertical_profile(g, root);
      std::vector<int64_t> vv(p.heights.begin() + 1, p.heights.end());
      if (vv != flag_vv) fv_ok = false;
      if (p.spheres != flag_spheres) fs_ok = false;
      // N5 must be exactly the flags (y, l_y) with l_y the parallel to the
      // root line through y
      BfsResult bfs = bfs_layers(g, root);
      int root_line = fg.labels[root].line;
      for (int w = 0; w < n && n5_ok; ++w) {
        if (bfs.dist[w] != 5) continue;
        const VertexLabel& lw = fg.labels[w];
        if (lw.kind != VertexTag::flag) {
          n5_ok = false;
          break;
        }
        bool y_off_root_line = !s.incident(lw.point, root_line);
        bool parallel = s.lines_disjoint(lw.line, root_line);
        if (!y_off_root_line || !parallel) n5_ok = false;
      }
    }
    add_check_bool(r, "flag-root Vv profile", fv_ok, vec_str(flag_vv),
                   fv_ok ? "matches on all checked roots" : "mismatch");
    add_check_bool(r, "flag-root sphere sizes", fs_ok, vec_str(flag_spheres),
                   fs_ok ? "matches on all checked roots" : "mismatch");
    add_check_bool(r, "flag-root N5 = {(y, l_y)}", n5_ok, "flags on the parallel line",
                   n5_ok ? "holds" : "violated");

    int64_t vv_total = 0;
    for (int64_t x : point_vv) vv_total += x;
    add_check(r, "point-root Vv total", std::to_string(static_cast<int64_t>(n) - 1),
              std::to_string(vv_total));
    vv_total = 0;
    for (int64_t x : flag_vv) vv_total += x;
    add_check(r, "flag-root Vv total", std::to_string(static_cast<int64_t>(n) - 1),
              std::to_string(vv_total));
  }
  return r;
}

}  // namespace geodetic
