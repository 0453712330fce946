#include "geodetic/export.hpp"

#include <sstream>

namespace geodetic {

json plane_to_json(const IncidenceStructure& s) {
  json j;
  j["kind"] = s.kind == PlaneKind::affine ? "affine" : "projective";
  j["q"] = s.q;
  j["points"] = s.point_labels;
  json lines = json::array();
  for (int l = 0; l < s.line_count(); ++l) {
    json line;
    line["label"] = s.line_labels[l];
    line["points"] = s.lines[l];
    lines.push_back(std::move(line));
  }
  j["lines"] = std::move(lines);
  if (s.kind == PlaneKind::affine) j["parallel_classes"] = s.parallel_classes;
  return j;
}

json validation_to_json(const PlaneValidation& v) {
  json j;
  j["all_pass"] = v.all_pass();
  json checks = json::array();
  for (const auto& c : v.checks) {
    json e;
    e["axiom"] = c.axiom;
    e["pass"] = c.pass;
    if (!c.pass) e["counterexample"] = c.counterexample;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

namespace {

std::string label_string(const VertexLabel& l) {
  switch (l.kind) {
    case VertexTag::point:
      return "point:" + std::to_string(l.point);
    case VertexTag::line:
      return "line:" + std::to_string(l.line);
    case VertexTag::flag:
      return "flag:" + std::to_string(l.point) + "," + std::to_string(l.line);
    default:
      return "plain";
  }
}

}  // namespace

json labeled_graph_to_json(const LabeledGraph& lg) {
  json j;
  j["n"] = lg.graph.vertex_count();
  json labels = json::array();
  for (const auto& l : lg.labels) labels.push_back(label_string(l));
  j["labels"] = std::move(labels);
  json edges = json::array();
  for (auto [u, v] : lg.graph.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

json verdict_to_json(const GeodeticVerdict& v) {
  json j;
  j["geodetic"] = v.geodetic;
  if (v.witness) {
    json w;
    w["u"] = v.witness->u;
    w["v"] = v.witness->v;
    w["path_a"] = v.witness->path_a;
    w["path_b"] = v.witness->path_b;
    w["closed_walk"] = v.witness->closed_walk;
    j["witness"] = std::move(w);
  }
  return j;
}

json claim_report_to_json(const ClaimReport& r) {
  json j;
  j["kind"] = r.kind == PlaneKind::affine ? "affine" : "projective";
  j["q"] = r.q;
  j["all_pass"] = r.all_pass();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["measured"] = c.measured;
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

json cut_profile_to_json(const CutProfile& p) {
  json j;
  j["x"] = p.x;
  j["y"] = p.y;
  j["ell"] = p.ell;
  j["geodesic"] = p.geodesic_xy;
  j["non_geodetic_basis"] = p.non_geodetic_basis;
  j["components"] = p.components;
  json phi = json::object();
  for (size_t v = 0; v < p.phi.size(); ++v)
    if (p.phi[v]) phi[std::to_string(v)] = json::array({p.phi[v]->first, p.phi[v]->second});
  j["phi"] = std::move(phi);
  json diag = json::array();
  for (int d = p.ell; d >= -p.ell; --d) {
    json row;
    row["j"] = d;
    row["R"] = p.r_diag[d + p.ell];
    row["L"] = p.l_diag[d + p.ell];
    diag.push_back(std::move(row));
  }
  j["diagonals"] = std::move(diag);
  return j;
}

json lemma_report_to_json(const LemmaCheckReport& r) {
  json j;
  j["all_hold"] = r.all_hold();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["lemma"] = c.lemma;
    e["status"] = c.status == LemmaStatus::holds ? "holds" : "violated";
    if (c.status != LemmaStatus::holds) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

json census_record_to_json(const CensusRecord& rec) {
  json j;
  j["canonical"] = rec.canonical;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["min_degree"] = rec.min_degree;
  j["connectivity"] = rec.connectivity;
  j["diameter"] = rec.diameter;
  j["radius"] = rec.radius;
  j["girth"] = rec.girth == kInf ? json("infinity") : json(rec.girth);
  j["geodetic"] = rec.geodetic;
  j["self_centered"] = rec.self_centered;
  j["provenance"] = rec.provenance;
  return j;
}

json theorem1_survey_to_json(const Theorem1Survey& s) {
  json j;
  j["graphs_seen"] = s.graphs_seen;
  j["skipped"] = s.skipped;
  j["counterexamples"] = s.counterexamples;
  json tally = json::array();
  for (const auto& [key, count] : s.tally) {
    auto [n, kappa, diameter, girth] = key;
    json row;
    row["n"] = n;
    row["connectivity"] = kappa;
    row["diameter"] = diameter;
    row["girth"] = girth == kInf ? json("infinity") : json(girth);
    row["count"] = count;
    tally.push_back(std::move(row));
  }
  j["geodetic_blocks"] = std::move(tally);
  return j;
}

json diameter_girth_survey_to_json(const DiameterGirthSurvey& s) {
  json j;
  j["scanned"] = s.scanned;
  j["qualifying"] = s.qualifying;
  json hist = json::array();
  for (const auto& [key, count] : s.histogram) {
    json row;
    row["diameter"] = key.first;
    row["girth"] = key.second == kInf ? json("infinity") : json(key.second);
    row["count"] = count;
    hist.push_back(std::move(row));
  }
  j["histogram"] = std::move(hist);
  j["max_diameter"] = s.max_diameter;
  j["max_diameter_exemplars"] = s.max_diameter_exemplars;
  return j;
}

std::string to_dot(const LabeledGraph& lg) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < lg.graph.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << label_string(lg.labels[v]) << "\"];\n";
  for (auto [u, v] : lg.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace geodetic
