#include "geodetic/census.hpp"

#include <fstream>

#include "geodetic/enumerate.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/graph6.hpp"
#include "geodetic/parallel.hpp"

namespace geodetic {

std::optional<SourcedGraph> VectorSource::next() {
  if (pos_ >= items_.size()) return std::nullopt;
  return items_[pos_++];
}

Graph6FileSource::Graph6FileSource(const std::string& path) : path_(path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph6 file: " + path);
  std::string line;
  while (std::getline(in, line)) lines_.push_back(line);
}

std::optional<SourcedGraph> Graph6FileSource::next() {
  while (pos_ < lines_.size()) {
    const std::string& line = lines_[pos_++];
    ++lineno_;
    if (line.empty()) {
      ++skipped_;
      continue;
    }
    try {
      Graph g = parse_graph6(line);
      return SourcedGraph{std::move(g),
                          "ingested:" + path_ + ":" + std::to_string(lineno_)};
    } catch (const Graph6Error&) {
      ++skipped_;
    }
  }
  return std::nullopt;
}

namespace {

CensusRecord make_record(const Graph& g, const std::string& provenance, bool geodetic,
                         const GraphMetrics& m) {
  CensusRecord rec;
  rec.canonical = canonical_graph6(g);
  rec.n = g.vertex_count();
  rec.m = g.edge_count();
  rec.min_degree = m.min_degree;
  rec.connectivity = m.connectivity;
  rec.diameter = m.diameter;
  rec.radius = m.radius;
  rec.girth = m.girth;
  rec.geodetic = geodetic;
  rec.self_centered = m.radius == m.diameter;
  rec.provenance = provenance;
  return rec;
}

}  // namespace

CubicCensus cubic_geodetic_census(GraphSource& source, int jobs) {
  CubicCensus census;
  struct Result {
    bool eligible = false;
    bool qualifies = false;
    CensusRecord rec;
  };
  auto work = [](const SourcedGraph& sg) {
    Result res;
    const Graph& g = sg.graph;
    if (g.vertex_count() == 0 || !is_connected(g)) return res;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) != 3) return res;
    res.eligible = true;
    if (!is_geodetic_sigma(g).geodetic) return res;
    GraphMetrics m = metrics(g);
    if (m.connectivity < 2) return res;
    res.qualifies = true;
    res.rec = make_record(g, sg.provenance, true, m);
    return res;
  };
  scan_ordered<SourcedGraph, Result>(
      [&]() { return source.next(); }, work,
      [&](Result res) {
        ++census.scanned;
        if (!res.eligible) ++census.skipped_ineligible;
        if (res.qualifies) census.records.push_back(std::move(res.rec));
      },
      jobs);
  return census;
}

DiameterGirthSurvey diameter_girth_survey(GraphSource& source, int min_degree, int jobs) {
  DiameterGirthSurvey survey;
  struct Result {
    bool qualifies = false;
    int diameter = 0, girth = 0;
    std::string g6;
  };
  auto work = [min_degree](const SourcedGraph& sg) {
    Result res;
    const Graph& g = sg.graph;
    if (g.vertex_count() == 0 || !is_connected(g)) return res;
    if (g.min_degree() < min_degree) return res;
    if (!is_geodetic_sigma(g).geodetic) return res;
    GraphMetrics m = metrics(g);
    if (m.connectivity < 2) return res;
    res.qualifies = true;
    res.diameter = m.diameter;
    res.girth = m.girth;
    res.g6 = emit_graph6(g);
    return res;
  };
  scan_ordered<SourcedGraph, Result>(
      [&]() { return source.next(); }, work,
      [&](Result res) {
        ++survey.scanned;
        if (!res.qualifies) return;
        ++survey.qualifying;
        ++survey.histogram[{res.diameter, res.girth}];
        if (res.diameter > survey.max_diameter) {
          survey.max_diameter = res.diameter;
          survey.max_diameter_exemplars.clear();
        }
        if (res.diameter == survey.max_diameter)
          survey.max_diameter_exemplars.push_back(res.g6);
      },
      jobs);
  return survey;
}

}  // namespace geodetic
