#pragma once

#include <string>
#include <vector>

#include "geodetic/finite_geometry.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

struct VertexLabel {
  VertexTag kind = VertexTag::plain;
  int point = -1;  // plane point id, when applicable
  int line = -1;   // plane line id, when applicable
};

struct LabeledGraph {
  Graph graph;
  std::vector<VertexLabel> labels;
};

// Bipartite point-line incidence graph. Vertex ids: points first in
// structure order, then lines.
LabeledGraph levi_graph(const IncidenceStructure& s);

// Points plus flags; p ~ (p,L) and (p,L) ~ (p',L). Vertex ids: points first,
// then flags sorted by (line, point).
LabeledGraph flag_graph(const IncidenceStructure& s);

// Vertex id of point p / flag (p,L) in the canonical flag_graph layout.
int flag_vertex_of_point(const IncidenceStructure& s, int p);
int flag_vertex_of_flag(const IncidenceStructure& s, int p, int line);

// Lifts a simple Levi path with point endpoints: each line visit [p,L,p']
// becomes [p,(p,L),(p',L),p']. Vertex ids are in the canonical layouts of
// levi_graph / flag_graph for the same structure.
std::vector<int> lift_path(const IncidenceStructure& s, const std::vector<int>& levi_path);

// Lifts a simple Levi cycle (vertex sequence, closing edge implied).
std::vector<int> lift_cycle(const IncidenceStructure& s, const std::vector<int>& levi_cycle);

// A simple cycle of the flag graph through u and v, built from the two
// plane cycle templates (intersecting lines / parallel lines). Works for any
// pair of distinct flag-graph vertices of Flag(AG2(q)) or Flag(PG2(q)).
std::vector<int> two_connectivity_certificate(const LabeledGraph& fg, int u, int v);

struct ClaimCheck {
  std::string name;
  std::string expected;
  std::string measured;
  bool pass = true;
};

struct ClaimReport {
  PlaneKind kind = PlaneKind::affine;
  int q = 0;
  std::vector<ClaimCheck> checks;
  bool all_pass() const;
};

// Builds Flag(plane(q)) and checks every quantitative claim about it:
// vertex count, diameter, geodeticity by both checkers, connectivity bound,
// regularity / degree law, and (affine) the closed-form vertical profiles.
// Profiles run on every root when q <= 4 or all_roots, else on a sample.
ClaimReport verify_flag_claims(PlaneKind kind, int q, bool all_roots = false);

}  // namespace geodetic
