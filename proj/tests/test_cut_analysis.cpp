#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "geodetic/census.hpp"
#include "geodetic/cut_analysis.hpp"
#include "geodetic/enumerate.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/graph6.hpp"
#include "test_util.hpp"

using namespace geodetic;
using namespace testutil;

TEST_CASE("min distance two cut") {
  CHECK_FALSE(min_distance_two_cut(petersen()).has_value());

  // two triangles sharing the edge {0,1}
  Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  auto cut = min_distance_two_cut(g);
  REQUIRE(cut.has_value());
  CHECK(cut->x == 0);
  CHECK(cut->y == 1);
  CHECK(cut->distance == 1);

  // C6: adjacent pairs never disconnect it, so the minimum is distance 2
  auto c6 = min_distance_two_cut(cycle(6));
  REQUIRE(c6.has_value());
  CHECK(c6->distance == 2);
  CHECK(c6->x == 0);
  CHECK(c6->y == 2);
}

TEST_CASE("cut profile of the ell = 2 textbook situation") {
  // C6 with the cut {0,2}: geodesic 0,1,2 with x_1 = 1 interior
  Graph g = cycle(6);
  CutProfile p = cut_profile(g, 0, 2);
  CHECK(p.ell == 2);
  CHECK(p.geodesic_xy == std::vector<int>{0, 1, 2});
  CHECK_FALSE(p.non_geodetic_basis);
  REQUIRE(p.components.size() == 2);
  CHECK(p.components[0] == std::vector<int>{1});
  CHECK(p.components[1] == std::vector<int>{3, 4, 5});
  // interior vertex of the geodesic sits on R_0
  CHECK(p.r_diag[0 + p.ell] == std::vector<int>{1});
  // phi places x at (0, ell) and y at (ell, 0)
  CHECK(p.phi[0] == std::make_pair(0, 2));
  CHECK(p.phi[2] == std::make_pair(2, 0));

  CHECK_THROWS_AS(cut_profile(cycle(6), 0, 1), GraphError);  // not a cut
}

TEST_CASE("K23 profile reports the antipodal violation") {
  Graph k23 = complete_bipartite(2, 3);
  CutProfile p = cut_profile(k23, 0, 1);
  CHECK(p.ell == 2);
  CHECK(p.non_geodetic_basis);
  CHECK(p.components.size() == 3);
  LemmaCheckReport r = check_cut_lemmas(k23, p);
  CHECK(r.find("two-components").status == LemmaStatus::violated);
  CHECK(r.find("antipodal-emptiness").status == LemmaStatus::violated);
  // triangle-inequality facts hold regardless
  CHECK(r.find("neighbor-jump").status == LemmaStatus::holds);
  CHECK(r.find("phi-contraction").status == LemmaStatus::holds);
}

TEST_CASE("geodetic graph with a cut vertex satisfies the arithmetic lemmas") {
  // two triangles sharing vertex 2: geodetic, kappa = 1
  Graph bowtie = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  REQUIRE(is_geodetic_sigma(bowtie).geodetic);
  auto cut = min_distance_two_cut(bowtie);
  REQUIRE(cut.has_value());
  CutProfile p = cut_profile(bowtie, cut->x, cut->y);
  LemmaCheckReport r = check_cut_lemmas(bowtie, p);
  CHECK(r.find("antipodal-emptiness").status == LemmaStatus::holds);
  CHECK(r.find("neighbor-jump").status == LemmaStatus::holds);
  CHECK(r.find("phi-contraction").status == LemmaStatus::holds);
  CHECK(r.find("geodesic-containment").status == LemmaStatus::holds);
}

TEST_CASE("stale profiles are rejected") {
  Graph g = cycle(6);
  CutProfile p = cut_profile(g, 0, 2);
  Graph other = cycle(7);
  CHECK_THROWS_AS(check_cut_lemmas(other, p), GraphError);
}

TEST_CASE("universal lemmas hold on every 2-cut of small graphs") {
  EnumerateConstraints cons;
  cons.connected = true;
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n, cons)) {
      auto cut = min_distance_two_cut(g);
      if (!cut) continue;
      CutProfile p = cut_profile(g, cut->x, cut->y);
      LemmaCheckReport r = check_cut_lemmas(g, p);
      CHECK(r.find("neighbor-jump").status == LemmaStatus::holds);
      CHECK(r.find("phi-contraction").status == LemmaStatus::holds);
      CHECK(r.find("SE-edge-existence").status == LemmaStatus::holds);
      if (is_geodetic_sigma(g).geodetic) {
        CHECK(r.find("antipodal-emptiness").status == LemmaStatus::holds);
        CHECK(r.find("geodesic-containment").status == LemmaStatus::holds);
        // the remaining lemmas assume min degree >= 3 and 2-connectivity;
        // no geodetic graph with a 2-cut satisfies both (that is the theorem)
        CHECK_FALSE((vertex_connectivity(g) == 2 && g.min_degree() >= 3));
      }
    }
  }
}

TEST_CASE("conclusion lemmas are reported, not asserted, outside their hypotheses") {
  // star K_{1,3}: geodetic but full of degree-1 vertices; with the cut {0,1}
  // the whole neighborhood of x lands on R_ell, so find-square is reported
  Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CutProfile p = cut_profile(star, 0, 1);
  LemmaCheckReport r = check_cut_lemmas(star, p);
  CHECK(r.find("find-square").status == LemmaStatus::violated);
  CHECK_FALSE(r.find("find-square").witness.empty());
  CHECK(r.find("antipodal-emptiness").status == LemmaStatus::holds);

  // three triangles sharing a vertex: geodetic, cut vertex, three components
  Graph three = build_graph(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4},
                                {0, 5}, {5, 6}, {0, 6}});
  REQUIRE(is_geodetic_sigma(three).geodetic);
  auto cut = min_distance_two_cut(three);
  REQUIRE(cut.has_value());
  CutProfile p3 = cut_profile(three, cut->x, cut->y);
  LemmaCheckReport r3 = check_cut_lemmas(three, p3);
  CHECK(r3.find("two-components").status == LemmaStatus::violated);
  CHECK(r3.find("antipodal-emptiness").status == LemmaStatus::holds);
  CHECK(r3.find("geodesic-containment").status == LemmaStatus::holds);
}

TEST_CASE("diagonal grid renders") {
  CutProfile p = cut_profile(cycle(6), 0, 2);
  std::string grid = diagonal_grid(p);
  CHECK(grid.find("j |") != std::string::npos);
  CHECK(std::count(grid.begin(), grid.end(), '\n') == 6);  // header + 5 diagonals
}

TEST_CASE("theorem1 scan over named graphs") {
  std::vector<SourcedGraph> items;
  items.push_back({petersen(), "petersen"});
  items.push_back({cycle(4), "c4"});
  items.push_back({complete(4), "k4"});
  VectorSource source(std::move(items));
  Theorem1Survey s = theorem1_scan(source);
  CHECK(s.graphs_seen == 3);
  CHECK(s.counterexamples.empty());
  // Petersen tallied as a geodetic block with kappa 3, diameter 2, girth 5
  CHECK(s.tally.at({10, 3, 2, 5}) == 1);
  CHECK(s.tally.at({4, 3, 1, 3}) == 1);
  CHECK(s.tally.count({4, 2, 2, 4}) == 0);  // C4 is not geodetic
}

TEST_CASE("theorem1 scan at desk scale, serial equals parallel") {
  EnumerateConstraints cons;
  cons.connected = true;
  std::vector<SourcedGraph> items;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, cons)) items.push_back({g, "enum"});
  VectorSource a(items);
  Theorem1Survey serial = theorem1_scan(a);
  VectorSource b(items);
  Theorem1Survey parallel = theorem1_scan(b, 4);
  CHECK(serial.counterexamples.empty());
  CHECK(serial.graphs_seen == parallel.graphs_seen);
  CHECK(serial.tally == parallel.tally);
  CHECK(serial.counterexamples == parallel.counterexamples);
}
