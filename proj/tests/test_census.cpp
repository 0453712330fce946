#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <set>

#include "geodetic/census.hpp"
#include "geodetic/enumerate.hpp"
#include "geodetic/flag_graph.hpp"
#include "geodetic/graph6.hpp"
#include "test_util.hpp"

using namespace geodetic;
using namespace testutil;

namespace {

std::vector<SourcedGraph> enumerated_cubic(int max_n) {
  std::vector<SourcedGraph> items;
  for (int n = 4; n <= max_n; n += 2) {
    EnumerateConstraints cons;
    cons.connected = true;
    cons.regular_degree = 3;
    for (const Graph& g : enumerate_graphs(n, cons))
      items.push_back({g, "enumerated:n=" + std::to_string(n)});
  }
  return items;
}

}  // namespace

TEST_CASE("cubic census on the enumerated range finds K4 and Petersen only") {
  VectorSource source(enumerated_cubic(10));
  CubicCensus census = cubic_geodetic_census(source);
  CHECK(census.scanned == 27);  // 1 + 2 + 5 + 19
  CHECK(census.skipped_ineligible == 0);
  REQUIRE(census.records.size() == 2);
  CHECK(census.records[0].canonical == canonical_graph6(complete(4)));
  CHECK(census.records[1].canonical == canonical_graph6(petersen()));
  CHECK(census.records[1].girth == 5);
  CHECK(census.records[1].diameter == 2);
  CHECK(census.records[1].self_centered);
  CHECK(census.records[1].connectivity == 3);
}

TEST_CASE("K33 is excluded and non-cubic entries are counted") {
  std::vector<SourcedGraph> items;
  items.push_back({complete_bipartite(3, 3), "k33"});
  items.push_back({cycle(5), "c5"});          // not cubic
  items.push_back({complete(4), "k4"});
  VectorSource source(std::move(items));
  CubicCensus census = cubic_geodetic_census(source);
  CHECK(census.scanned == 3);
  CHECK(census.skipped_ineligible == 1);
  REQUIRE(census.records.size() == 1);
  CHECK(census.records[0].provenance == "k4");
}

TEST_CASE("flag graph of the Fano plane joins the census when injected") {
  std::vector<SourcedGraph> items = enumerated_cubic(8);
  items.push_back({flag_graph(projective_plane(2)).graph, "flag-pg2-2"});
  VectorSource source(std::move(items));
  CubicCensus census = cubic_geodetic_census(source);
  REQUIRE(census.records.size() == 2);  // K4 and Flag(PG2(2)); Petersen needs n=10
  CHECK(census.records[1].n == 28);
  CHECK(census.records[1].diameter == 4);
  CHECK(census.records[1].connectivity == 3);
  CHECK(census.records[1].geodetic);
}

TEST_CASE("census determinism") {
  VectorSource a(enumerated_cubic(8));
  VectorSource b(enumerated_cubic(8));
  CubicCensus x = cubic_geodetic_census(a);
  CubicCensus y = cubic_geodetic_census(b, 4);
  REQUIRE(x.records.size() == y.records.size());
  for (size_t i = 0; i < x.records.size(); ++i) {
    CHECK(x.records[i].canonical == y.records[i].canonical);
    CHECK(x.records[i].provenance == y.records[i].provenance);
  }
}

TEST_CASE("self_centered equals radius == diameter recomputed") {
  VectorSource source(enumerated_cubic(8));
  CubicCensus census = cubic_geodetic_census(source);
  for (const CensusRecord& rec : census.records) {
    Graph g = parse_graph6(rec.canonical);
    GraphMetrics m = metrics(g);
    CHECK(rec.self_centered == (m.radius == m.diameter));
    CHECK(rec.radius == m.radius);
    CHECK(rec.diameter == m.diameter);
  }
}

TEST_CASE("diameter girth survey over flag graphs") {
  std::vector<SourcedGraph> items;
  for (int q : {2, 3}) {
    items.push_back({flag_graph(affine_plane(q)).graph, "affine"});
    items.push_back({flag_graph(projective_plane(q)).graph, "projective"});
  }
  VectorSource source(std::move(items));
  DiameterGirthSurvey s = diameter_girth_survey(source, 2);
  CHECK(s.scanned == 4);
  CHECK(s.qualifying == 4);
  CHECK(s.max_diameter == 5);
  // projective flags and AG2(3) carry line cliques, hence girth 3; the q=2
  // affine lines are single edges, so Flag(AG2(2)) keeps girth 9
  CHECK(s.histogram.at({4, 3}) == 2);
  CHECK(s.histogram.at({5, 3}) == 1);
  CHECK(s.histogram.at({5, 9}) == 1);
}

TEST_CASE("survey with the default degree threshold skips the low-degree graphs") {
  std::vector<SourcedGraph> items;
  items.push_back({flag_graph(affine_plane(2)).graph, "affine2"});  // flags have degree 2
  items.push_back({petersen(), "petersen"});
  VectorSource source(std::move(items));
  DiameterGirthSurvey s = diameter_girth_survey(source, 3);
  CHECK(s.qualifying == 1);
  CHECK(s.max_diameter == 2);
}

TEST_CASE("graph6 file source skips malformed lines") {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/census_source_test.g6";
  {
    std::ofstream out(path);
    out << emit_graph6(complete(4)) << "\n";
    out << "this is not graph6 \x01\n";
    out << "\n";
    out << emit_graph6(petersen()) << "\n";
  }
  Graph6FileSource source(path);
  int count = 0;
  while (auto sg = source.next()) {
    ++count;
    CHECK(sg->provenance.find(path) != std::string::npos);
  }
  CHECK(count == 2);
  CHECK(source.skipped() == 2);
  std::remove(path.c_str());
}

TEST_CASE("bundled corpus file integrity") {
  // shipped corpus: all connected cubic graphs on 12 and 14 vertices
  const char* env = std::getenv("GEODETIC_LAB_DATA");
  std::string dir = env ? env : "tests/data";
  Graph6FileSource source(dir + "/cubic12_14.g6");
  std::set<std::string> keys;
  std::map<int, int> by_order;
  while (auto sg = source.next()) {
    const Graph& g = sg->graph;
    REQUIRE(is_connected(g));
    for (int v = 0; v < g.vertex_count(); ++v) REQUIRE(g.degree(v) == 3);
    keys.insert(canonical_key(g));
    ++by_order[g.vertex_count()];
  }
  CHECK(source.skipped() == 0);
  CHECK(by_order[12] == 85);   // published census of connected cubic graphs
  CHECK(by_order[14] == 509);
  CHECK(keys.size() == 594);   // pairwise non-isomorphic
}
