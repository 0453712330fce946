#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

// Profile of a 2-cut {x,y}: the phi mapping into the king-move lattice and
// the diagonal classes R_j / L_j with d(v,y) - d(v,x) = j. Vertices of
// components beyond the first two stay unmapped.
struct CutProfile {
  int x = 0;
  int y = 0;
  int ell = 0;                       // d(x,y)
  std::vector<int> geodesic_xy;      // lexicographically least shortest path
  bool non_geodetic_basis = false;   // sigma(x,y) >= 2
  std::vector<std::vector<int>> components;  // A1 first, then A2, then the rest
  std::vector<std::optional<std::pair<int, int>>> phi;  // per vertex (xi, eta)
  // diagonal j is stored at index j + ell, j in [-ell, ell]
  std::vector<std::vector<int>> r_diag;
  std::vector<std::vector<int>> l_diag;
  uint64_t graph_hash = 0;
};

// Among all 2-cuts one minimizing d(x,y), ties broken lexicographically.
std::optional<TwoCut> min_distance_two_cut(const Graph& g);

CutProfile cut_profile(const Graph& g, int x, int y);

enum class LemmaStatus { holds, violated };

struct LemmaCheck {
  std::string lemma;
  LemmaStatus status = LemmaStatus::holds;
  std::string witness;  // replayable description when violated
};

struct LemmaCheckReport {
  std::vector<LemmaCheck> checks;
  bool all_hold() const;
  const LemmaCheck& find(const std::string& lemma) const;
};

// Instantiates the cut lemmas as predicates on the profile:
// two-components, geodesic-containment, antipodal-emptiness, neighbor-jump,
// phi-contraction, SE-edge-existence and find-square (both orientations).
// Violations are reported, not thrown; geodetic inputs with min degree >= 3
// must satisfy all of them.
LemmaCheckReport check_cut_lemmas(const Graph& g, const CutProfile& profile);

// Occupancy counts of the diagonals as a text grid, one row per j.
std::string diagonal_grid(const CutProfile& profile);

struct SourcedGraph {
  Graph graph;
  std::string provenance;
};

// Pull-based single-pass stream of graphs.
class GraphSource {
 public:
  virtual ~GraphSource() = default;
  virtual std::optional<SourcedGraph> next() = 0;
  virtual int64_t skipped() const { return 0; }
};

struct Theorem1Survey {
  // geodetic blocks tallied by (n, kappa, diameter, girth)
  std::map<std::tuple<int, int, int, int>, int64_t> tally;
  std::vector<std::string> counterexamples;  // graph6 of any violating graph
  int64_t graphs_seen = 0;
  int64_t skipped = 0;
};

// Scans a corpus for counterexamples to "2-connected geodetic with minimum
// degree >= 3 implies 3-connected". jobs > 1 parallelizes per graph; results
// are merged in input order either way.
Theorem1Survey theorem1_scan(GraphSource& source, int jobs = 1);

}  // namespace geodetic
