#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

// Canonical labeling by iterated color refinement with backtracking over the
// first non-singleton cell; the canonical form is the lexicographically
// least upper-triangle bit string over the explored orderings. Exact at
// desk scale; two graphs get equal keys iff they are isomorphic.
std::vector<int> canonical_labeling(const Graph& g);  // order: position -> vertex
std::string canonical_key(const Graph& g);
std::string canonical_graph6(const Graph& g);

struct EnumerateConstraints {
  int min_degree = 0;
  bool connected = false;
  std::optional<int> regular_degree;
};

// Every isomorphism class on exactly n vertices satisfying the constraints,
// once each, in canonical-key order. Vertex-by-vertex augmentation with
// canonical-form deduplication per level. Hard cap n <= 10; ingest an
// external corpus beyond that.
std::vector<Graph> enumerate_graphs(int n, const EnumerateConstraints& constraints = {});

namespace detail {
// Cap-free core, used to prepare bundled corpora and by enumerate_graphs.
std::vector<Graph> enumerate_unchecked(int n, const EnumerateConstraints& constraints);
}  // namespace detail

}  // namespace geodetic
