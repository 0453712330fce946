#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

struct NonUniqueGeodesicError : GraphError {
  using GraphError::GraphError;
};
struct SmoothError : GraphError {
  using GraphError::GraphError;
};

struct GeodeticWitness {
  int u = 0;
  int v = 0;
  std::vector<int> path_a;      // u..v, length d(u,v)
  std::vector<int> path_b;      // distinct geodesic, same endpoints
  std::vector<int> closed_walk; // path_a followed by reversed path_b interior
};

struct GeodeticVerdict {
  bool geodetic = true;
  std::optional<GeodeticWitness> witness;
};

// sigma route: geodetic iff every pair has shortest-path count 1. On failure
// the witness uses the lexicographically least pair and the two
// lexicographically least geodesics, so failures are reproducible.
GeodeticVerdict is_geodetic_sigma(const Graph& g);

// Reduces a witness to an even circuit C (vertex sequence, not closed) with
// two antipodal vertices a,b on it satisfying d_C(a,b) = d_G(a,b) = |C|/2;
// returns the circuit and the indices of a and b in it.
struct EvenCircuit {
  std::vector<int> circuit;
  int antipodal_a = 0;  // index into circuit
  int antipodal_b = 0;
};
EvenCircuit even_circuit_from_witness(const Graph& g, const GeodeticWitness& w);

enum class EdgeClass : uint8_t { vertical, horizontal };

struct VerticalProfile {
  int root = 0;
  std::vector<EdgeClass> edge_class;  // indexed like Graph::edges()
  std::vector<int64_t> heights;       // heights[i] = Vv(i); index 0 unused
  std::vector<int64_t> spheres;       // spheres[i] = |N_i(root)|
  int64_t horizontal_count = 0;
};

VerticalProfile vertical_profile(const Graph& g, int root);

// Spanning-tree route: geodetic iff for every root the vertical edges number
// exactly n-1. Vertical edges always contain a BFS tree, hence form a
// connected spanning subgraph; n-1 of them is therefore equivalent to a tree.
bool is_geodetic_vertical(const Graph& g);

// The unique shortest u..v path; throws NonUniqueGeodesicError when there are
// several, DisconnectedError when there is none.
std::vector<int> geodesic(const Graph& g, int u, int v);

struct BlockVerdict {
  std::vector<int> vertices;  // original vertex ids
  GeodeticVerdict verdict;    // witness vertices in original ids
};

struct BlocksVerdict {
  bool geodetic = true;
  std::vector<BlockVerdict> blocks;
};

// Per-block verdicts; overall true iff every block is geodetic.
BlocksVerdict blocks_geodetic(const Graph& g);

struct WeightedGraph {
  Graph graph;
  std::vector<int64_t> weights;  // indexed like graph.edges()
  int64_t weight(int u, int v) const;
};

struct SmoothResult {
  WeightedGraph weighted;
  std::vector<int> vertex_map;  // smoothed id -> original id
};

// Collapses every maximal path of degree-2 vertices between branch vertices
// (degree >= 3) into a single weighted edge. Rejects graphs where the result
// would not be simple (theta chains, cycles hanging off one branch vertex)
// and graphs without branch vertices.
SmoothResult smooth(const Graph& g);

// Decides geodeticity of the graph the weights describe, i.e. of the
// subdivision in which a weight-w edge stands for a path of w unit edges.
// Vertex pairs are checked by Dijkstra with saturating path counts; ties
// seated at interior positions of weighted edges are found arithmetically
// from distances in the graph minus the carrier edge(s).
bool is_geodetic_weighted(const WeightedGraph& wg);

}  // namespace geodetic
