#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geodetic {

// Sentinel for "no finite distance" (disconnected pair, acyclic girth).
// Deliberately not a large number so it can never be mistaken for a hop count.
inline constexpr int kInf = -1;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DisconnectedError : GraphError {
  using GraphError::GraphError;
};

enum class VertexTag : uint8_t { plain, point, line, flag };

// Immutable simple undirected graph. Vertex ids are 0..n-1, neighbor lists
// sorted ascending, adjacency symmetric, no loops or parallel edges.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int64_t edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;
  int min_degree() const;

  // Edges as (u,v) with u < v, sorted lexicographically. Stable edge ids.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_index(int u, int v) const;  // -1 if absent

  bool has_tags() const { return !tags_.empty(); }
  VertexTag tag(int v) const { return tags_.empty() ? VertexTag::plain : tags_[v]; }
  const std::vector<VertexTag>& tags() const { return tags_; }

  friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);
  friend Graph with_tags(Graph g, std::vector<VertexTag> tags);

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexTag> tags_;
  int64_t edge_count_ = 0;
};

// Validates endpoints, rejects self-loops, deduplicates parallel edges.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);
Graph with_tags(Graph g, std::vector<VertexTag> tags);

// Relabel: vertex v of g becomes position(v) in the result.
Graph relabel(const Graph& g, const std::vector<int>& order);

// Induced subgraph on the given vertices (sorted ascending internally);
// returns the subgraph and the map new-id -> old-id.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& vertices);

uint64_t graph_hash(const Graph& g);

struct BfsResult {
  std::vector<int> dist;                 // kInf where unreachable
  std::vector<uint64_t> sigma;           // shortest-path counts, saturating
  std::vector<std::vector<int>> parents; // neighbors one layer closer to source
};

// sigma_cap >= 2; counts saturate there. The default 2 is all geodeticity
// needs; tests that want true counts pass a large cap.
BfsResult bfs_layers(const Graph& g, int source, uint64_t sigma_cap = 2);

struct DistanceMatrix {
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<uint64_t>> sigma;
};

DistanceMatrix all_pairs(const Graph& g, uint64_t sigma_cap = 2);

struct GraphMetrics {
  int diameter = 0;
  int radius = 0;
  int girth = kInf;  // kInf when acyclic
  int min_degree = 0;
  int connectivity = 0;
};

// Exact metrics via all-source BFS; throws DisconnectedError.
GraphMetrics metrics(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

struct ConnectivityResult {
  int connectivity = 0;
  // Minimum vertex cut; empty when the graph is complete (kappa = n-1) or
  // disconnected (kappa = 0).
  std::vector<int> cut;
};

int vertex_connectivity(const Graph& g);
ConnectivityResult vertex_connectivity_with_cut(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // vertex sets, sorted
  std::vector<int> cut_vertices;         // sorted
};

BlockDecomposition biconnected_blocks(const Graph& g);

struct TwoCut {
  int x = 0;
  int y = 0;
  int distance = kInf;  // d(x,y) in g
};

// All unordered pairs whose removal disconnects g, lexicographic order.
std::vector<TwoCut> enumerate_two_cuts(const Graph& g);

}  // namespace geodetic
