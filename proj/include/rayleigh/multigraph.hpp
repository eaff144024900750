#pragma once

#include <string>
#include <vector>

namespace rayleigh {

using VertexId = int;
using EdgeId = int;

/// An edge of a multigraph. Equal endpoints denote a loop.
struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  bool is_loop() const { return u == v; }
  bool incident(VertexId w) const { return u == w || v == w; }
  /// The endpoint other than w. For a loop this is w itself.
  VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// An edge together with a chosen direction. {tail, head} must equal the
/// endpoint pair of the underlying edge.
struct OrientedEdge {
  EdgeId id;
  VertexId tail;
  VertexId head;
};

struct BlockDecomposition {
  std::vector<std::vector<EdgeId>> blocks;  // each sorted; sorted by first id
  std::vector<VertexId> cut_vertices;       // sorted
};

/// Undirected multigraph (loops and parallel edges allowed) with stable edge
/// identities under minors. Values are immutable after construction; deletion
/// and contraction return new graphs.
class Multigraph {
 public:
  Multigraph() = default;

  /// Builds a graph from explicit vertex and edge lists. Throws
  /// std::invalid_argument on duplicate ids or dangling endpoints.
  static Multigraph make(std::vector<VertexId> vertices, std::vector<Edge> edges);

  int n() const { return static_cast<int>(vertices_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  std::vector<EdgeId> edge_ids() const;

  /// Edges incident with v, in id order (loops listed once).
  std::vector<EdgeId> edges_at(VertexId v) const;

  /// Endpoint count at v; a loop contributes 2.
  int degree(VertexId v) const;

  Multigraph delete_edge(EdgeId id) const;

  /// Contracts a non-loop edge, merging its endpoints into the smaller
  /// VertexId. Contracting a loop is defined as deleting it.
  Multigraph contract_edge(EdgeId id) const;

  /// Removes a vertex together with all incident edges.
  Multigraph delete_vertex(VertexId v) const;

  bool is_connected() const;

  /// Standard block decomposition. Requires a connected graph; every loop
  /// forms its own block.
  BlockDecomposition blocks_and_cut_vertices() const;

  /// Canonical text form "n:v1,v2,...;id:u-v,id:u-v,..." usable as a cache or
  /// fingerprint key.
  std::string canonical_key() const;

  bool operator==(const Multigraph& o) const {
    return vertices_ == o.vertices_ && edge_key_ == o.edge_key_;
  }

 private:
  std::vector<VertexId> vertices_;  // sorted ascending
  std::vector<Edge> edges_;         // sorted by id
  std::vector<long long> edge_key_; // packed (id,u,v) for equality

  void rebuild_key();
};

/// Convenience builders used throughout the tests.
Multigraph path_graph(int n_vertices);                       // ids 1..n-1
Multigraph cycle_graph(int n_vertices);                      // ids 1..n
Multigraph banana_graph(int n_parallel_edges);               // 2 vertices, ids 1..k
Multigraph complete_graph_k4();                              // the fixture labelling

}  // namespace rayleigh
