#pragma once

#include <span>
#include <vector>

#include "stp/partition.hpp"

namespace stp {

using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..n-1. Parallel edges and loops are
/// allowed; edge ids are positions in construction order and never change.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Throws std::invalid_argument on negative n or out-of-range endpoints.
  explicit MultiGraph(int n, std::vector<Edge> edges = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Every edge id, in increasing order.
  std::vector<EdgeId> all_edges() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// G/P: one vertex per class of p (canonical class order) and one edge per edge
/// of g whose ends lie in distinct classes, in edge-id order.
MultiGraph quotient(const MultiGraph& g, const Partition& p);

/// Number of edges of g with ends in distinct classes of p.
int crossing_edge_count(const MultiGraph& g, const Partition& p);

/// Same, restricted to the given edge ids.
int crossing_edge_count(const MultiGraph& g, std::span<const EdgeId> edge_set,
                        const Partition& p);

/// Connected components of the spanning subgraph (V(g), edge_set).
Partition components(const MultiGraph& g, std::span<const EdgeId> edge_set);

/// Components of the subgraph formed by edges of edge_set with both ends in a
/// single class of p. The result always refines p.
Partition restrict_components(const MultiGraph& g, std::span<const EdgeId> edge_set,
                              const Partition& p);

/// Non-bridge edges of (V(g), edge_set), sorted. Loops and parallel pairs count.
std::vector<EdgeId> cycle_edges(const MultiGraph& g, std::span<const EdgeId> edge_set);

/// The unique cycle of tree_edges + e, starting with the tree path from
/// g.edge(e).u to g.edge(e).v and ending with e itself.
///
/// Throws NoCycleError if the ends of e are not joined by tree_edges, and
/// std::invalid_argument if e is a loop or already in tree_edges.
std::vector<EdgeId> fundamental_cycle(const MultiGraph& g, std::span<const EdgeId> tree_edges,
                                      EdgeId e);

/// Acyclic, loop-free, connected on all of V(g), n-1 edges, no repeated ids.
bool is_spanning_tree(const MultiGraph& g, std::span<const EdgeId> edge_set);

/// Greedy spanning forest of (V(g), edge_set), scanning edges in the given order.
std::vector<EdgeId> greedy_forest(const MultiGraph& g, std::span<const EdgeId> edge_order);

}  // namespace stp
