#include "stp/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "stp/disjoint_sets.hpp"
#include "stp/errors.hpp"

namespace stp {

namespace {

void check_edge_ids(const MultiGraph& g, std::span<const EdgeId> edge_set) {
  for (EdgeId e : edge_set) {
    if (e < 0 || e >= g.num_edges()) {
      throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
    }
  }
}

void check_partition(const MultiGraph& g, const Partition& p) {
  if (p.ground_size() != g.num_vertices()) {
    throw InvalidPartitionError("partition covers " + std::to_string(p.ground_size()) +
                                " vertices, graph has " + std::to_string(g.num_vertices()));
  }
}

struct Incidence {
  VertexId to;
  EdgeId id;
};

std::vector<std::vector<Incidence>> adjacency(const MultiGraph& g,
                                              std::span<const EdgeId> edge_set) {
  std::vector<std::vector<Incidence>> adj(g.num_vertices());
  for (EdgeId e : edge_set) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    adj[ed.u].push_back({ed.v, e});
    adj[ed.v].push_back({ed.u, e});
  }
  return adj;
}

}  // namespace

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    }
  }
}

std::vector<EdgeId> MultiGraph::all_edges() const {
  std::vector<EdgeId> ids(edges_.size());
  for (EdgeId e = 0; e < num_edges(); ++e) ids[e] = e;
  return ids;
}

MultiGraph quotient(const MultiGraph& g, const Partition& p) {
  check_partition(g, p);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    int a = p.class_of(e.u);
    int b = p.class_of(e.v);
    if (a != b) out.push_back({a, b});
  }
  return MultiGraph(p.size(), std::move(out));
}

int crossing_edge_count(const MultiGraph& g, const Partition& p) {
  check_partition(g, p);
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (!p.same_class(e.u, e.v)) ++count;
  }
  return count;
}

int crossing_edge_count(const MultiGraph& g, std::span<const EdgeId> edge_set,
                        const Partition& p) {
  check_partition(g, p);
  check_edge_ids(g, edge_set);
  int count = 0;
  for (EdgeId e : edge_set) {
    if (!p.same_class(g.edge(e).u, g.edge(e).v)) ++count;
  }
  return count;
}

Partition components(const MultiGraph& g, std::span<const EdgeId> edge_set) {
  return restrict_components(g, edge_set, Partition::trivial(g.num_vertices()));
}

Partition restrict_components(const MultiGraph& g, std::span<const EdgeId> edge_set,
                              const Partition& p) {
  check_partition(g, p);
  check_edge_ids(g, edge_set);
  DisjointSets dsu(g.num_vertices());
  for (EdgeId e : edge_set) {
    const Edge& ed = g.edge(e);
    if (p.same_class(ed.u, ed.v)) dsu.unite(ed.u, ed.v);
  }
  return Partition::from_labels(dsu.labels());
}

std::vector<EdgeId> cycle_edges(const MultiGraph& g, std::span<const EdgeId> edge_set) {
  check_edge_ids(g, edge_set);
  const int n = g.num_vertices();
  auto adj = adjacency(g, edge_set);

  // Iterative low-link DFS. Skipping the tree edge by id (not by parent
  // vertex) makes a parallel copy count as a back edge.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_bridge(g.num_edges(), 0);
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  int timer = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const Incidence inc = adj[f.v][f.next++];
        if (inc.id == f.via) continue;
        if (disc[inc.to] == -1) {
          disc[inc.to] = low[inc.to] = timer++;
          stack.push_back({inc.to, inc.id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[inc.to]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) is_bridge[done.via] = 1;
        }
      }
    }
  }

  std::vector<EdgeId> out;
  for (EdgeId e : edge_set) {
    if (!is_bridge[e]) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeId> fundamental_cycle(const MultiGraph& g, std::span<const EdgeId> tree_edges,
                                      EdgeId e) {
  check_edge_ids(g, tree_edges);
  check_edge_ids(g, std::span<const EdgeId>(&e, 1));
  const Edge& closing = g.edge(e);
  if (closing.is_loop()) throw std::invalid_argument("fundamental cycle of a loop");
  if (std::find(tree_edges.begin(), tree_edges.end(), e) != tree_edges.end()) {
    throw std::invalid_argument("edge " + std::to_string(e) + " is already a tree edge");
  }

  auto adj = adjacency(g, tree_edges);
  std::vector<EdgeId> via(g.num_vertices(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> queue{closing.u};
  seen[closing.u] = 1;
  for (std::size_t head = 0; head < queue.size() && !seen[closing.v]; ++head) {
    VertexId x = queue[head];
    for (const Incidence& inc : adj[x]) {
      if (seen[inc.to]) continue;
      seen[inc.to] = 1;
      via[inc.to] = inc.id;
      queue.push_back(inc.to);
    }
  }
  if (!seen[closing.v]) {
    throw NoCycleError("ends of edge " + std::to_string(e) + " are not joined by the tree");
  }

  std::vector<EdgeId> cycle;
  for (VertexId x = closing.v; x != closing.u; x = g.edge(via[x]).other(x)) {
    cycle.push_back(via[x]);
  }
  std::reverse(cycle.begin(), cycle.end());
  cycle.push_back(e);
  return cycle;
}

bool is_spanning_tree(const MultiGraph& g, std::span<const EdgeId> edge_set) {
  const int n = g.num_vertices();
  if (n == 0) return edge_set.empty();
  if (static_cast<int>(edge_set.size()) != n - 1) return false;
  DisjointSets dsu(n);
  for (EdgeId e : edge_set) {
    if (e < 0 || e >= g.num_edges()) return false;
    // Repeated ids and loops both show up as a failed union.
    if (!dsu.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

std::vector<EdgeId> greedy_forest(const MultiGraph& g, std::span<const EdgeId> edge_order) {
  check_edge_ids(g, edge_order);
  DisjointSets dsu(g.num_vertices());
  std::vector<EdgeId> forest;
  for (EdgeId e : edge_order) {
    if (dsu.unite(g.edge(e).u, g.edge(e).v)) forest.push_back(e);
  }
  return forest;
}

}  // namespace stp
