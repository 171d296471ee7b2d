#pragma once

// Straight-from-definition evaluators used as oracles by the tests. None of
// these call into the sequence, level or bridge code they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "stp/graph_io.hpp"
#include "stp/kpartition.hpp"
#include "stp/multigraph.hpp"

namespace stp::reference {

/// Component label per vertex of (V, edges) by repeated relaxation.
inline std::vector<int> component_labels(int n, const std::vector<Edge>& edges) {
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) label[v] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : edges) {
      int lo = std::min(label[e.u], label[e.v]);
      if (label[e.u] != lo || label[e.v] != lo) {
        label[e.u] = label[e.v] = lo;
        changed = true;
      }
    }
  }
  return label;
}

/// Is the subgraph of color c induced on the vertex set `cls` connected?
inline bool induced_connected(const MultiGraph& g, const KPartition& t, Color c,
                              const std::vector<VertexId>& cls) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : cls) in[v] = 1;
  std::vector<Edge> inside;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (t.color_of(e) == c && in[ed.u] && in[ed.v]) inside.push_back(ed);
  }
  auto label = component_labels(g.num_vertices(), inside);
  for (VertexId v : cls) {
    if (label[v] != label[cls.front()]) return false;
  }
  return true;
}

/// Vertex sets of the components of color c induced on cls.
inline std::vector<std::vector<VertexId>> induced_components(const MultiGraph& g,
                                                             const KPartition& t, Color c,
                                                             const std::vector<VertexId>& cls) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : cls) in[v] = 1;
  std::vector<Edge> inside;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (t.color_of(e) == c && in[ed.u] && in[ed.v]) inside.push_back(ed);
  }
  auto label = component_labels(g.num_vertices(), inside);
  std::vector<std::vector<VertexId>> out;
  std::vector<int> seen;
  for (VertexId v : cls) {
    auto it = std::find(seen.begin(), seen.end(), label[v]);
    if (it == seen.end()) {
      seen.push_back(label[v]);
      out.push_back({v});
    } else {
      out[it - seen.begin()].push_back(v);
    }
  }
  return out;
}

struct RefSequence {
  std::vector<std::vector<std::vector<VertexId>>> partitions;  // P_0 .. P_inf, as class lists
  std::vector<Color> splitters;                                 // c_0 .. (last is k+1)
};

inline std::vector<std::vector<VertexId>> canonical(std::vector<std::vector<VertexId>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

/// The associated partition sequence, evaluated literally: at each index find
/// the least color disconnected on some class and split every class by it.
inline RefSequence sequence(const MultiGraph& g, const KPartition& t) {
  std::vector<VertexId> all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  RefSequence seq;
  std::vector<std::vector<VertexId>> current{all};
  for (;;) {
    seq.partitions.push_back(canonical(current));
    Color least = t.k() + 1;
    for (Color c = 1; c <= t.k() && least > t.k(); ++c) {
      for (const auto& cls : current) {
        if (!induced_connected(g, t, c, cls)) {
          least = c;
          break;
        }
      }
    }
    seq.splitters.push_back(least);
    if (least > t.k()) return seq;
    std::vector<std::vector<VertexId>> next;
    for (const auto& cls : current) {
      for (auto& part : induced_components(g, t, least, cls)) next.push_back(std::move(part));
    }
    current = std::move(next);
  }
}

/// Largest i with both ends of e in one class of P_i, scanning every index.
inline Level level(const RefSequence& seq, const Edge& e) {
  auto together = [&](const std::vector<std::vector<VertexId>>& p) {
    for (const auto& cls : p) {
      bool a = std::find(cls.begin(), cls.end(), e.u) != cls.end();
      bool b = std::find(cls.begin(), cls.end(), e.v) != cls.end();
      if (a || b) return a && b;
    }
    return false;
  };
  Level best = 0;
  for (std::size_t i = 0; i < seq.partitions.size(); ++i) {
    if (together(seq.partitions[i])) best = static_cast<Level>(i);
  }
  // Together at the terminal index means together at every later index too.
  if (together(seq.partitions.back())) return kInfiniteLevel;
  return best;
}

/// Non-bridge edges of (V, edge_set) by deleting each edge and testing whether
/// its ends stay connected. O(|S|^2).
inline std::vector<EdgeId> cycle_edges(const MultiGraph& g, const std::vector<EdgeId>& edge_set) {
  std::vector<EdgeId> out;
  for (EdgeId e : edge_set) {
    const Edge& ed = g.edge(e);
    std::vector<Edge> others;
    for (EdgeId f : edge_set) {
      if (f != e) others.push_back(g.edge(f));
    }
    auto label = component_labels(g.num_vertices(), others);
    if (label[ed.u] == label[ed.v]) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline MultiGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return MultiGraph(n, std::move(edges));
}

inline MultiGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return MultiGraph(n, std::move(edges));
}

/// Random labelled tree via random attachment.
inline MultiGraph random_tree(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    edges.push_back({static_cast<VertexId>(rng.next() % static_cast<std::uint64_t>(v)), v});
  }
  return MultiGraph(n, std::move(edges));
}

struct CorpusEntry {
  std::uint64_t seed;
  MultiGraph graph;
};

/// Fixed-seed corpus of small random multigraphs, n in [2,6], m in [0,12].
inline std::vector<CorpusEntry> corpus(std::size_t count, std::uint64_t base_seed = 20261016) {
  SplitMix64 meta(base_seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(meta.next() % 5);
    const int m = static_cast<int>(meta.next() % 13);
    const std::uint64_t seed = meta.next();
    out.push_back({seed, random_multigraph(n, m, seed)});
  }
  return out;
}

}  // namespace stp::reference
