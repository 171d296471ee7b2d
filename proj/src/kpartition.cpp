#include "stp/kpartition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace stp {

KPartition::KPartition(int k, int num_edges, Color fill)
    : KPartition(k, std::vector<Color>(num_edges, fill)) {}

KPartition::KPartition(int k, std::vector<Color> color_of) : k_(k), color_of_(std::move(color_of)) {
  if (k < 1) throw std::invalid_argument("k-partition needs k >= 1");
  for (std::size_t e = 0; e < color_of_.size(); ++e) {
    if (color_of_[e] < 1 || color_of_[e] > k) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has color " +
                                  std::to_string(color_of_[e]) + " outside 1.." +
                                  std::to_string(k));
    }
  }
}

std::vector<EdgeId> KPartition::edges_of(Color c) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (color_of_[e] == c) out.push_back(e);
  }
  return out;
}

void KPartition::recolor(EdgeId e, Color c) {
  if (c < 1 || c > k_) throw std::invalid_argument("color out of range");
  color_of_.at(e) = c;
}

PartitionSequence build_sequence(const MultiGraph& g, const KPartition& t) {
  if (t.num_edges() != g.num_edges()) {
    throw std::invalid_argument("k-partition does not cover the graph's edges");
  }
  std::vector<std::vector<EdgeId>> color_edges;
  for (Color c = 1; c <= t.k(); ++c) color_edges.push_back(t.edges_of(c));

  PartitionSequence seq;
  Partition current = Partition::trivial(g.num_vertices());
  for (;;) {
    bool split = false;
    for (Color c = 1; c <= t.k(); ++c) {
      // T_c is disconnected on some class exactly when its classwise
      // components differ from the current partition.
      Partition next = restrict_components(g, color_edges[c - 1], current);
      if (next != current) {
        seq.steps.push_back({std::move(current), c});
        current = std::move(next);
        split = true;
        break;
      }
    }
    if (!split) break;
  }
  seq.terminal = std::move(current);
  seq.terminal_splitter = t.k() + 1;
  return seq;
}

LevelMap edge_levels(const MultiGraph& g, const KPartition& t, const PartitionSequence& seq) {
  if (t.num_edges() != g.num_edges()) {
    throw std::invalid_argument("k-partition does not cover the graph's edges");
  }
  LevelMap level(g.num_edges(), kInfiniteLevel);
  const std::size_t last = seq.steps.size();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    // P_0 is trivial, so the first separation happens at some i >= 1 and
    // the level is i - 1.
    for (std::size_t i = 1; i <= last; ++i) {
      if (!seq.partition_at(i).same_class(ed.u, ed.v)) {
        level[e] = static_cast<Level>(i - 1);
        break;
      }
    }
  }
  return level;
}

bool precedes(const PartitionSequence& a, const PartitionSequence& b) {
  if (a.terminal_splitter != b.terminal_splitter) {
    throw std::invalid_argument("sequences of k-partitions with different k");
  }
  if (a.terminal.ground_size() != b.terminal.ground_size()) {
    throw std::invalid_argument("sequences over different vertex sets");
  }
  // Past both stored lengths the pairs repeat forever, so one extra index
  // settles the comparison.
  const std::size_t horizon = std::max(a.steps.size(), b.steps.size()) + 1;
  for (std::size_t j = 0; j < horizon; ++j) {
    const Partition& pa = a.partition_at(j);
    const Partition& pb = b.partition_at(j);
    const Color ca = a.splitter_at(j);
    const Color cb = b.splitter_at(j);
    if (pa == pb && ca == cb) continue;
    if (pa == pb) return ca < cb;
    return strictly_refines(pa, pb);
  }
  return false;
}

bool precedes(const MultiGraph& g, const KPartition& a, const KPartition& b) {
  if (a.k() != b.k()) throw std::invalid_argument("k-partitions with different k");
  if (a.num_edges() != g.num_edges() || b.num_edges() != g.num_edges()) {
    throw std::invalid_argument("k-partition does not match the graph");
  }
  return precedes(build_sequence(g, a), build_sequence(g, b));
}

}  // namespace stp
