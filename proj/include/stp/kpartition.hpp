#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "stp/multigraph.hpp"
#include "stp/partition.hpp"

namespace stp {

/// Tree slot index, 1-based as T_1..T_k. The value k+1 is the "no split" sentinel.
using Color = int;

/// Assignment of every edge of a graph to one of k color slots T_1..T_k.
class KPartition {
 public:
  /// Every one of m edges gets `fill`.
  KPartition(int k, int num_edges, Color fill);
  /// Throws std::invalid_argument if some color is outside 1..k.
  KPartition(int k, std::vector<Color> color_of);

  int k() const { return k_; }
  int num_edges() const { return static_cast<int>(color_of_.size()); }
  Color color_of(EdgeId e) const { return color_of_[e]; }
  const std::vector<Color>& colors() const { return color_of_; }

  /// Edge ids of T_c, increasing.
  std::vector<EdgeId> edges_of(Color c) const;

  void recolor(EdgeId e, Color c);

  friend bool operator==(const KPartition&, const KPartition&) = default;

 private:
  int k_;
  std::vector<Color> color_of_;
};

struct SequenceStep {
  Partition partition;
  Color splitter;

  friend bool operator==(const SequenceStep&, const SequenceStep&) = default;
};

/// (P_0, c_0), (P_1, c_1), ... up to the terminal partition P_inf.
///
/// Only strictly refining steps are stored; for every index past the stored
/// steps the partition is `terminal` and the splitter is k+1.
struct PartitionSequence {
  std::vector<SequenceStep> steps;
  Partition terminal;
  Color terminal_splitter = 0;

  const Partition& partition_at(std::size_t i) const {
    return i < steps.size() ? steps[i].partition : terminal;
  }
  Color splitter_at(std::size_t i) const {
    return i < steps.size() ? steps[i].splitter : terminal_splitter;
  }

  friend bool operator==(const PartitionSequence&, const PartitionSequence&) = default;
};

using Level = int;
inline constexpr Level kInfiniteLevel = std::numeric_limits<Level>::max();

/// Level of each edge, indexed by EdgeId.
using LevelMap = std::vector<Level>;

PartitionSequence build_sequence(const MultiGraph& g, const KPartition& t);

LevelMap edge_levels(const MultiGraph& g, const KPartition& t, const PartitionSequence& seq);

/// The strict order on k-partitions: true iff at the first index where the
/// (partition, splitter) pairs of a and b differ, a's partition strictly
/// refines b's, or the partitions match and a's splitter is smaller. Returns
/// false for equal or incomparable sequences.
bool precedes(const MultiGraph& g, const KPartition& a, const KPartition& b);

/// Same, on precomputed sequences.
bool precedes(const PartitionSequence& a, const PartitionSequence& b);

}  // namespace stp
