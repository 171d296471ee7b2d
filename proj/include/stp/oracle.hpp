#pragma once

#include <span>
#include <string>
#include <vector>

#include "stp/multigraph.hpp"
#include "stp/partition.hpp"

namespace stp {

inline constexpr int kMaxEnumerationSize = 12;

/// Streams every partition of {0, ..., n-1} exactly once as restricted growth
/// strings in lexicographic order: the trivial partition first, singletons last.
class PartitionEnumerator {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= kMaxEnumerationSize.
  explicit PartitionEnumerator(int n);

  /// Current restricted growth string; labels[v] is v's class.
  const std::vector<int>& labels() const { return labels_; }
  Partition partition() const { return Partition::from_labels(labels_); }
  int num_classes() const;

  /// Moves to the next partition; false once the stream is exhausted.
  bool next();

 private:
  std::vector<int> labels_;
  std::vector<int> prefix_max_;  // max of labels_[0..v]
};

std::vector<Partition> enumerate_partitions(int n);

struct DensityReport {
  long long margin = 0;  // min over P of |E(G/P)| - k(|P|-1)
  Partition witness;     // first partition in enumeration order reaching the minimum
};

DensityReport density_margin(const MultiGraph& g, int k);

/// Pass/fail with the first violated property spelled out.
struct Verdict {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

Verdict verify_packing(const MultiGraph& g, std::span<const std::vector<EdgeId>> trees, int k);

/// True iff quotient(g, p) has fewer than k(|p|-1) edges.
/// Throws InvalidPartitionError if p is not a partition of V(g).
Verdict verify_certificate(const MultiGraph& g, const Partition& p, int k);

/// Exhaustive k-coloring search for k disjoint spanning trees. Limited to
/// n <= 4, m <= 8, k <= 2.
bool has_packing_by_coloring(const MultiGraph& g, int k);

}  // namespace stp
