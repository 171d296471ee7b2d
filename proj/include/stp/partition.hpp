#pragma once

#include <span>
#include <vector>

namespace stp {

using VertexId = int;

/// A partition of the vertex set {0, ..., n-1} in canonical form.
///
/// Classes are ordered by their minimum vertex and each class lists its
/// vertices in increasing order, so two partitions of the same family are
/// equal as values regardless of how they were built.
class Partition {
 public:
  Partition() = default;

  /// The one-class partition {V}.
  static Partition trivial(int n);
  static Partition singletons(int n);

  /// Builds from an arbitrary label per vertex; vertices sharing a label share
  /// a class. Labels need not be dense.
  static Partition from_labels(std::span<const int> labels);

  /// Builds from a family of classes. Throws InvalidPartitionError unless the
  /// classes are nonempty, disjoint and cover [0, n).
  static Partition from_classes(int n, const std::vector<std::vector<VertexId>>& classes);

  int ground_size() const { return static_cast<int>(class_of_.size()); }
  int size() const { return static_cast<int>(classes_.size()); }

  int class_of(VertexId v) const { return class_of_[v]; }
  const std::vector<VertexId>& members(int cls) const { return classes_[cls]; }
  const std::vector<std::vector<VertexId>>& classes() const { return classes_; }
  const std::vector<int>& class_map() const { return class_of_; }

  bool same_class(VertexId u, VertexId v) const { return class_of_[u] == class_of_[v]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> class_of_;
  std::vector<std::vector<VertexId>> classes_;
};

/// True iff every class of p is a subset of a class of q.
bool refines(const Partition& p, const Partition& q);

/// refines(p, q) and p != q.
bool strictly_refines(const Partition& p, const Partition& q);

/// Index of the class holding v.
int class_containing(const Partition& p, VertexId v);

}  // namespace stp
