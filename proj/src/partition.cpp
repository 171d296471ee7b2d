#include "stp/partition.hpp"

#include <string>
#include <unordered_map>

#include "stp/errors.hpp"

namespace stp {

namespace {

void require_same_ground(const Partition& p, const Partition& q) {
  if (p.ground_size() != q.ground_size()) {
    throw InvalidPartitionError("partitions over different ground sets (" +
                                std::to_string(p.ground_size()) + " vs " +
                                std::to_string(q.ground_size()) + ")");
  }
}

}  // namespace

Partition Partition::trivial(int n) {
  return from_labels(std::vector<int>(n, 0));
}

Partition Partition::singletons(int n) {
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = v;
  return from_labels(labels);
}

Partition Partition::from_labels(std::span<const int> labels) {
  Partition p;
  p.class_of_.resize(labels.size());
  // Scanning vertices in order and numbering labels by first occurrence puts
  // classes in min-vertex order and keeps each class sorted.
  std::unordered_map<int, int> relabel;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = relabel.try_emplace(labels[v], static_cast<int>(p.classes_.size()));
    if (inserted) p.classes_.emplace_back();
    p.class_of_[v] = it->second;
    p.classes_[it->second].push_back(static_cast<VertexId>(v));
  }
  return p;
}

Partition Partition::from_classes(int n, const std::vector<std::vector<VertexId>>& classes) {
  if (n < 0) throw InvalidPartitionError("negative ground set size");
  std::vector<int> labels(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw InvalidPartitionError("empty class");
    for (VertexId v : classes[c]) {
      if (v < 0 || v >= n) {
        throw InvalidPartitionError("vertex " + std::to_string(v) + " out of range");
      }
      if (labels[v] != -1) {
        throw InvalidPartitionError("vertex " + std::to_string(v) + " in two classes");
      }
      labels[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (labels[v] == -1) {
      throw InvalidPartitionError("vertex " + std::to_string(v) + " not covered");
    }
  }
  return from_labels(labels);
}

bool refines(const Partition& p, const Partition& q) {
  require_same_ground(p, q);
  // Each class of p maps to the q-class of its first member; every other
  // member must agree.
  std::vector<int> target(p.size(), -1);
  for (VertexId v = 0; v < p.ground_size(); ++v) {
    int& t = target[p.class_of(v)];
    if (t == -1) {
      t = q.class_of(v);
    } else if (t != q.class_of(v)) {
      return false;
    }
  }
  return true;
}

bool strictly_refines(const Partition& p, const Partition& q) {
  return refines(p, q) && p != q;
}

int class_containing(const Partition& p, VertexId v) {
  if (v < 0 || v >= p.ground_size()) {
    throw InvalidPartitionError("vertex " + std::to_string(v) + " out of range");
  }
  return p.class_of(v);
}

}  // namespace stp
