#include "stp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "stp/errors.hpp"

namespace stp {

PartitionEnumerator::PartitionEnumerator(int n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw std::invalid_argument("partition enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationSize) + ", got " +
                                std::to_string(n));
  }
  labels_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

int PartitionEnumerator::num_classes() const { return prefix_max_.back() + 1; }

bool PartitionEnumerator::next() {
  const int n = static_cast<int>(labels_.size());
  // Bump the rightmost position that may still grow: a[v] <= max(a[0..v-1]) + 1.
  for (int v = n - 1; v >= 1; --v) {
    if (labels_[v] <= prefix_max_[v - 1]) {
      ++labels_[v];
      prefix_max_[v] = std::max(prefix_max_[v - 1], labels_[v]);
      for (int w = v + 1; w < n; ++w) {
        labels_[w] = 0;
        prefix_max_[w] = prefix_max_[v];
      }
      return true;
    }
  }
  return false;
}

std::vector<Partition> enumerate_partitions(int n) {
  PartitionEnumerator it(n);
  std::vector<Partition> out;
  do {
    out.push_back(it.partition());
  } while (it.next());
  return out;
}

DensityReport density_margin(const MultiGraph& g, int k) {
  PartitionEnumerator it(g.num_vertices());
  DensityReport report;
  report.margin = std::numeric_limits<long long>::max();
  std::vector<int> best;
  do {
    const auto& labels = it.labels();
    long long crossing = 0;
    for (const Edge& e : g.edges()) {
      if (labels[e.u] != labels[e.v]) ++crossing;
    }
    const long long margin = crossing - static_cast<long long>(k) * (it.num_classes() - 1);
    if (margin < report.margin) {
      report.margin = margin;
      best = labels;
    }
  } while (it.next());
  report.witness = Partition::from_labels(best);
  return report;
}

Verdict verify_packing(const MultiGraph& g, std::span<const std::vector<EdgeId>> trees, int k) {
  if (static_cast<int>(trees.size()) != k) {
    return Verdict::fail("expected " + std::to_string(k) + " trees, got " +
                         std::to_string(trees.size()));
  }
  std::vector<int> owner(g.num_edges(), -1);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const std::string name = "tree " + std::to_string(i + 1);
    for (EdgeId e : trees[i]) {
      if (e < 0 || e >= g.num_edges()) {
        return Verdict::fail(name + ": edge id " + std::to_string(e) + " out of range");
      }
      if (owner[e] != -1) {
        return Verdict::fail(name + ": edge " + std::to_string(e) + " already used by tree " +
                             std::to_string(owner[e] + 1));
      }
      owner[e] = static_cast<int>(i);
    }
    for (EdgeId e : trees[i]) {
      if (g.edge(e).is_loop()) {
        return Verdict::fail(name + ": edge " + std::to_string(e) + " is a loop");
      }
    }
    if (static_cast<int>(trees[i].size()) != g.num_vertices() - 1) {
      return Verdict::fail(name + ": has " + std::to_string(trees[i].size()) + " edges, need " +
                           std::to_string(g.num_vertices() - 1));
    }
    if (!is_spanning_tree(g, trees[i])) {
      return Verdict::fail(name + ": contains a cycle or does not span");
    }
  }
  return {};
}

Verdict verify_certificate(const MultiGraph& g, const Partition& p, int k) {
  const long long edges = quotient(g, p).num_edges();
  const long long bound = static_cast<long long>(k) * (p.size() - 1);
  if (edges < bound) return {};
  return Verdict::fail("quotient has " + std::to_string(edges) + " edges, not fewer than " +
                       std::to_string(bound));
}

bool has_packing_by_coloring(const MultiGraph& g, int k) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (n > 4 || m > 8 || k > 2 || k < 0) {
    throw std::invalid_argument("exhaustive coloring limited to n <= 4, m <= 8, k <= 2");
  }
  if (k == 0 || n <= 1) return true;
  // Color k means "unused"; colors 0..k-1 are trees.
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= k + 1;
  std::vector<std::vector<EdgeId>> trees(k);
  for (long long code = 0; code < total; ++code) {
    for (auto& t : trees) t.clear();
    long long c = code;
    for (EdgeId e = 0; e < m; ++e, c /= k + 1) {
      const int color = static_cast<int>(c % (k + 1));
      if (color < k) trees[color].push_back(e);
    }
    if (std::all_of(trees.begin(), trees.end(),
                    [&](const auto& t) { return is_spanning_tree(g, t); })) {
      return true;
    }
  }
  return false;
}

}  // namespace stp
