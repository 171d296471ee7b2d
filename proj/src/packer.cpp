#include "stp/packer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "stp/errors.hpp"

namespace stp {

namespace {

bool trees_are_spanning(const MultiGraph& g, const KPartition& t) {
  for (Color c = 1; c < t.k(); ++c) {
    if (!is_spanning_tree(g, t.edges_of(c))) return false;
  }
  return true;
}

bool connected(const MultiGraph& g, std::span<const EdgeId> edge_set) {
  return components(g, edge_set).size() <= 1;
}

/// Lowest (level, id) among `candidates` with finite level, or -1.
EdgeId lowest_level_edge(std::span<const EdgeId> candidates, const LevelMap& level) {
  EdgeId best = -1;
  for (EdgeId e : candidates) {
    if (level[e] == kInfiniteLevel) continue;
    if (best == -1 || level[e] < level[best] || (level[e] == level[best] && e < best)) {
      best = e;
    }
  }
  return best;
}

}  // namespace

std::size_t PackResult::total_exchanges() const {
  return std::accumulate(exchanges_per_stage.begin(), exchanges_per_stage.end(), std::size_t{0});
}

std::optional<Partition> density_check(const MultiGraph& g, const KPartition& t,
                                       const PartitionSequence& seq) {
  if (t.num_edges() != g.num_edges()) {
    throw InternalInvariantError("k-partition does not match the graph");
  }
  if (!trees_are_spanning(g, t)) {
    throw InternalInvariantError("density check: colors 1..k-1 must be spanning trees");
  }
  const std::vector<EdgeId> rest = t.edges_of(t.k());
  if (connected(g, rest)) {
    throw InternalInvariantError("density check: T_k is already connected");
  }
  const Partition& terminal = seq.terminal;
  const int crossing = crossing_edge_count(g, rest, terminal);
  // Each tree contributes exactly |P|-1 crossing edges, so the quotient has
  // (k-1)(|P|-1) + crossing edges.
  if (crossing < terminal.size() - 1) return terminal;
  return std::nullopt;
}

std::pair<KPartition, ExchangeTrace> exchange_step(const MultiGraph& g, const KPartition& t,
                                                   const PartitionSequence& seq) {
  const int k = t.k();
  const LevelMap level = edge_levels(g, t, seq);

  ExchangeTrace tr;
  const std::vector<EdgeId> rest = t.edges_of(k);
  tr.e = lowest_level_edge(cycle_edges(g, rest), level);
  if (tr.e == -1) {
    throw InternalInvariantError("no finite-level edge lies on a cycle of T_k");
  }
  tr.m = level[tr.e];
  tr.color = seq.splitter_at(static_cast<std::size_t>(tr.m));
  if (tr.color < 1 || tr.color >= k) {
    throw InternalInvariantError("splitter at the level of e is not a tree color");
  }
  const Edge& e_ends = g.edge(tr.e);
  const Partition& pm = seq.partition_at(static_cast<std::size_t>(tr.m));
  tr.class_p = pm.members(pm.class_of(e_ends.u));

  try {
    tr.cycle = fundamental_cycle(g, t.edges_of(tr.color), tr.e);
  } catch (const NoCycleError& ex) {
    throw InternalInvariantError(std::string("tree color is not spanning: ") + ex.what());
  }
  tr.e_prime = lowest_level_edge(tr.cycle, level);
  tr.j = tr.e_prime == -1 ? kInfiniteLevel : level[tr.e_prime];
  if (tr.e_prime == -1 || tr.j >= tr.m) {
    throw InternalInvariantError("fundamental cycle has no edge below the level of e");
  }
  const Partition& pj = seq.partition_at(static_cast<std::size_t>(tr.j));
  const int q = pj.class_of(g.edge(tr.e_prime).u);
  tr.class_q = pj.members(q);
  for (EdgeId c : tr.cycle) {
    if (pj.class_of(g.edge(c).u) != q || pj.class_of(g.edge(c).v) != q) {
      throw InternalInvariantError("fundamental cycle leaves the class of e'");
    }
  }

  KPartition next = t;
  next.recolor(tr.e, tr.color);
  next.recolor(tr.e_prime, k);
  return {std::move(next), std::move(tr)};
}

StageResult run_stage(const MultiGraph& g, KPartition t, std::size_t exchange_cap,
                      const PackOptions& options) {
  const int k = t.k();
  StageResult result{std::move(t), std::nullopt, 0, {}};
  KPartition& current = result.coloring;
  for (;;) {
    if (connected(g, current.edges_of(k))) return result;

    PartitionSequence seq = build_sequence(g, current);
    if (auto violated = density_check(g, current, seq)) {
      result.certificate = std::move(*violated);
      return result;
    }
    if (result.exchanges >= exchange_cap) {
      throw InternalInvariantError("exchange cap of " + std::to_string(exchange_cap) +
                                   " reached in stage " + std::to_string(k));
    }

    auto [next, tr] = exchange_step(g, current, seq);
    if (!trees_are_spanning(g, next)) {
      throw InternalInvariantError("exchange broke a tree color");
    }
    if (options.on_exchange) options.on_exchange(g, current, next, tr);
    if (options.record_trace) {
      result.trace.push_back({k, std::move(seq), std::move(tr)});
    }
    current = std::move(next);
    ++result.exchanges;
  }
}

StageResult run_stage(const MultiGraph& g, std::span<const std::vector<EdgeId>> trees,
                      std::span<const EdgeId> rest, std::size_t exchange_cap,
                      const PackOptions& options) {
  const int k = static_cast<int>(trees.size()) + 1;
  std::vector<Color> color(g.num_edges(), 0);
  auto assign = [&](EdgeId e, Color c) {
    if (e < 0 || e >= g.num_edges()) {
      throw std::invalid_argument("edge id " + std::to_string(e) + " out of range");
    }
    if (color[e] != 0) {
      throw std::invalid_argument("edge " + std::to_string(e) + " assigned twice");
    }
    color[e] = c;
  };
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!is_spanning_tree(g, trees[i])) {
      throw std::invalid_argument("tree " + std::to_string(i + 1) + " is not a spanning tree");
    }
    for (EdgeId e : trees[i]) assign(e, static_cast<Color>(i + 1));
  }
  for (EdgeId e : rest) assign(e, k);
  if (std::find(color.begin(), color.end(), 0) != color.end()) {
    throw std::invalid_argument("trees and rest do not cover every edge");
  }
  return run_stage(g, KPartition(k, std::move(color)), exchange_cap, options);
}

PackResult pack(const MultiGraph& g, int k, const PackOptions& options) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (g.num_vertices() < 1) throw std::invalid_argument("graph has no vertices");

  PackResult result;
  result.k = k;
  result.exchange_cap = options.exchange_cap.value_or(
      static_cast<std::size_t>(k) * static_cast<std::size_t>(g.num_vertices()) *
      static_cast<std::size_t>(g.num_edges()));

  std::vector<std::vector<EdgeId>> trees;
  for (int stage = 1; stage <= k; ++stage) {
    std::vector<Color> color(g.num_edges(), stage);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (EdgeId e : trees[i]) color[e] = static_cast<Color>(i + 1);
    }
    StageResult sr = run_stage(g, KPartition(stage, std::move(color)), result.exchange_cap, options);
    result.exchanges_per_stage.push_back(sr.exchanges);
    std::move(sr.trace.begin(), sr.trace.end(), std::back_inserter(result.trace));

    if (sr.certificate) {
      Certificate cert;
      cert.crossing_edges = crossing_edge_count(g, *sr.certificate);
      cert.bound = static_cast<long long>(k) * (sr.certificate->size() - 1);
      cert.partition = std::move(*sr.certificate);
      if (cert.crossing_edges >= cert.bound) {
        throw InternalInvariantError("stage certificate is not violated");
      }
      result.outcome = std::move(cert);
      return result;
    }

    for (Color c = 1; c < stage; ++c) trees[c - 1] = sr.coloring.edges_of(c);
    std::vector<EdgeId> rest = sr.coloring.edges_of(stage);
    if (options.tree_order == TreeOrder::kHighestIdFirst) std::reverse(rest.begin(), rest.end());
    std::vector<EdgeId> tree = greedy_forest(g, rest);
    std::sort(tree.begin(), tree.end());
    if (!is_spanning_tree(g, tree)) {
      throw InternalInvariantError("connected remainder yielded no spanning tree");
    }
    trees.push_back(std::move(tree));
  }
  result.outcome = Packing{std::move(trees)};
  return result;
}

StpResult stp_number(const MultiGraph& g, const PackOptions& options) {
  StpResult out;
  const int n = g.num_vertices();
  if (n <= 1) {
    out.unbounded = true;
    return out;
  }
  // m < k(n-1) for k = floor(m/(n-1)) + 1, so the singletons refute it.
  const int upper = g.num_edges() / (n - 1) + 1;
  for (int k = 1; k <= upper; ++k) {
    PackResult r = pack(g, k, options);
    if (!r.is_packing()) {
      out.next = r.certificate();
      return out;
    }
    out.k_max = k;
    out.packing = r.packing();
  }
  throw InternalInvariantError("packing found beyond the edge-count bound");
}

ExchangeCheck check_exchange(const MultiGraph& g, const KPartition& before,
                             const KPartition& after, const ExchangeTrace& trace) {
  ExchangeCheck check;
  const int k = before.k();
  const PartitionSequence seq = build_sequence(g, before);
  const PartitionSequence next = build_sequence(g, after);

  check.precedes = precedes(seq, next);
  check.level_descent = trace.j < trace.m;
  check.color_is_tree = trace.color >= 1 && trace.color <= k - 1;

  std::vector<char> in_q(g.num_vertices(), 0);
  for (VertexId v : trace.class_q) in_q[v] = 1;
  check.cycle_in_q = !trace.cycle.empty() &&
                     std::all_of(trace.cycle.begin(), trace.cycle.end(), [&](EdgeId c) {
                       return in_q[g.edge(c).u] && in_q[g.edge(c).v];
                     });

  check.trees_preserved = after.k() == k && trees_are_spanning(g, after);

  check.totality = after.num_edges() == before.num_edges();
  for (EdgeId e = 0; check.totality && e < before.num_edges(); ++e) {
    Color was = before.color_of(e);
    Color now = after.color_of(e);
    if (e == trace.e) {
      check.totality = was == k && now == trace.color;
    } else if (e == trace.e_prime) {
      check.totality = was == trace.color && now == k;
    } else {
      check.totality = was == now;
    }
  }

  const std::size_t horizon = std::max(seq.steps.size(), next.steps.size()) + 1;
  for (std::size_t i = 0; i < horizon; ++i) {
    if (seq.partition_at(i) != next.partition_at(i) || seq.splitter_at(i) != next.splitter_at(i)) {
      check.first_difference = i;
      break;
    }
  }
  const auto m = static_cast<std::size_t>(trace.m);
  check.prefix_agrees = !check.first_difference || *check.first_difference > m;
  check.refines_at_m_plus_1 = strictly_refines(seq.partition_at(m + 1), next.partition_at(m + 1));
  return check;
}

}  // namespace stp
