#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "stp/kpartition.hpp"
#include "stp/multigraph.hpp"
#include "stp/partition.hpp"

namespace stp {

/// One e/e' exchange. `e` leaves T_k for T_color; `e_prime` leaves T_color
/// for T_k.
struct ExchangeTrace {
  EdgeId e = -1;
  Level m = 0;                     // level of e
  std::vector<VertexId> class_p;   // class of P_m holding both ends of e
  Color color = 0;                 // splitter c_m
  std::vector<EdgeId> cycle;       // unique cycle of T_color + e, ending with e
  EdgeId e_prime = -1;
  Level j = 0;                     // level of e_prime
  std::vector<VertexId> class_q;   // class of P_j holding both ends of e_prime

  friend bool operator==(const ExchangeTrace&, const ExchangeTrace&) = default;
};

/// An exchange together with where it happened.
struct TraceRecord {
  int stage = 0;                   // number of trees being packed, 1-based
  PartitionSequence sequence;      // sequence of the k-partition before the exchange
  ExchangeTrace exchange;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Packing {
  std::vector<std::vector<EdgeId>> trees;
};

/// A partition P with fewer than k(|P|-1) crossing edges.
struct Certificate {
  Partition partition;
  int crossing_edges = 0;
  long long bound = 0;  // k(|P|-1) for the requested k
};

enum class TreeOrder {
  kLowestIdFirst,
  kHighestIdFirst,
};

struct PackOptions {
  /// Per-stage exchange cap; defaults to k*n*m for the requested k.
  std::optional<std::size_t> exchange_cap;
  bool record_trace = false;
  /// Edge scan order when a tree is cut out of a connected remainder.
  TreeOrder tree_order = TreeOrder::kLowestIdFirst;
  /// Called after every exchange with the coloring before and after.
  std::function<void(const MultiGraph&, const KPartition& before, const KPartition& after,
                     const ExchangeTrace&)>
      on_exchange;
};

struct PackResult {
  int k = 0;
  std::variant<Packing, Certificate> outcome;
  std::vector<std::size_t> exchanges_per_stage;
  std::size_t exchange_cap = 0;
  std::vector<TraceRecord> trace;

  bool is_packing() const { return std::holds_alternative<Packing>(outcome); }
  const Packing& packing() const { return std::get<Packing>(outcome); }
  const Certificate& certificate() const { return std::get<Certificate>(outcome); }
  std::size_t total_exchanges() const;
};

/// Counting step of the improvement loop. With T_1..T_{k-1} spanning trees
/// and T_k disconnected, returns the terminal partition of `seq` when T_k
/// has fewer than |P|-1 edges crossing it (a violated partition), or nullopt
/// when T_k must contain a cycle through a finite-level edge.
///
/// Throws InternalInvariantError when the preconditions fail.
std::optional<Partition> density_check(const MultiGraph& g, const KPartition& t,
                                       const PartitionSequence& seq);

/// Performs one exchange on t. Requires density_check to have returned nullopt.
std::pair<KPartition, ExchangeTrace> exchange_step(const MultiGraph& g, const KPartition& t,
                                                   const PartitionSequence& seq);

struct StageResult {
  KPartition coloring;                 // final coloring; T_k is connected on success
  std::optional<Partition> certificate;
  std::size_t exchanges = 0;
  std::vector<TraceRecord> trace;
};

/// Improves a coloring whose colors 1..k-1 are spanning trees until T_k is
/// connected or a violated partition shows up.
StageResult run_stage(const MultiGraph& g, KPartition t, std::size_t exchange_cap,
                      const PackOptions& options = {});

/// Convenience form: `trees` become colors 1..k-1 and `rest` becomes T_k.
/// Throws std::invalid_argument unless trees and rest partition E(g).
StageResult run_stage(const MultiGraph& g, std::span<const std::vector<EdgeId>> trees,
                      std::span<const EdgeId> rest, std::size_t exchange_cap,
                      const PackOptions& options = {});

/// k edge-disjoint spanning trees of g, or a partition proving none exist.
/// Throws std::invalid_argument for k < 0 or an empty graph.
PackResult pack(const MultiGraph& g, int k, const PackOptions& options = {});

struct StpResult {
  bool unbounded = false;            // n <= 1: every k packs
  int k_max = 0;
  Packing packing;                   // k_max trees
  std::optional<Certificate> next;   // certificate for k_max + 1
};

/// Largest k for which g has k edge-disjoint spanning trees.
StpResult stp_number(const MultiGraph& g, const PackOptions& options = {});

/// Outcome of re-checking one exchange against the proof's claims.
struct ExchangeCheck {
  bool precedes = false;             // before < after in the k-partition order
  bool level_descent = false;        // j < m
  bool color_is_tree = false;        // 1 <= c_m <= k-1
  bool cycle_in_q = false;           // V(C) within Q
  bool trees_preserved = false;      // colors 1..k-1 still spanning trees
  bool totality = false;             // exactly e and e' changed color
  bool prefix_agrees = false;        // (P_i, c_i) = (P'_i, c'_i) for all i <= m
  bool refines_at_m_plus_1 = false;  // P_{m+1} strictly refines P'_{m+1}
  /// Index of the first differing (partition, splitter) pair, if any.
  std::optional<std::size_t> first_difference;

  /// The properties every exchange must satisfy regardless of where the
  /// coloring sits in the order.
  bool guaranteed() const {
    return precedes && level_descent && color_is_tree && cycle_in_q && trees_preserved &&
           totality;
  }
};

ExchangeCheck check_exchange(const MultiGraph& g, const KPartition& before,
                             const KPartition& after, const ExchangeTrace& trace);

}  // namespace stp
