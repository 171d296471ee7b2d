// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <unistd.h>

#include "stp/cli.hpp"
#include "stp/graph_io.hpp"
#include "stp/oracle.hpp"
#include "stp/packer.hpp"
#include "support/reference.hpp"

using namespace stp;

namespace {

constexpr std::size_t kCorpusSize = 2000;
constexpr double kRuntimeLimitSeconds = 120.0;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << detail << '\n';
  if (!pass) ++failures;
}

struct ExchangeTally {
  std::size_t exchanges = 0;
  std::size_t not_precedes = 0;
  std::size_t no_level_descent = 0;
  std::size_t bad_color = 0;
  std::size_t cycle_outside_q = 0;
  std::size_t prefix_disagrees = 0;
  std::size_t no_refinement_at_m_plus_1 = 0;
  std::size_t trees_broken = 0;
  std::size_t first_difference_not_improving = 0;
};

std::string run_binary(const std::string& args) {
  std::string cmd = std::string(TREEPACK_BIN) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

}  // namespace

int main() {
  const auto corpus = reference::corpus(kCorpusSize);

  ExchangeTally tally;
  PackOptions opts;
  opts.on_exchange = [&](const MultiGraph& g, const KPartition& before, const KPartition& after,
                         const ExchangeTrace& tr) {
    ++tally.exchanges;
    const ExchangeCheck c = check_exchange(g, before, after, tr);
    tally.not_precedes += !c.precedes;
    tally.no_level_descent += !c.level_descent;
    tally.bad_color += !c.color_is_tree;
    tally.cycle_outside_q += !c.cycle_in_q;
    tally.prefix_disagrees += !c.prefix_agrees;
    tally.no_refinement_at_m_plus_1 += !c.refines_at_m_plus_1;
    tally.trees_broken += !c.trees_preserved || !c.totality;
    // Where the two sequences first differ, the old one must be the smaller.
    const auto seq = build_sequence(g, before);
    const auto next = build_sequence(g, after);
    if (c.first_difference) {
      const std::size_t i = *c.first_difference;
      const bool improves = strictly_refines(seq.partition_at(i), next.partition_at(i)) ||
                            (seq.partition_at(i) == next.partition_at(i) &&
                             seq.splitter_at(i) < next.splitter_at(i));
      tally.first_difference_not_improving += !improves;
    } else {
      ++tally.first_difference_not_improving;
    }
  };

  std::size_t runs = 0, mismatches = 0, unsound = 0, internal_errors = 0, packings = 0;
  std::size_t max_stage_exchanges = 0, cap_hits = 0;
  std::size_t sparse = 0, sparse_without_cert = 0;
  std::vector<std::pair<std::size_t, int>> exchanging;  // (corpus index, k) runs with exchanges
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& [seed, g] = corpus[idx];
    for (int k = 1; k <= 3; ++k) {
      ++runs;
      const long long margin = density_margin(g, k).margin;
      PackResult r;
      try {
        r = pack(g, k, opts);
      } catch (const std::exception& ex) {
        ++internal_errors;
        std::cerr << "seed " << seed << " k " << k << ": " << ex.what() << '\n';
        continue;
      }
      packings += r.is_packing();
      if (r.total_exchanges() > 0) exchanging.emplace_back(idx, k);
      if (r.is_packing() != (margin >= 0)) ++mismatches;
      const bool sound = r.is_packing()
                             ? verify_packing(g, r.packing().trees, k).ok
                             : verify_certificate(g, r.certificate().partition, k).ok;
      unsound += !sound;
      for (std::size_t ex : r.exchanges_per_stage) {
        max_stage_exchanges = std::max(max_stage_exchanges, ex);
        cap_hits += ex > r.exchange_cap;
      }
      if (g.num_edges() < k * (g.num_vertices() - 1)) {
        ++sparse;
        sparse_without_cert += r.is_packing();
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  report(1, "oracle equivalence", mismatches == 0 && internal_errors == 0 && seconds < kRuntimeLimitSeconds,
         std::to_string(corpus.size()) + " graphs x k=1..3 = " + std::to_string(runs) + " runs, " +
             std::to_string(packings) + " packings, " + std::to_string(mismatches) +
             " mismatches, " + std::to_string(internal_errors) + " errors, " +
             std::to_string(seconds) + " s (limit " + std::to_string(kRuntimeLimitSeconds) + " s)");

  report(2, "output soundness", unsound == 0 && internal_errors == 0,
         std::to_string(unsound) + " rejected outputs");

  const bool proof_steps = tally.not_precedes == 0 && tally.no_level_descent == 0 &&
                           tally.bad_color == 0 && tally.cycle_outside_q == 0 &&
                           tally.prefix_disagrees == 0 && tally.no_refinement_at_m_plus_1 == 0;
  report(3, "proof-step invariants", proof_steps && tally.exchanges > 0,
         std::to_string(tally.exchanges) + " exchanges; violations: precedes " +
             std::to_string(tally.not_precedes) + ", j<m " + std::to_string(tally.no_level_descent) +
             ", c_m<=k-1 " + std::to_string(tally.bad_color) + ", V(C) in Q " +
             std::to_string(tally.cycle_outside_q) + ", prefix agreement through m " +
             std::to_string(tally.prefix_disagrees) + ", strict refinement at m+1 " +
             std::to_string(tally.no_refinement_at_m_plus_1) +
             " (first difference improves: " +
             std::to_string(tally.exchanges - tally.first_difference_not_improving) + "/" +
             std::to_string(tally.exchanges) + ")");

  {
    bool ok = true;
    std::string detail;
    const std::array<std::pair<int, int>, 3> families{{{2, 1}, {4, 2}, {6, 3}}};
    for (auto [n, k] : families) {
      MultiGraph kn = reference::complete_graph(n);
      PackResult r = pack(kn, k);
      const bool packed = r.is_packing() && verify_packing(kn, r.packing().trees, k).ok;
      ok &= packed;
      detail += "K" + std::to_string(n) + "/k=" + std::to_string(k) + (packed ? " ok; " : " FAILED; ");
    }
    std::size_t trees = 0, tree_failures = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const int n = 2 + static_cast<int>(seed % 15);
      MultiGraph t = reference::random_tree(n, seed);
      PackResult r = pack(t, 2);
      ++trees;
      const bool good = !r.is_packing() && r.certificate().partition == Partition::singletons(n) &&
                        verify_certificate(t, r.certificate().partition, 2).ok;
      tree_failures += !good;
    }
    ok &= tree_failures == 0 && sparse_without_cert == 0 && sparse > 0;
    detail += std::to_string(trees - tree_failures) + "/" + std::to_string(trees) +
              " trees certified at singletons; " + std::to_string(sparse - sparse_without_cert) +
              "/" + std::to_string(sparse) + " runs with m < k(n-1) certified";
    report(4, "known families", ok, detail);
  }

  report(5, "tree preservation", tally.trees_broken == 0 && internal_errors == 0,
         std::to_string(tally.trees_broken) + " exchanges broke a tree color or totality");

  report(6, "termination within k*n*m", cap_hits == 0 && internal_errors == 0,
         "max exchanges in one stage: " + std::to_string(max_stage_exchanges) + ", total " +
             std::to_string(tally.exchanges) + " over " + std::to_string(runs) + " runs");

  {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("treepack_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    bool same = true;
    std::size_t files = 0, traced = 0;
    // Every run that performed exchanges, plus the first 20 graphs at each k.
    auto runs_to_check = exchanging;
    for (std::size_t i = 0; i < 20; ++i) {
      for (int k = 1; k <= 3; ++k) runs_to_check.emplace_back(i, k);
    }
    for (auto [i, k] : runs_to_check) {
      const auto path = dir / ("g" + std::to_string(i) + ".txt");
      std::ofstream(path) << serialize_graph(corpus[i].graph);
      const std::string args = "pack " + path.string() + " " + std::to_string(k) + " --trace";
      const std::string a = run_binary(args);
      const std::string b = run_binary(args);
      same &= a == b && !a.empty() && a.front() == '{';
      traced += a.find("\"stage\"") != std::string::npos;
      ++files;
    }
    same &= traced > 0;
    std::filesystem::remove_all(dir);
    report(7, "determinism", same,
           std::to_string(files) + " pack --trace invocations run twice, " + std::to_string(traced) +
               " with non-empty traces, outputs " + (same ? "byte-identical" : "DIFFER"));
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
