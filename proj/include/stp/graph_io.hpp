#pragma once

#include <cstdint>
#include <istream>
#include <string>

#include "stp/multigraph.hpp"

namespace stp {

/// Reads the DIMACS-style graph format:
///
///   c <comment>          (anywhere; blank lines are ignored too)
///   p <n> <m>            (once, before any edge line)
///   e <u> <v>            (exactly m lines, 1 <= u, v <= n)
///
/// Vertices are 1-based in the file and 0-based in memory; edge ids follow
/// line order. Throws ParseError carrying the offending line number.
MultiGraph parse_graph(std::istream& in);
MultiGraph parse_graph_string(const std::string& text);

/// Inverse of parse_graph: header plus one edge line per edge, no comments.
std::string serialize_graph(const MultiGraph& g);

/// SplitMix64 (Steele, Lea, Flood 2014) with its published constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// m edges with endpoints u = next() % n, v = next() % n drawn in that order
/// from SplitMix64(seed). Loops and parallel edges are kept.
MultiGraph random_multigraph(int n, int m, std::uint64_t seed);

}  // namespace stp
