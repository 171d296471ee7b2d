#include "stp/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "stp/errors.hpp"

namespace stp {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

}  // namespace

MultiGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t header_line = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++lineno;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == 'c') continue;

    if (tok[0] == "p") {
      if (header_line != 0) throw ParseError(lineno, "duplicate header");
      if (tok.size() != 3) throw ParseError(lineno, "header must be 'p <n> <m>'");
      n = to_int(tok[1], lineno, "vertex count");
      m = to_int(tok[2], lineno, "edge count");
      if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
      if (m < 0) throw ParseError(lineno, "edge count must be non-negative");
      header_line = lineno;
      edges.reserve(static_cast<std::size_t>(m));
    } else if (tok[0] == "e") {
      if (header_line == 0) throw ParseError(lineno, "edge line before header");
      if (tok.size() != 3) throw ParseError(lineno, "edge line must be 'e <u> <v>'");
      if (static_cast<long long>(edges.size()) == m) {
        throw ParseError(lineno, "more edge lines than the " + std::to_string(m) + " declared");
      }
      long long u = to_int(tok[1], lineno, "endpoint");
      long long v = to_int(tok[2], lineno, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(lineno, "endpoint out of range 1.." + std::to_string(n));
      }
      edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
    } else {
      throw ParseError(lineno, "unrecognized line '" + std::string(tok[0]) + "'");
    }
  }
  if (header_line == 0) throw ParseError(lineno + 1, "missing 'p <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  return MultiGraph(static_cast<int>(n), std::move(edges));
}

MultiGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

MultiGraph random_multigraph(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 0) throw std::invalid_argument("need n >= 1 and m >= 0");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    auto u = static_cast<VertexId>(rng.next() % static_cast<std::uint64_t>(n));
    auto v = static_cast<VertexId>(rng.next() % static_cast<std::uint64_t>(n));
    edges.push_back({u, v});
  }
  return MultiGraph(n, std::move(edges));
}

}  // namespace stp
