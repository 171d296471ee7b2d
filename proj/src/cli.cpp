#include "stp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "stp/errors.hpp"
#include "stp/graph_io.hpp"
#include "stp/oracle.hpp"

namespace stp::cli {

namespace {

/// Bad user input; maps to kInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MultiGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const ParseError& ex) {
    throw InputError(path + ": " + ex.what());
  }
}

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open document '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw InputError(path + ": " + ex.what());
  }
}

Json vertices_json(const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(v + 1);
  return out;
}

Json certificate_json(int k, const Certificate& cert) {
  Json doc;
  doc["verdict"] = "certificate";
  doc["k"] = k;
  doc["classes"] = classes_json(cert.partition);
  doc["crossing_edges"] = cert.crossing_edges;
  doc["bound"] = cert.bound;
  return doc;
}

TreeOrder parse_tree_order(const std::string& s) {
  return s == "highest-id" ? TreeOrder::kHighestIdFirst : TreeOrder::kLowestIdFirst;
}

struct PackArgs {
  std::string graph;
  int k = 0;
  bool trace = false;
  bool json = true;
  std::string tree_order = "lowest-id";
  std::optional<std::size_t> cap;
};

int cmd_pack(const PackArgs& a, std::ostream& out) {
  if (a.k < 0) throw InputError("k must be non-negative");
  const MultiGraph g = load_graph(a.graph);
  PackOptions opts;
  opts.record_trace = a.trace;
  opts.tree_order = parse_tree_order(a.tree_order);
  opts.exchange_cap = a.cap;
  const PackResult r = pack(g, a.k, opts);

  if (a.json) {
    out << result_document(g, r, a.trace).dump() << '\n';
    return kOk;
  }
  if (r.is_packing()) {
    out << "packing of " << a.k << " edge-disjoint spanning trees\n";
    const auto& trees = r.packing().trees;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      out << "tree " << i + 1 << ':';
      for (EdgeId e : trees[i]) out << ' ' << e;
      out << '\n';
    }
  } else {
    const Certificate& c = r.certificate();
    out << "no packing of " << a.k << " trees: partition into " << c.partition.size()
        << " classes has " << c.crossing_edges << " crossing edges < " << c.bound << '\n';
    for (const auto& cls : c.partition.classes()) {
      out << " ";
      for (VertexId v : cls) out << ' ' << v + 1;
      out << '\n';
    }
  }
  out << "exchanges: " << r.total_exchanges() << '\n';
  return kOk;
}

std::vector<std::vector<EdgeId>> trees_from(const Json& doc) {
  std::vector<std::vector<EdgeId>> trees;
  for (const auto& t : doc.at("trees")) trees.push_back(t.get<std::vector<EdgeId>>());
  return trees;
}

int replay_trace(const MultiGraph& g, int k, const Json& claimed, TreeOrder order,
                 std::ostream& err) {
  PackOptions opts;
  opts.record_trace = true;
  opts.tree_order = order;
  const PackResult r = pack(g, k, opts);
  if (claimed.size() != r.trace.size()) {
    err << "trace: claims " << claimed.size() << " exchanges, replay performs " << r.trace.size()
        << '\n';
    return kVerificationFailed;
  }
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const Json& c = claimed[i];
    const TraceRecord& rec = r.trace[i];
    const ExchangeTrace& x = rec.exchange;
    const bool same = c.at("stage").get<int>() == rec.stage && c.at("e").get<EdgeId>() == x.e &&
                      c.at("e_prime").get<EdgeId>() == x.e_prime &&
                      c.at("m").get<Level>() == x.m && c.at("j").get<Level>() == x.j &&
                      c.at("color").get<Color>() == x.color;
    if (!same) {
      err << "trace: exchange " << i << " does not match replay (expected e=" << x.e
          << " e_prime=" << x.e_prime << " m=" << x.m << " j=" << x.j << ")\n";
      return kVerificationFailed;
    }
  }
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& doc_path,
               const std::string& tree_order, std::ostream& out, std::ostream& err) {
  const MultiGraph g = load_graph(graph_path);
  const Json doc = load_document(doc_path);
  int k = 0;
  std::string verdict;
  try {
    k = doc.at("k").get<int>();
    verdict = doc.at("verdict").get<std::string>();
  } catch (const Json::exception& ex) {
    throw InputError(std::string("document: ") + ex.what());
  }
  if (k < 0) throw InputError("document: negative k");

  try {
    if (verdict == "packing") {
      const Verdict v = verify_packing(g, trees_from(doc), k);
      if (!v) {
        err << "packing rejected: " << v.diagnostic << '\n';
        return kVerificationFailed;
      }
    } else if (verdict == "certificate") {
      std::vector<std::vector<VertexId>> classes;
      for (const auto& cls : doc.at("classes")) {
        std::vector<VertexId> vs;
        for (const auto& v : cls) vs.push_back(v.get<VertexId>() - 1);
        classes.push_back(std::move(vs));
      }
      Partition p;
      try {
        p = Partition::from_classes(g.num_vertices(), classes);
      } catch (const InvalidPartitionError& ex) {
        err << "certificate rejected: " << ex.what() << '\n';
        return kVerificationFailed;
      }
      const Verdict v = verify_certificate(g, p, k);
      if (!v) {
        err << "certificate rejected: " << v.diagnostic << '\n';
        return kVerificationFailed;
      }
      if (doc.contains("crossing_edges") &&
          doc["crossing_edges"].get<long long>() != crossing_edge_count(g, p)) {
        err << "certificate rejected: crossing_edges is " << crossing_edge_count(g, p) << '\n';
        return kVerificationFailed;
      }
      const long long bound = static_cast<long long>(k) * (p.size() - 1);
      if (doc.contains("bound") && doc["bound"].get<long long>() != bound) {
        err << "certificate rejected: bound is " << bound << '\n';
        return kVerificationFailed;
      }
    } else {
      throw InputError("document: unknown verdict '" + verdict + "'");
    }
    if (doc.contains("trace")) {
      if (int rc = replay_trace(g, k, doc["trace"], parse_tree_order(tree_order), err); rc != kOk) {
        return rc;
      }
    }
  } catch (const Json::exception& ex) {
    throw InputError(std::string("document: ") + ex.what());
  }
  out << "ok\n";
  return kOk;
}

int cmd_stp(const std::string& graph_path, std::ostream& out) {
  const MultiGraph g = load_graph(graph_path);
  const StpResult r = stp_number(g);
  Json doc;
  if (r.unbounded) {
    doc["unbounded"] = true;
  } else {
    doc["k_max"] = r.k_max;
    doc["trees"] = r.packing.trees;
    doc["certificate"] = certificate_json(r.k_max + 1, *r.next);
  }
  out << doc.dump() << '\n';
  return kOk;
}

int cmd_oracle(const std::string& graph_path, int k, std::ostream& out) {
  if (k < 0) throw InputError("k must be non-negative");
  const MultiGraph g = load_graph(graph_path);
  if (g.num_vertices() > kMaxEnumerationSize) {
    throw InputError("oracle supports at most " + std::to_string(kMaxEnumerationSize) +
                     " vertices");
  }
  const DensityReport rep = density_margin(g, k);
  Json doc;
  doc["k"] = k;
  doc["margin"] = rep.margin;
  doc["packs"] = rep.margin >= 0;
  doc["witness"] = classes_json(rep.witness);
  out << doc.dump() << '\n';
  return kOk;
}

int cmd_gen(int n, int m, std::uint64_t seed, std::ostream& out) {
  if (n < 1 || m < 0) throw InputError("gen needs n >= 1 and m >= 0");
  out << serialize_graph(random_multigraph(n, m, seed));
  return kOk;
}

int cmd_dot(const std::string& graph_path, const std::string& doc_path, std::ostream& out) {
  static const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                         "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  const MultiGraph g = load_graph(graph_path);
  std::vector<int> tree_of(g.num_edges(), -1);
  std::optional<Partition> cert;
  if (!doc_path.empty()) {
    const Json doc = load_document(doc_path);
    try {
      if (doc.at("verdict") == "packing") {
        const auto trees = trees_from(doc);
        for (std::size_t i = 0; i < trees.size(); ++i) {
          for (EdgeId e : trees[i]) {
            if (e < 0 || e >= g.num_edges()) throw InputError("document: edge id out of range");
            tree_of[e] = static_cast<int>(i);
          }
        }
      } else {
        std::vector<std::vector<VertexId>> classes;
        for (const auto& cls : doc.at("classes")) {
          std::vector<VertexId> vs;
          for (const auto& v : cls) vs.push_back(v.get<VertexId>() - 1);
          classes.push_back(std::move(vs));
        }
        cert = Partition::from_classes(g.num_vertices(), classes);
      }
    } catch (const Json::exception& ex) {
      throw InputError(std::string("document: ") + ex.what());
    } catch (const InvalidPartitionError& ex) {
      throw InputError(std::string("document: ") + ex.what());
    }
  }

  out << "graph G {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v + 1;
    if (cert) out << " [label=\"" << v + 1 << "\\nP" << cert->class_of(v) + 1 << "\"]";
    out << ";\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << ed.u + 1 << " -- " << ed.v + 1 << " [label=\"" << e << "\"";
    if (tree_of[e] >= 0) {
      out << ", color=\"" << kPalette[tree_of[e] % std::size(kPalette)] << "\", penwidth=2";
    } else {
      out << ", color=\"gray\"";
    }
    if (cert && !cert->same_class(ed.u, ed.v)) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return kOk;
}

}  // namespace

Json classes_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& cls : p.classes()) out.push_back(vertices_json(cls));
  return out;
}

Json trace_record_json(const TraceRecord& rec) {
  const ExchangeTrace& x = rec.exchange;
  Json j;
  j["stage"] = rec.stage;
  j["e"] = x.e;
  j["m"] = x.m;
  j["class_p"] = vertices_json(x.class_p);
  j["color"] = x.color;
  j["cycle"] = x.cycle;
  j["e_prime"] = x.e_prime;
  j["j"] = x.j;
  j["class_q"] = vertices_json(x.class_q);
  Json seq = Json::array();
  for (const SequenceStep& s : rec.sequence.steps) {
    seq.push_back(Json{{"classes", classes_json(s.partition)}, {"splitter", s.splitter}});
  }
  seq.push_back(Json{{"classes", classes_json(rec.sequence.terminal)},
                     {"splitter", rec.sequence.terminal_splitter}});
  j["sequence"] = std::move(seq);
  return j;
}

Json result_document(const MultiGraph& /*g*/, const PackResult& r, bool with_trace) {
  Json doc;
  if (r.is_packing()) {
    doc["verdict"] = "packing";
    doc["k"] = r.k;
    doc["trees"] = Json::array();
    for (const auto& t : r.packing().trees) doc["trees"].push_back(t);
  } else {
    doc = certificate_json(r.k, r.certificate());
  }
  if (with_trace) {
    Json trace = Json::array();
    for (const TraceRecord& rec : r.trace) trace.push_back(trace_record_json(rec));
    doc["trace"] = std::move(trace);
  }
  return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-disjoint spanning tree packing with violated-partition certificates",
               "treepack"};
  app.require_subcommand(1);

  PackArgs pa;
  auto* pack_cmd = app.add_subcommand("pack", "Pack k edge-disjoint spanning trees or certify none exist");
  pack_cmd->add_option("graph", pa.graph, "Graph file")->required();
  pack_cmd->add_option("k", pa.k, "Number of trees")->required();
  pack_cmd->add_flag("--trace", pa.trace, "Include the exchange trace");
  pack_cmd->add_flag("--json,!--no-json", pa.json, "JSON output (default) or plain text");
  pack_cmd->add_option("--seedtree-order", pa.tree_order,
                       "Edge order when cutting a tree from a connected remainder")
      ->check(CLI::IsMember({"lowest-id", "highest-id"}));
  pack_cmd->add_option("--cap", pa.cap, "Per-stage exchange cap (default k*n*m)");

  std::string graph, doc, order = "lowest-id";
  int k = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check a result document against a graph");
  verify_cmd->add_option("graph", graph, "Graph file")->required();
  verify_cmd->add_option("document", doc, "Result document")->required();
  verify_cmd->add_option("--seedtree-order", order, "Tree order used when the trace was made")
      ->check(CLI::IsMember({"lowest-id", "highest-id"}));

  auto* stp_cmd = app.add_subcommand("stp", "Spanning tree packing number");
  stp_cmd->add_option("graph", graph, "Graph file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force density margin (n <= 12)");
  oracle_cmd->add_option("graph", graph, "Graph file")->required();
  oracle_cmd->add_option("k", k, "Number of trees")->required();

  int n = 0, m = 0;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Random multigraph from SplitMix64");
  gen_cmd->add_option("n", n, "Vertices")->required();
  gen_cmd->add_option("m", m, "Edges")->required();
  gen_cmd->add_option("seed", seed, "64-bit seed")->required();

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering of a graph and optional result");
  dot_cmd->add_option("graph", graph, "Graph file")->required();
  dot_cmd->add_option("document", doc, "Result document");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (pack_cmd->parsed()) return cmd_pack(pa, out);
    if (verify_cmd->parsed()) return cmd_verify(graph, doc, order, out, err);
    if (stp_cmd->parsed()) return cmd_stp(graph, out);
    if (oracle_cmd->parsed()) return cmd_oracle(graph, k, out);
    if (gen_cmd->parsed()) return cmd_gen(n, m, seed, out);
    if (dot_cmd->parsed()) return cmd_dot(graph, doc, out);
  } catch (const InputError& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  } catch (const InternalInvariantError& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kInternalError;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace stp::cli
