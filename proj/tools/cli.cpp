#include "pivots/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "pivots/errors.hpp"
#include "pivots/graph.hpp"
#include "pivots/io.hpp"
#include "pivots/matchings.hpp"
#include "pivots/sequences.hpp"

namespace pivots::cli {

namespace {

struct InputOptions {
  std::string path = "-";
  std::string format = "edge-list";
  unsigned threads = 1;
};

void add_input_options(CLI::App* sub, InputOptions& opts) {
  sub->add_option("-i,--input", opts.path, "Graph file, '-' for standard input");
  sub->add_option("-f,--format", opts.format, "Input format")
      ->check(CLI::IsMember({"edge-list", "graph6"}));
  sub->add_option("--threads", opts.threads, "Worker threads for subset enumeration")
      ->check(CLI::PositiveNumber);
}

Graph read_graph(const InputOptions& opts, std::istream& in) {
  std::string payload;
  if (opts.path == "-") {
    payload.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(opts.path);
    if (!file) throw InputError("cannot open '" + opts.path + "'");
    payload.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  const auto fmt = opts.format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
  return parse_graph({fmt, std::move(payload)});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Pivot and local complementation on graphs over GF(2)", "pivots"};
  app.require_subcommand(1);

  InputOptions input;
  std::string u, v, seq_text, set_text, word;
  std::optional<std::string> anchor;
  std::optional<std::string> seq_opt, set_opt;
  std::size_t orbit_cap = kDefaultOrbitCap;
  std::size_t count_cap = kDefaultCountCap;

  auto* det_cmd = app.add_subcommand("det", "Print det A(G) over GF(2)");
  auto* pm_cmd = app.add_subcommand("pm", "Print the perfect-matching parity (loops count as singletons)");
  auto* pivot_cmd = app.add_subcommand("pivot", "Pivot on edge U V and print the graph");
  pivot_cmd->add_option("U", u)->required();
  pivot_cmd->add_option("V", v)->required();
  auto* lc_cmd = app.add_subcommand("lc", "Local complementation at U (loop rule on graphs with loops)");
  lc_cmd->add_option("U", u)->required();
  auto* apply_cmd = app.add_subcommand("apply", "Apply a sequence such as \"[u v][w]\"");
  apply_cmd->add_option("--seq", seq_text, "Operation sequence")->required();
  auto* apply_support_cmd = app.add_subcommand("apply-support", "Graph reached by any sequence with support S");
  apply_support_cmd->add_option("--set", set_text, "Comma-separated support")->required();
  auto* applicable_cmd = app.add_subcommand("applicable", "Print 1 if the sequence (or some sequence with the support) applies");
  auto* seq_flag = applicable_cmd->add_option("--seq", seq_opt, "Operation sequence");
  auto* set_flag = applicable_cmd->add_option("--set", set_opt, "Comma-separated support");
  seq_flag->excludes(set_flag);
  applicable_cmd->require_option(1);
  auto* reduce_cmd = app.add_subcommand("reduce", "Print a reduced applicable sequence with support S");
  reduce_cmd->add_option("--set", set_text, "Comma-separated support")->required();
  reduce_cmd->add_option("--anchor", anchor, "Vertex the first operation must touch");
  auto* reduce_empty_cmd = app.add_subcommand("reduce-to-empty", "Print rules reducing the graph to the empty graph");
  auto* orbit_cmd = app.add_subcommand("orbit", "Print every graph reachable by applicable sequences");
  orbit_cmd->add_option("--cap", orbit_cap, "Maximum number of vertices");
  auto* count_cmd = app.add_subcommand("count-supports", "Count vertex sets S with det A[S] = 1");
  count_cmd->add_option("--cap", count_cap, "Maximum number of vertices");
  auto* overlap_cmd = app.add_subcommand("overlap", "Overlap graph of a double-occurrence word");
  overlap_cmd->add_option("--word", word, "Whitespace-separated symbols")->required();
  auto* witness_cmd = app.add_subcommand("witness", "Print a non-empty set with even adjacency to every vertex, or none");

  for (auto* sub : {det_cmd, pm_cmd, pivot_cmd, lc_cmd, apply_cmd, apply_support_cmd, applicable_cmd,
                    reduce_cmd, reduce_empty_cmd, orbit_cmd, count_cmd, witness_cmd}) {
    add_input_options(sub, input);
  }

  std::vector<const char*> argv{"pivots"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (overlap_cmd->parsed()) {
      out << serialize_graph(overlap_graph(word));
      return kExitOk;
    }
    const Graph g = read_graph(input, in);
    if (det_cmd->parsed()) {
      out << det(g.adjacency()) << '\n';
    } else if (pm_cmd->parsed()) {
      out << (g.is_simple() ? pm_parity(g) : general_pm_parity(g)) << '\n';
    } else if (pivot_cmd->parsed()) {
      out << serialize_graph(pivot(g, u, v));
    } else if (lc_cmd->parsed()) {
      out << serialize_graph(g.is_simple() ? local_complement(g, u) : loop_complement(g, u));
    } else if (apply_cmd->parsed()) {
      out << serialize_graph(apply(g, parse_sequence(seq_text)));
    } else if (apply_support_cmd->parsed()) {
      out << serialize_graph(apply_support(g, parse_vertex_set(set_text)));
    } else if (applicable_cmd->parsed()) {
      const bool ok = seq_opt ? is_applicable(g, parse_sequence(*seq_opt))
                              : is_support_applicable(g, parse_vertex_set(*set_opt));
      out << ok << '\n';
    } else if (reduce_cmd->parsed()) {
      std::optional<VertexId> a;
      if (anchor) a = VertexId(*anchor);
      out << format_sequence(synthesize_reduced(g, parse_vertex_set(set_text), a)) << '\n';
    } else if (reduce_empty_cmd->parsed()) {
      const auto rules = reduce_to_empty(g);
      if (!rules) {
        err << "error: det A(G) = 0; the graph cannot be reduced to the empty graph\n";
        return kExitDomain;
      }
      out << format_sequence(*rules) << '\n';
    } else if (orbit_cmd->parsed()) {
      const auto members = orbit(g, {orbit_cap, input.threads});
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out << '\n';
        out << serialize_graph(members[i]);
      }
    } else if (count_cmd->parsed()) {
      out << count_applicable_supports(g, {count_cap, input.threads}) << '\n';
    } else if (witness_cmd->parsed()) {
      const auto w = kernel_witness(g.adjacency());
      out << (w ? format_vertex_set(*w) : std::string("none")) << '\n';
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotApplicableError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace pivots::cli
