#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ivc/ivc.hpp"

namespace ivc::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

// K_2n with n = 2000 has about 8 million edges.
inline constexpr int kMaxConstructN = 2000;

inline constexpr const char* kExitCodeHelp =
    "Exit codes: 0 success, 1 verification FAIL or no coloring found, "
    "2 bad arguments or unreadable/malformed input.";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), {}};
}

inline void write_to(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

inline std::string value_text(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "n/a";
}

inline void print_bounds(const BoundsReport& r, std::ostream& out) {
  out << "bounds for " << r.subject << "\n";
  std::size_t width = 0;
  for (const auto* list : {&r.lower, &r.upper})
    for (const auto& b : *list) width = std::max(width, b.name.size());

  auto row = [&](const char* side, const BoundEntry& b) {
    out << "  " << side << "  " << std::left << std::setw(static_cast<int>(width) + 2)
        << b.name << std::right << std::setw(5) << value_text(b.value);
    if (!b.applicable()) out << "  (" << b.reason << ")";
    out << "\n";
  };
  for (const auto& b : r.lower) row("lower", b);
  for (const auto& b : r.upper) row("upper", b);
  out << "  best lower " << value_text(r.best_lower()) << ", best upper "
      << value_text(r.best_upper()) << "\n";

  out << "\n";
  for (const auto& b : r.lower) out << "bound lower " << b.name << " " << value_text(b.value) << "\n";
  for (const auto& b : r.upper) out << "bound upper " << b.name << " " << value_text(b.value) << "\n";
  out << "best lower " << value_text(r.best_lower()) << "\n";
  out << "best upper " << value_text(r.best_upper()) << "\n";
}

}  // namespace detail

/**
 * Runs one subcommand. Output goes to `out`, diagnostics to `err`, and a
 * path of "-" reads `in`.
 *
 *   construct --n N [--baseline] [--out PATH]
 *   verify [COLORING] [--graph PATH]
 *   bounds (--n N | --graph PATH)
 *   search --graph PATH (--t T | --max [--cap T] [--no-bounds])
 *          [--budget NODES] [--order lex|sweep] [--out PATH]
 *   cases --n N
 */
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Interval edge colorings of complete graphs K_2n"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  int construct_n = 0;
  bool baseline = false;
  std::string construct_out;
  auto* construct_cmd = app.add_subcommand(
      "construct", "Write the 3n-2 color interval coloring of K_2n as a coloring file");
  construct_cmd->add_option("--n", construct_n, "Half the number of vertices")
      ->required()
      ->check(CLI::Range(1, kMaxConstructN));
  construct_cmd->add_flag("--baseline", baseline,
                          "Write the (2n-1)-color round-robin coloring instead");
  construct_cmd->add_option("--out", construct_out, "Output path (default stdout)");

  std::string coloring_path = "-";
  std::string verify_graph;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check that a coloring file is an interval coloring; prints PASS or FAIL");
  verify_cmd->add_option("coloring", coloring_path, "Coloring file, '-' for stdin");
  verify_cmd->add_option("--graph", verify_graph,
                         "Graph file; by default the graph is the set of edge lines");

  int bounds_n = 0;
  std::string bounds_graph;
  auto* bounds_cmd = app.add_subcommand("bounds", "Print the bounds on W for K_2n or a graph");
  auto* bounds_n_opt =
      bounds_cmd->add_option("--n", bounds_n, "Half the number of vertices of K_2n")
          ->check(CLI::Range(1, 1 << 29));
  auto* bounds_graph_opt = bounds_cmd->add_option("--graph", bounds_graph, "Graph file");
  bounds_n_opt->excludes(bounds_graph_opt);
  bounds_cmd->require_option(1);

  std::string search_graph;
  int search_t = 0;
  bool search_max = false;
  int search_cap = kMaxSearchSpan;
  bool no_bounds = false;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string order_name = "lex";
  std::string search_out;
  auto* search_cmd = app.add_subcommand(
      "search", "Exact backtracking search for an interval coloring of span t, or for W");
  search_cmd->add_option("--graph", search_graph, "Graph file, '-' for stdin")->required();
  auto* t_opt = search_cmd->add_option("--t", search_t, "Span to decide")
                    ->check(CLI::Range(1, kMaxSearchSpan));
  auto* max_opt = search_cmd->add_flag("--max", search_max, "Compute W by probing spans");
  t_opt->excludes(max_opt);
  search_cmd->add_option("--cap", search_cap, "Largest span probed by --max")
      ->check(CLI::Range(1, kMaxSearchSpan))
      ->needs(max_opt);
  search_cmd->add_flag("--no-bounds", no_bounds,
                       "With --max, cap only by |E| instead of the known upper bounds")
      ->needs(max_opt);
  search_cmd->add_option("--budget", budget, "Search-tree node budget per span, 0 = unlimited")
      ->capture_default_str();
  search_cmd->add_option("--order", order_name, "Edge order: lex or sweep")
      ->check(CLI::IsMember({"lex", "sweep"}))
      ->capture_default_str();
  search_cmd->add_option("--out", search_out, "Write the witness coloring here");

  int cases_n = 0;
  auto* cases_cmd =
      app.add_subcommand("cases", "Per-case edge counts and color ranges of the construction");
  cases_cmd->add_option("--n", cases_n, "Half the number of vertices")
      ->required()
      ->check(CLI::Range(1, kMaxConstructN));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (construct_cmd->parsed()) {
      const EdgeColoring c = baseline ? round_robin(construct_n) : construct(construct_n);
      detail::write_to(construct_out, emit_coloring(complete_graph(2 * construct_n), c), out);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      if (coloring_path == "-" && verify_graph == "-")
        throw UsageError("coloring and graph cannot both come from stdin");
      const std::string text = detail::read_all(coloring_path, in);
      std::optional<Graph> graph;
      EdgeColoring coloring;
      if (!verify_graph.empty()) {
        graph = parse_graph(detail::read_all(verify_graph, in));
        coloring = parse_coloring(text, *graph);
      } else {
        auto parsed = parse_coloring(text);
        graph = std::move(parsed.graph);
        coloring = std::move(parsed.coloring);
      }
      const IntervalReport report = verify_interval(*graph, coloring);
      if (report.verdict()) {
        out << "PASS\n";
        return kOk;
      }
      out << "FAIL: " << report.violations.size() << " violation(s)\n";
      for (const auto& v : report.violations) out << "  " << describe(v) << "\n";
      return kFailure;
    }

    if (bounds_cmd->parsed()) {
      if (*bounds_n_opt)
        detail::print_bounds(bounds_for_k2n(bounds_n), out);
      else
        detail::print_bounds(bounds_for_graph(parse_graph(detail::read_all(bounds_graph, in))),
                             out);
      return kOk;
    }

    if (search_cmd->parsed()) {
      if (!*t_opt && !search_max) throw UsageError("search needs --t or --max");
      const Graph g = parse_graph(detail::read_all(search_graph, in));
      const EdgeOrder order = order_name == "sweep" ? EdgeOrder::VertexSweep
                                                    : EdgeOrder::Lexicographic;
      if (search_max) {
        const WResult r = compute_w(g, search_cap, WOptions{budget, order, !no_bounds});
        for (const auto& p : r.probes)
          out << "# probe t=" << p.t << " " << to_string(p.status) << " nodes=" << p.nodes
              << "\n";
        out << "# w " << r.w << "\n";
        out << "# complete " << (r.complete ? "yes" : "no") << "\n";
        if (!r.witness) return kFailure;
        detail::write_to(search_out, emit_coloring(g, *r.witness), out);
        return kOk;
      }
      const SearchOutcome o = find_interval_coloring(g, {search_t, budget, order});
      out << "# t " << search_t << "\n";
      out << "# status " << to_string(o.status) << "\n";
      out << "# nodes " << o.nodes_explored << "\n";
      if (!o.coloring) return kFailure;
      detail::write_to(search_out, emit_coloring(g, *o.coloring), out);
      return kOk;
    }

    if (cases_cmd->parsed()) {
      std::size_t total = 0;
      for (const auto& s : case_statistics(cases_n)) {
        out << "case " << s.id.value << " edges " << s.edges << " colors ";
        if (s.edges == 0)
          out << "-";
        else
          out << s.min_color << ".." << s.max_color;
        out << "\n";
        total += s.edges;
      }
      out << "total " << total << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ivc::cli
