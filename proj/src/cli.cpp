#include "scattered/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scattered/bench.hpp"
#include "scattered/generators.hpp"
#include "scattered/io.hpp"
#include "scattered/kernels.hpp"
#include "scattered/reduction.hpp"
#include "scattered/solver.hpp"

namespace scattered {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& stream) {
  std::ostringstream os;
  os << stream.rdbuf();
  return os.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-")
    return slurp(in);
  std::ifstream file(path);
  if (!file)
    throw UsageError("cannot open " + path);
  return slurp(file);
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream file(path);
  if (!file)
    throw UsageError("cannot write " + path);
  file << body;
}

struct Session {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }

  void emit(RunReport report, std::ostream& sink) const {
    report.elapsed_ms = elapsed_ms();
    if (json)
      sink << to_json(report).dump() << '\n';
    else
      sink << to_text(report);
  }
};

RunReport graph_report(const std::string& command, const Graph& input,
                       const Graph& output) {
  RunReport r;
  r.command = command;
  r.input_stats = compute_stats(input);
  r.output_stats = compute_stats(output);
  return r;
}

void kernel_report(Session& s, const std::string& command, const Graph& input,
                   const KernelOutcome& outcome) {
  s.out << write_dimacs(outcome.instance.graph);
  auto report = graph_report(command, input, outcome.instance.graph);
  report.outcome = outcome.promoted() ? "promoted" : "reduced";
  if (outcome.provenance.threshold_used > 0)
    report.threshold = outcome.provenance.threshold_used;
  report.trace_length = outcome.provenance.trace.size();
  s.emit(report, s.err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Session s{in, out, err};

  CLI::App app{"Kernelization toolkit for packing pairwise distant cycles",
               "scatter"};
  app.require_subcommand(1);
  app.add_flag("--json", s.json, "Emit the run report as JSON");

  std::string input;
  std::size_t ell = 1;
  std::size_t r = 2;
  std::size_t limit = kDefaultCycleLimit;
  std::size_t d = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> m;
  std::string trace_path;
  std::string certificate_path;
  std::size_t jobs = 1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "DIMACS graph file (default: stdin)");
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce to an ell-reduced graph");
  reduce_cmd->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  reduce_cmd->add_option("--trace", trace_path, "Write the rule trace as JSON");
  add_input(reduce_cmd);

  auto* kernel_cmd = app.add_subcommand("kernelize", "Run a kernelization pipeline");
  kernel_cmd->require_subcommand(1);
  auto* k_scattered = kernel_cmd->add_subcommand("scattered", "Any r, any ell");
  k_scattered->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  k_scattered->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  add_input(k_scattered);
  auto* k_two = kernel_cmd->add_subcommand("two", "Two cycles");
  k_two->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  add_input(k_two);
  auto* k_disjoint = kernel_cmd->add_subcommand("disjoint", "Vertex-disjoint cycles");
  k_disjoint->add_option("--r", r)->required()->check(CLI::Range(2, 1 << 30));
  add_input(k_disjoint);

  auto* solve_cmd = app.add_subcommand("solve", "Decide exactly; prints yes or no");
  solve_cmd->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--limit", limit, "Chordless cycle budget")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--certificate", certificate_path,
                        "Write the packing found here");
  add_input(solve_cmd);

  auto* gen_cmd = app.add_subcommand("generate", "Emit a generated instance");
  gen_cmd->require_subcommand(1);
  auto* g_debruijn = gen_cmd->add_subcommand("debruijn", "Lower-bound instance");
  g_debruijn->add_option("--d", d)->required()->check(CLI::Range(2, 1 << 20));
  g_debruijn->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  g_debruijn->add_option("--r", r)->required()->check(CLI::Range(2, 1 << 20));
  auto* g_isred = gen_cmd->add_subcommand("is-reduction",
                                          "Independent Set to Scattered Cycles");
  g_isred->add_option("--ell", ell)->required()->check(CLI::Range(2, 1 << 20));
  add_input(g_isred);
  auto* g_random = gen_cmd->add_subcommand("random", "Random bounded-degree graph");
  g_random->add_option("--n", n)->required();
  g_random->add_option("--d", d)->required();
  g_random->add_option("--seed", seed)->required();
  g_random->add_option("--m", m, "Target edge count (default: random)");
  auto* g_yes = gen_cmd->add_subcommand("yes", "r disjoint triangles");
  g_yes->add_option("--r", r)->required()->check(CLI::PositiveNumber);

  auto* stats_cmd = app.add_subcommand("stats", "Print n, m, delta, lambda, girth");
  add_input(stats_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a packing certificate");
  verify_cmd->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--certificate", certificate_path)->required();
  add_input(verify_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "Run a JSON sweep; prints CSV");
  bench_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  bench_cmd->add_option("config", input, "Sweep configuration (default: stdin)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto load_graph = [&] { return parse_dimacs(read_source(input, in)); };

  try {
    if (*reduce_cmd) {
      Graph g = load_graph();
      auto result = reduce(g, ell);
      out << write_dimacs(result.graph);
      if (!trace_path.empty())
        write_file(trace_path, trace_to_json(result.trace).dump(2) + "\n");
      auto report = graph_report("reduce", g, result.graph);
      report.outcome = "reduced";
      report.trace_length = result.trace.size();
      s.emit(report, err);
    } else if (*k_scattered) {
      Graph g = load_graph();
      kernel_report(s, "kernelize scattered", g, kernelize_scattered(g, ell, r));
    } else if (*k_two) {
      Graph g = load_graph();
      kernel_report(s, "kernelize two", g, kernelize_two(g, ell));
    } else if (*k_disjoint) {
      Graph g = load_graph();
      kernel_report(s, "kernelize disjoint", g, kernelize_disjoint(g, r));
    } else if (*solve_cmd) {
      Graph g = load_graph();
      RunReport report;
      report.command = "solve";
      report.input_stats = compute_stats(g);
      try {
        auto packing = find_packing(g, ell, r, limit);
        out << (packing ? "yes" : "no") << '\n';
        report.outcome = packing ? "yes" : "no";
        if (packing && !certificate_path.empty())
          write_file(certificate_path, write_certificate(*packing));
      } catch (const ResourceLimitError& e) {
        out << "unknown\n";
        report.outcome = "unknown-resource-limit";
        s.emit(report, err);
        err << "resource limit: " << e.what() << '\n';
        return kExitResourceLimit;
      }
      s.emit(report, err);
    } else if (*g_debruijn) {
      auto generated = de_bruijn_instance(d, ell, r);
      out << write_dimacs(generated.graph);
      auto report = graph_report("generate debruijn", generated.graph,
                                 generated.graph);
      report.output_stats.reset();
      s.emit(report, err);
    } else if (*g_isred) {
      Graph g = load_graph();
      Graph h = is_to_scattered(g, ell);
      out << write_dimacs(h);
      s.emit(graph_report("generate is-reduction", g, h), err);
    } else if (*g_random) {
      Graph g = m ? random_bounded_degree(n, d, seed, *m)
                  : random_bounded_degree(n, d, seed);
      out << write_dimacs(g);
      auto report = graph_report("generate random", g, g);
      report.output_stats.reset();
      s.emit(report, err);
    } else if (*g_yes) {
      Graph g = canonical_yes(r);
      out << write_dimacs(g);
      auto report = graph_report("generate yes", g, g);
      report.output_stats.reset();
      s.emit(report, err);
    } else if (*stats_cmd) {
      Graph g = load_graph();
      RunReport report;
      report.command = "stats";
      report.input_stats = compute_stats(g);
      s.emit(report, out);
    } else if (*verify_cmd) {
      Graph g = load_graph();
      std::ifstream file(certificate_path);
      if (!file)
        throw UsageError("cannot open " + certificate_path);
      auto packing = parse_certificate(slurp(file), ell);
      auto check = verify_packing(g, packing, ell, r);
      out << (check ? std::string("valid") : "invalid: " + check.reason) << '\n';
      RunReport report;
      report.command = "verify";
      report.input_stats = compute_stats(g);
      report.outcome = check ? "yes" : "no";
      s.emit(report, err);
    } else if (*bench_cmd) {
      nlohmann::json config;
      try {
        config = nlohmann::json::parse(read_source(input, in));
      } catch (const nlohmann::json::parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
      }
      out << bench_csv(run_bench(expand_bench_config(config), jobs));
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace scattered
