#ifndef SCATTERED_IO_HPP
#define SCATTERED_IO_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "scattered/graph.hpp"
#include "scattered/reduction.hpp"
#include "scattered/solver.hpp"

namespace scattered {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// DIMACS edge format: "c" comments, one "p edge <n> <m>" header, then
/// "e <u> <v>" lines with 1-based indices. Vertex i becomes identifier i-1.
/// Duplicate edges collapse; the header edge count is informational.
Graph parse_dimacs(std::string_view text);

/// Header plus one "e" line per edge in lexicographic order, using the
/// 1-based rank of each identifier among present vertices.
std::string write_dimacs(const Graph& g);

/// Relabels present vertices to 0..n-1, preserving their order.
Graph densify(const Graph& g);

/// Certificates: one cycle per line as space-separated 1-based DIMACS
/// indices; blank lines and "c" lines are ignored.
CyclePacking parse_certificate(std::string_view text, std::size_t ell);
std::string write_certificate(const CyclePacking& p);

nlohmann::json trace_to_json(const ReductionTrace& trace);

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t delta = 0;
  std::size_t lambda = 0;
  std::optional<std::size_t> girth;
};

GraphStats compute_stats(const Graph& g);

/// Machine-readable summary of one CLI run. Stats are always recomputed from
/// the graphs involved.
struct RunReport {
  std::string command;
  GraphStats input_stats;
  std::optional<GraphStats> output_stats;
  /// reduced | promoted | yes | no | unknown-resource-limit, or empty.
  std::string outcome;
  std::optional<double> threshold;
  std::size_t trace_length = 0;
  std::int64_t elapsed_ms = 0;
};

nlohmann::json to_json(const GraphStats& s);
nlohmann::json to_json(const RunReport& r);
/// "key=value" lines.
std::string to_text(const RunReport& r);

}  // namespace scattered

#endif  // SCATTERED_IO_HPP
