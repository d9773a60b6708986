#ifndef SCATTERED_SOLVER_HPP
#define SCATTERED_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scattered/graph.hpp"

namespace scattered {

/// Thrown whenever an exact procedure would exceed its configured budget.
/// Exact procedures never fall back to approximate answers.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Cycle = std::vector<VertexId>;

/// A certificate: cycles of the host graph that are pairwise at distance at
/// least `ell`.
struct CyclePacking {
  std::vector<Cycle> cycles;
  std::size_t ell = 1;
};

struct PackingCheck {
  bool valid = false;
  /// Empty when valid; otherwise a short machine-readable cause such as
  /// "too-few-cycles", "not-a-cycle:2" or "too-close:0,1".
  std::string reason;

  explicit operator bool() const { return valid; }
};

inline constexpr std::size_t kDefaultCycleLimit = 200000;
inline constexpr std::size_t kDefaultBruteForceCap = 24;

/// Rotates and reflects a cycle so that it starts at its smallest vertex and
/// continues towards the smaller of that vertex's two cycle neighbors.
Cycle canonical_cycle(Cycle cycle);

/// All induced cycles, each once, ordered lexicographically by sorted vertex
/// set. Throws ResourceLimitError when more than `limit` exist.
std::vector<Cycle> enumerate_chordless_cycles(const Graph& g,
                                              std::size_t limit);

/// Dense bit rows, one per cycle: bit j of row i is set when cycles i and j
/// are closer than ell.
class ConflictGraph {
public:
  ConflictGraph(const Graph& g, const std::vector<Cycle>& cycles,
                std::size_t ell);

  std::size_t node_count() const { return rows_.size(); }
  bool conflict(std::size_t i, std::size_t j) const {
    return (rows_[i][j / 64] >> (j % 64)) & 1U;
  }
  const std::vector<std::uint64_t>& row(std::size_t i) const {
    return rows_[i];
  }

  /// An independent set of exactly `size` nodes, if one exists.
  std::optional<std::vector<std::size_t>> independent_set(
      std::size_t size) const;

  /// Largest independent set size, not exceeding `cap`.
  std::size_t independence_number(std::size_t cap) const;

  bool is_independent(const std::vector<std::size_t>& nodes) const;

private:
  std::vector<std::vector<std::uint64_t>> rows_;
};

std::optional<CyclePacking> find_packing(const Graph& g, std::size_t ell,
                                         std::size_t r,
                                         std::size_t limit = kDefaultCycleLimit);

/// Largest r <= cap for which an ell-packing of r cycles exists.
std::size_t max_packing_size(const Graph& g, std::size_t ell, std::size_t cap,
                             std::size_t limit = kDefaultCycleLimit);

PackingCheck verify_packing(const Graph& g, const CyclePacking& p,
                            std::size_t ell, std::size_t r);

/// Minimum feedback vertex set by increasing-size subset search.
std::vector<VertexId> min_fvs_bruteforce(const Graph& g,
                                         std::size_t cap = kDefaultBruteForceCap);

/// Maximum independent set by exhaustive subset search.
std::vector<VertexId> max_independent_set_bruteforce(
    const Graph& g, std::size_t cap = kDefaultBruteForceCap);

/// True when deleting `removed` from `g` leaves a forest.
bool is_feedback_vertex_set(const Graph& g,
                            const std::vector<VertexId>& removed);

}  // namespace scattered

#endif  // SCATTERED_SOLVER_HPP
