#ifndef SCATTERED_REDUCTION_HPP
#define SCATTERED_REDUCTION_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "scattered/graph.hpp"

namespace scattered {

// An edge is ell-redundant when it lies in no triangle and on a path of more
// than ell edges whose internal vertices all have degree two. A graph is
// ell-reduced when it has no such edge and no vertex of degree 0 or 1.
// Contracting redundant edges and deleting low-degree vertices preserves
// the existence of r pairwise ell-distant cycles for every r.

enum class DeleteReason { degree0, degree1 };

struct ContractEvent {
  VertexId u = 0;
  VertexId v = 0;
  VertexId survivor = 0;
  friend bool operator==(const ContractEvent&, const ContractEvent&) = default;
};

struct DeleteEvent {
  VertexId v = 0;
  DeleteReason reason = DeleteReason::degree0;
  friend bool operator==(const DeleteEvent&, const DeleteEvent&) = default;
};

using TraceEvent = std::variant<ContractEvent, DeleteEvent>;

struct ReductionTrace {
  std::vector<TraceEvent> events;

  std::size_t size() const { return events.size(); }
  bool empty() const { return events.empty(); }
};

/// Re-applies every event to a copy of `original`. Throws GraphError if an
/// event does not fit the graph it is applied to (wrong survivor, wrong
/// degree, missing edge).
Graph replay(const Graph& original, const ReductionTrace& trace);

struct SubdivisionPath {
  std::vector<VertexId> vertices;

  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
};

/// Longest path through edge {u, v} whose internal vertices have degree two,
/// grown past v first and then past u, and cut off at `cap` edges.
SubdivisionPath max_subdivision_path_through(const Graph& g, VertexId u,
                                             VertexId v, std::size_t cap);

bool is_ell_redundant(const Graph& g, VertexId u, VertexId v, std::size_t ell);

bool is_reduced(const Graph& g, std::size_t ell);

struct ReductionResult {
  Graph graph;
  ReductionTrace trace;
  /// Worklist iterations that examined a live vertex. Bounded by 2|V|.
  std::size_t iterations = 0;
};

/// Worklist reduction to an ell-reduced graph in O(n * ell) time.
///
/// Unmarked vertices are processed in FIFO order. Degree >= 3 vertices are
/// marked; a degree-2 vertex on a redundant edge is contracted into its
/// smaller neighbor-or-self identifier and stays unmarked; other degree-2
/// vertices are marked; degree 0 and 1 vertices are deleted, and a deleted
/// leaf unmarks its neighbor when that neighbor had degree at most 3.
ReductionResult reduce(const Graph& g, std::size_t ell);

struct RemainderReduction {
  Graph graph;
  /// |R| minus the order of the returned graph.
  std::size_t removed = 0;
};

/// Reduces G[R] for the decomposition `dec` of an ell-reduced graph `g`,
/// driving every rule application from the outer layer N_ell.
///
/// Throws GraphError when `g` is not reduced for `dec.ell`.
RemainderReduction reduce_remainder(const Graph& g,
                                    const LayeredDecomposition& dec);

/// Structural facts every ell-reduced graph with a cycle satisfies, measured
/// around a shortest cycle C with h = floor(girth / 4):
///   - each vertex at distance i in [1, h-1] from C has one neighbor at i-1
///   - each such layer is independent
///   - layer sizes do not shrink for i in [1, h-2]
///   - |N_{i+ell}| >= 2|N_i| for i in [1, h-1-ell]
///   - girth >= 6 implies |V| >= girth * 2^(floor(girth / 4ell) - 1)
/// Returns one human-readable line per violation; empty when all hold.
std::vector<std::string> audit_reduced_structure(const Graph& g,
                                                 std::size_t ell);

}  // namespace scattered

#endif  // SCATTERED_REDUCTION_HPP
