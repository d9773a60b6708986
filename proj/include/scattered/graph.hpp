#ifndef SCATTERED_GRAPH_HPP
#define SCATTERED_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scattered {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Raised when an operation's precondition on the graph is violated
/// (unknown vertex, non-edge, self-loop, contraction through a triangle).
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on a sparse set of vertex identifiers.
///
/// Storage is indexed by identifier, so `id_bound()` may exceed `order()`
/// once vertices have been removed. Neighbor lists are kept sorted, which
/// makes every traversal in the library deterministic.
class Graph {
public:
  Graph() = default;

  /// `n` isolated vertices with identifiers 0..n-1.
  explicit Graph(std::size_t n);

  std::size_t order() const { return order_; }
  std::size_t size() const { return size_; }
  bool empty() const { return order_ == 0; }

  /// One past the largest identifier ever used.
  std::size_t id_bound() const { return adj_.size(); }

  bool has_vertex(VertexId v) const {
    return v < present_.size() && present_[v] != 0;
  }
  bool has_edge(VertexId u, VertexId v) const;

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::span<const VertexId> neighbors(VertexId v) const;

  /// Present vertices in increasing order.
  std::vector<VertexId> vertices() const;
  /// Edges as (smaller, larger) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  /// Adds `v` if absent. Returns false when it was already present.
  bool add_vertex(VertexId v);
  /// Adds a fresh vertex with identifier `id_bound()`.
  VertexId add_vertex();
  /// Adds both endpoints as needed. Returns false on a duplicate edge.
  bool add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);

  /// Merges the endpoints of edge {u, v} into the smaller identifier and
  /// returns it. Throws if {u, v} is not an edge or the endpoints share a
  /// neighbor.
  VertexId contract(VertexId u, VertexId v);

  friend bool operator==(const Graph& a, const Graph& b);

private:
  void require_vertex(VertexId v, const char* what) const;

  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint8_t> present_;
  std::size_t order_ = 0;
  std::size_t size_ = 0;
};

/// Hop distance with an explicit unreachable state that orders above every
/// finite value.
class Distance {
public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::size_t hops) : hops_(hops) {}

  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool finite() const { return hops_.has_value(); }
  std::size_t value() const;

  friend constexpr bool operator==(const Distance&, const Distance&) = default;
  friend constexpr std::strong_ordering operator<=>(const Distance& a,
                                                    const Distance& b) {
    if (a.finite() != b.finite())
      return a.finite() ? std::strong_ordering::less
                        : std::strong_ordering::greater;
    if (!a.finite())
      return std::strong_ordering::equal;
    return *a.hops_ <=> *b.hops_;
  }
  friend constexpr bool operator<(const Distance& a, std::size_t b) {
    return a.finite() && *a.hops_ < b;
  }
  friend constexpr bool operator>=(const Distance& a, std::size_t b) {
    return !(a < b);
  }

  std::string to_string() const;

private:
  std::optional<std::size_t> hops_;
};

/// Distance of every identifier below `id_bound()` to a source set; absent
/// identifiers are unreachable.
using DistanceMap = std::vector<Distance>;

struct ShortestCycle {
  std::size_t length = 0;
  /// Vertices in cyclic order.
  std::vector<VertexId> cycle;
};

/// Shortest cycle C of a graph with the BFS layers around it.
struct LayeredDecomposition {
  std::vector<VertexId> cycle;
  /// layers[i] holds the vertices at distance exactly i from the cycle,
  /// for 0 <= i <= ell. Each layer is sorted.
  std::vector<std::vector<VertexId>> layers;
  /// Everything outside the cycle and layers 1..ell-1. Sorted.
  std::vector<VertexId> remainder;
  std::size_t ell = 0;

  const std::vector<VertexId>& outer_layer() const { return layers.back(); }
};

Graph build_graph(std::span<const Edge> edges,
                  std::span<const VertexId> isolated = {});

Graph contract_edge(const Graph& g, VertexId u, VertexId v);

/// Subgraph induced by `keep`, preserving identifiers.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

/// Disjoint union; the vertices of `b` are shifted by `a.id_bound()`.
Graph disjoint_union(const Graph& a, const Graph& b);

DistanceMap distances_from(const Graph& g, std::span<const VertexId> sources);

/// BFS distances that stop expanding past `radius`; farther vertices are
/// reported unreachable.
DistanceMap distances_within(const Graph& g, std::span<const VertexId> sources,
                             std::size_t radius);

Distance subgraph_distance(const Graph& g, std::span<const VertexId> a,
                           std::span<const VertexId> b);

std::optional<ShortestCycle> girth_and_shortest_cycle(const Graph& g);

bool is_forest(const Graph& g);
std::size_t connected_components(const Graph& g);

std::size_t max_degree(const Graph& g);

/// Size of a maximum independent set of the subgraph induced by `subset`.
std::size_t independence_number(const Graph& g,
                                std::span<const VertexId> subset);

/// Least t such that the graph has no induced K_{1,t}.
std::size_t lambda_index(const Graph& g);

LayeredDecomposition layered_decomposition(const Graph& g, std::size_t ell);

/// Checks every representation invariant; used by tests and generators.
bool is_well_formed(const Graph& g);

}  // namespace scattered

#endif  // SCATTERED_GRAPH_HPP
