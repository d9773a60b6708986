#ifndef SCATTERED_GENERATORS_HPP
#define SCATTERED_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "scattered/graph.hpp"

namespace scattered {

/// A generated instance failed one of its own claimed properties.
class GeneratorError : public std::runtime_error {
public:
  GeneratorError(const std::string& property, const std::string& detail)
      : std::runtime_error(property + ": " + detail), property_(property) {}

  const std::string& property() const { return property_; }

private:
  std::string property_;
};

struct GeneratorClaims {
  std::size_t order = 0;
  std::size_t max_degree = 0;
  bool is_reduced = false;
  std::map<std::string, std::string> extra;
};

struct GeneratorReport {
  Graph graph;
  GeneratorClaims claimed;
  bool validated = false;
};

/// r-1 disjoint copies of the undirected de Bruijn graph on the
/// floor(d/2)^(ell-1) strings of length ell-1 over floor(d/2) letters
/// (loops and parallel edges dropped), or r-1 triangles when d < 4 or
/// ell = 1. Every claim is re-checked before returning; the packing claim
/// goes through the exact solver when the instance has at most
/// `solver_cap` vertices.
GeneratorReport de_bruijn_instance(std::size_t d, std::size_t ell,
                                   std::size_t r,
                                   std::size_t solver_cap = 20);

/// Each edge subdivided ell-2 times and each original vertex v given a
/// private triangle {v, v', v''}. Original identifiers are kept; new
/// vertices are numbered from g.id_bound() upward.
Graph is_to_scattered(const Graph& g, std::size_t ell);

/// Seeded random simple graph on vertices 0..n-1 with maximum degree at
/// most d. The target edge count is drawn uniformly from [0, n*d/2], then
/// random non-edges are inserted while both endpoints have spare degree.
Graph random_bounded_degree(std::size_t n, std::size_t d, std::uint64_t seed);

/// Same process with an explicit target edge count.
Graph random_bounded_degree(std::size_t n, std::size_t d, std::uint64_t seed,
                            std::size_t target_edges);

/// r disjoint triangles on 0..3r-1, positive for every ell.
Graph canonical_yes(std::size_t r, std::size_t ell = 1);

/// Cycle on vertices 0..n-1 (n >= 3) and path on 0..n-1.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph petersen_graph();

}  // namespace scattered

#endif  // SCATTERED_GENERATORS_HPP
