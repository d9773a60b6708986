#include "scattered/generators.hpp"

#include <algorithm>
#include <random>

#include "scattered/reduction.hpp"
#include "scattered/solver.hpp"

namespace scattered {

namespace {

std::size_t ipow(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i)
    out *= base;
  return out;
}

Graph de_bruijn_component(std::size_t letters, std::size_t length) {
  const std::size_t count = ipow(letters, length);
  Graph g(count);
  // Shift edges x1..xk -> x2..xk a; loops and repeats vanish in a simple
  // graph.
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t a = 0; a < letters; ++a) {
      std::size_t y = (x * letters + a) % count;
      if (x != y)
        g.add_edge(static_cast<VertexId>(x), static_cast<VertexId>(y));
    }
  return g;
}

std::size_t eccentricity_bound(const Graph& g) {
  std::size_t worst = 0;
  for (VertexId v : g.vertices()) {
    VertexId src[] = {v};
    auto dist = distances_from(g, src);
    for (VertexId w : g.vertices())
      if (dist[w].finite())
        worst = std::max(worst, dist[w].value());
  }
  return worst;
}

}  // namespace

GeneratorReport de_bruijn_instance(std::size_t d, std::size_t ell,
                                   std::size_t r, std::size_t solver_cap) {
  if (d < 2 || ell < 1 || r < 2)
    throw GeneratorError("parameters", "need d >= 2, ell >= 1, r >= 2");

  const bool fallback = d < 4 || ell == 1;
  Graph component = fallback ? complete_graph(3)
                             : de_bruijn_component(d / 2, ell - 1);

  GeneratorReport report;
  for (std::size_t i = 0; i + 1 < r; ++i)
    report.graph = disjoint_union(report.graph, component);

  auto& claims = report.claimed;
  const std::size_t component_order = fallback ? 3 : ipow(d / 2, ell - 1);
  claims.order = (r - 1) * component_order;
  claims.max_degree = fallback ? 2 : 2 * (d / 2);
  claims.is_reduced = true;
  claims.extra["construction"] = fallback ? "triangles" : "de-bruijn";
  claims.extra["components"] = std::to_string(r - 1);
  claims.extra["component_order"] = std::to_string(component_order);

  const Graph& g = report.graph;
  if (g.order() != claims.order)
    throw GeneratorError("order", "built " + std::to_string(g.order()) +
                                      " vertices, claimed " +
                                      std::to_string(claims.order));
  if (max_degree(g) > d)
    throw GeneratorError("max_degree", "degree " +
                                           std::to_string(max_degree(g)) +
                                           " exceeds " + std::to_string(d));
  claims.max_degree = max_degree(g);
  if (!is_reduced(g, ell))
    throw GeneratorError("is_reduced", "copy of the " +
                                           claims.extra["construction"] +
                                           " gadget is not " +
                                           std::to_string(ell) + "-reduced");
  // Diameter below ell keeps every two cycles of a component too close. A
  // triangle has only one cycle.
  std::size_t diameter = eccentricity_bound(component);
  claims.extra["diameter"] = std::to_string(diameter);
  if (!fallback && diameter + 1 > ell)
    throw GeneratorError("diameter", "component diameter " +
                                         std::to_string(diameter) +
                                         " is not below " + std::to_string(ell));
  if (connected_components(g) != r - 1)
    throw GeneratorError("components", "expected " + std::to_string(r - 1));

  claims.extra["packing_check"] = "diameter";
  if (g.order() <= solver_cap) {
    try {
      if (find_packing(g, ell, r))
        throw GeneratorError("no_packing", "solver found an " +
                                               std::to_string(ell) +
                                               "-packing of " +
                                               std::to_string(r) + " cycles");
      claims.extra["packing_check"] = "solver";
    } catch (const ResourceLimitError&) {
      claims.extra["packing_check"] = "diameter (solver limit)";
    }
  }
  report.validated = true;
  return report;
}

Graph is_to_scattered(const Graph& g, std::size_t ell) {
  if (ell < 2)
    throw GraphError("is_to_scattered needs ell >= 2");
  Graph out;
  for (VertexId v : g.vertices())
    out.add_vertex(v);
  std::size_t next = g.id_bound();
  auto fresh = [&] {
    auto id = static_cast<VertexId>(next++);
    out.add_vertex(id);
    return id;
  };
  for (VertexId v : g.vertices()) {
    VertexId a = fresh();
    VertexId b = fresh();
    out.add_edge(v, a);
    out.add_edge(a, b);
    out.add_edge(b, v);
  }
  for (auto [u, v] : g.edges()) {
    VertexId prev = u;
    for (std::size_t i = 0; i + 2 < ell; ++i) {
      VertexId mid = fresh();
      out.add_edge(prev, mid);
      prev = mid;
    }
    out.add_edge(prev, v);
  }
  return out;
}

Graph random_bounded_degree(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t most = n * d / 2;
  std::size_t target = static_cast<std::size_t>(rng() % (most + 1));
  return random_bounded_degree(n, d, rng(), target);
}

Graph random_bounded_degree(std::size_t n, std::size_t d, std::uint64_t seed,
                            std::size_t target_edges) {
  Graph g(n);
  if (n < 2 || d == 0)
    return g;
  std::mt19937_64 rng(seed);
  std::vector<VertexId> spare(n);
  for (std::size_t i = 0; i < n; ++i)
    spare[i] = static_cast<VertexId>(i);

  std::size_t attempts = 20 * target_edges + 100;
  while (g.size() < target_edges && spare.size() >= 2 && attempts-- > 0) {
    std::size_t i = rng() % spare.size();
    std::size_t j = rng() % spare.size();
    VertexId u = spare[i];
    VertexId v = spare[j];
    if (u == v || g.has_edge(u, v))
      continue;
    g.add_edge(u, v);
    // Retire saturated endpoints, larger index first so i stays valid.
    for (std::size_t k : {std::max(i, j), std::min(i, j)})
      if (g.degree(spare[k]) >= d) {
        spare[k] = spare.back();
        spare.pop_back();
      }
  }
  return g;
}

Graph canonical_yes(std::size_t r, std::size_t /*ell*/) {
  Graph g(3 * r);
  for (std::size_t i = 0; i < r; ++i) {
    auto a = static_cast<VertexId>(3 * i);
    g.add_edge(a, a + 1);
    g.add_edge(a + 1, a + 2);
    g.add_edge(a + 2, a);
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3)
    throw GraphError("cycle_graph needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(static_cast<VertexId>(n - 1), 0);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace scattered
