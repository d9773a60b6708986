#include "scattered/reduction.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scattered/generators.hpp"
#include "scattered/solver.hpp"

namespace scattered {
namespace {

// Triangle {0,1,2} with the path 2-3-4-5 hanging off vertex 2.
Graph triangle_with_tail() {
  Graph g = complete_graph(3);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  return g;
}

// Triangles {0,1,2} and {a,b,c} joined by a path of `length` edges from 2 to a.
Graph joined_triangles(std::size_t length) {
  Graph g = complete_graph(3);
  VertexId prev = 2;
  for (std::size_t i = 1; i < length; ++i) {
    VertexId next = g.add_vertex();
    g.add_edge(prev, next);
    prev = next;
  }
  VertexId a = g.add_vertex(), b = g.add_vertex(), c = g.add_vertex();
  g.add_edge(prev, a);
  g.add_edge(a, b);
  g.add_edge(b, c);
  g.add_edge(c, a);
  return g;
}

TEST(SubdivisionPath, CapBindsOnLongCycle) {
  EXPECT_EQ(max_subdivision_path_through(cycle_graph(9), 0, 1, 4).length(), 4u);
}

TEST(SubdivisionPath, CompleteGraphDoesNotExtend) {
  EXPECT_EQ(max_subdivision_path_through(complete_graph(4), 0, 1, 10).length(),
            1u);
}

TEST(SubdivisionPath, PendantTail) {
  auto p = max_subdivision_path_through(triangle_with_tail(), 2, 3, 10);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.vertices.front(), 2u);
  EXPECT_EQ(p.vertices.back(), 5u);
}

TEST(SubdivisionPath, NonEdgeThrows) {
  EXPECT_THROW(max_subdivision_path_through(cycle_graph(5), 0, 2, 3),
               GraphError);
}

TEST(SubdivisionPath, AgreesWithEnumerationUpToCap) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = random_bounded_degree(3 + seed % 10, 3, seed);
    for (auto [u, v] : g.edges()) {
      std::size_t exact = oracle::brute_subdivision_length(g, u, v);
      for (std::size_t cap : {1u, 2u, 3u, 5u, 20u}) {
        auto p = max_subdivision_path_through(g, u, v, cap);
        ASSERT_EQ(p.length(), std::min(exact, cap))
            << "seed " << seed << " edge " << u << "-" << v << " cap " << cap;
        std::set<VertexId> distinct(p.vertices.begin(), p.vertices.end());
        ASSERT_EQ(distinct.size(), p.vertices.size());
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
          ASSERT_TRUE(g.has_edge(p.vertices[i], p.vertices[i + 1]));
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
          ASSERT_EQ(g.degree(p.vertices[i]), 2u);
      }
    }
  }
}

TEST(Redundant, Examples) {
  EXPECT_TRUE(is_ell_redundant(cycle_graph(9), 0, 1, 3));
  EXPECT_FALSE(is_ell_redundant(cycle_graph(4), 0, 1, 3));
  for (std::size_t ell : {1u, 2u, 7u})
    EXPECT_FALSE(is_ell_redundant(complete_graph(3), 0, 1, ell));
  EXPECT_THROW(is_ell_redundant(cycle_graph(6), 0, 3, 1), GraphError);
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(is_reduced(cycle_graph(4), 3));
  EXPECT_FALSE(is_reduced(cycle_graph(9), 3));
  Graph g = complete_graph(3);
  g.add_vertex(3);
  EXPECT_FALSE(is_reduced(g, 2));
  EXPECT_TRUE(is_reduced(Graph(), 1));
}

TEST(IsReduced, AgreesWithDefinition) {
  for (std::uint64_t i = 0; i < 400; ++i) {
    Graph g = oracle::corpus_graph(i);
    for (std::size_t ell = 1; ell <= 4; ++ell)
      ASSERT_EQ(is_reduced(g, ell), oracle::brute_is_reduced(g, ell))
          << "corpus " << i << " ell " << ell;
  }
}

TEST(Reduce, NineCycleToFourCycle) {
  auto result = reduce(cycle_graph(9), 3);
  EXPECT_EQ(result.graph.order(), 4u);
  EXPECT_EQ(result.graph.size(), 4u);
  EXPECT_EQ(girth_and_shortest_cycle(result.graph)->length, 4u);
}

TEST(Reduce, NineCycleToTriangle) {
  auto result = reduce(cycle_graph(9), 1);
  EXPECT_EQ(result.graph.order(), 3u);
  EXPECT_EQ(result.graph.size(), 3u);
}

TEST(Reduce, TreesVanish) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = random_bounded_degree(15, 4, seed);
    if (!is_forest(g))
      continue;
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      auto result = reduce(g, ell);
      ASSERT_EQ(result.graph.order(), 0u);
    }
  }
  EXPECT_EQ(reduce(path_graph(30), 2).graph.order(), 0u);
}

TEST(Reduce, CompleteGraphUnchanged) {
  auto result = reduce(complete_graph(4), 5);
  EXPECT_EQ(result.graph, complete_graph(4));
  EXPECT_TRUE(result.trace.empty());
}

TEST(Reduce, EmptyGraph) {
  auto result = reduce(Graph(), 2);
  EXPECT_EQ(result.graph.order(), 0u);
  EXPECT_EQ(result.iterations, 0u);
}

TEST(Reduce, TailIsStripped) {
  auto result = reduce(triangle_with_tail(), 2);
  EXPECT_EQ(result.graph, complete_graph(3));
  EXPECT_EQ(replay(triangle_with_tail(), result.trace), complete_graph(3));
}

TEST(Reduce, ZeroEllRejected) {
  EXPECT_THROW(reduce(cycle_graph(4), 0), std::invalid_argument);
}

TEST(Reduce, Properties) {
  for (std::uint64_t i = 0; i < 600; ++i) {
    Graph g = oracle::corpus_graph(i);
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      auto result = reduce(g, ell);
      ASSERT_TRUE(oracle::brute_is_reduced(result.graph, ell))
          << "corpus " << i << " ell " << ell;
      ASSERT_TRUE(is_well_formed(result.graph));
      ASSERT_LE(max_degree(result.graph), max_degree(g));
      ASSERT_LE(result.iterations, 2 * g.order());
      ASSERT_EQ(replay(g, result.trace), result.graph);
      auto again = reduce(result.graph, ell);
      ASSERT_TRUE(again.trace.empty());
      ASSERT_EQ(again.graph, result.graph);
    }
  }
}

TEST(Reduce, PreservesPackingDecision) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Graph g = oracle::corpus_graph(i);
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      Graph h = reduce(g, ell).graph;
      ASSERT_EQ(max_packing_size(g, ell, 3), max_packing_size(h, ell, 3))
          << "corpus " << i << " ell " << ell;
    }
  }
}

TEST(Reduce, LongPathIterationBound) {
  Graph p = path_graph(20000);
  auto result = reduce(p, 4);
  EXPECT_EQ(result.graph.order(), 0u);
  EXPECT_LE(result.iterations, 2 * p.order());
}

TEST(Replay, RejectsForeignTrace) {
  auto result = reduce(cycle_graph(9), 3);
  EXPECT_THROW(replay(complete_graph(4), result.trace), GraphError);
}

// Forests without redundant edges stay small relative to their leaves.
TEST(ForestBound, ReducedForests) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    Graph g = random_bounded_degree(4 + seed % 40, 2 + seed % 3, seed);
    if (!is_forest(g))
      continue;
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      Graph f = g;
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto [u, v] : f.edges())
          if (is_ell_redundant(f, u, v, ell)) {
            f = contract_edge(f, u, v);
            changed = true;
            break;
          }
      }
      std::size_t s = 0;
      for (VertexId v : f.vertices())
        s += f.degree(v) <= 1;
      if (s < 2)
        continue;
      ++checked;
      ASSERT_LE(f.order(), 2 * ell * s - 3 * ell + 1)
          << "seed " << seed << " ell " << ell;
    }
  }
  EXPECT_GT(checked, 500u);
}

// C6 is 5-reduced but not 2-reduced; either way R is empty.
TEST(Remainder, SixCycle) {
  Graph c6 = cycle_graph(6);
  auto result = reduce_remainder(c6, layered_decomposition(c6, 5));
  EXPECT_EQ(result.graph.order(), 0u);
  EXPECT_EQ(result.removed, 0u);
  EXPECT_TRUE(layered_decomposition(c6, 2).remainder.empty());
  EXPECT_THROW(reduce_remainder(c6, layered_decomposition(c6, 2)), GraphError);
}

TEST(Remainder, TwoTriangles) {
  Graph g = canonical_yes(2);
  auto result = reduce_remainder(g, layered_decomposition(g, 3));
  EXPECT_EQ(result.graph, induced_subgraph(g, std::vector<VertexId>{3, 4, 5}));
  EXPECT_EQ(result.removed, 0u);
}

TEST(Remainder, TrianglesJoinedByShortPath) {
  Graph g = joined_triangles(2);
  ASSERT_TRUE(is_reduced(g, 2));
  auto dec = layered_decomposition(g, 2);
  auto result = reduce_remainder(g, dec);
  ASSERT_EQ(dec.remainder.size(), 3u);
  EXPECT_EQ(result.graph, induced_subgraph(g, dec.remainder));
  EXPECT_EQ(result.removed, 0u);
}

TEST(Remainder, RequiresReducedInput) {
  Graph c9 = cycle_graph(9);
  EXPECT_THROW(reduce_remainder(c9, layered_decomposition(c9, 3)), GraphError);
}

TEST(Remainder, OutputReducedAndRemovalBounded) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    Graph g = random_bounded_degree(10 + i % 30, 3 + i % 2, 0xabc00 + i);
    for (std::size_t ell = 1; ell <= 3; ++ell) {
      Graph h = reduce(g, ell).graph;
      if (is_forest(h))
        continue;
      auto dec = layered_decomposition(h, ell);
      auto result = reduce_remainder(h, dec);
      ++checked;
      ASSERT_TRUE(oracle::brute_is_reduced(result.graph, ell))
          << "seed " << i << " ell " << ell;
      ASSERT_LE(result.removed, 2 * ell * dec.outer_layer().size())
          << "seed " << i << " ell " << ell;
      ASSERT_EQ(result.removed + result.graph.order(), dec.remainder.size());
      ASSERT_LE(max_degree(result.graph), max_degree(h));
    }
  }
  EXPECT_GT(checked, 500u);
}

TEST(Audit, ReducedGraphsHaveNoViolations) {
  for (std::uint64_t i = 0; i < 1500; ++i) {
    Graph g = random_bounded_degree(6 + i % 60, 3 + i % 3, 0xa0d17 + i);
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      Graph h = reduce(g, ell).graph;
      auto violations = audit_reduced_structure(h, ell);
      ASSERT_TRUE(violations.empty())
          << "seed " << i << " ell " << ell << ": " << violations.front();
    }
  }
}

TEST(Audit, FlagsUnreducedGraphs) {
  // C_40 is far from 1-reduced: girth 40 with 40 < 40 * 2^(10-1).
  EXPECT_FALSE(audit_reduced_structure(cycle_graph(40), 1).empty());
}

TEST(TraceEvents, NineCycleContractsOnly) {
  auto result = reduce(cycle_graph(9), 3);
  EXPECT_EQ(result.trace.size(), 5u);
  for (const auto& e : result.trace.events) {
    ASSERT_TRUE(std::holds_alternative<ContractEvent>(e));
    const auto& c = std::get<ContractEvent>(e);
    EXPECT_EQ(c.survivor, std::min(c.u, c.v));
  }
}

}  // namespace
}  // namespace scattered
