// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "scattered/generators.hpp"
#include "scattered/graph.hpp"
#include "scattered/kernels.hpp"
#include "scattered/reduction.hpp"
#include "scattered/solver.hpp"

using namespace scattered;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5)
      failures.push_back(what);
  }
};

constexpr std::size_t kCorpusSize = 600;
constexpr std::size_t kMaxR = 3;

struct CorpusEntry {
  Graph graph;
  // reduced[ell - 1]
  std::vector<ReductionResult> reduced;
  // packing[ell - 1] = largest r <= kMaxR with an ell-packing
  std::vector<std::size_t> packing;
};

std::vector<CorpusEntry>& corpus() {
  static std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (std::uint64_t i = 0; i < kCorpusSize; ++i) {
      CorpusEntry e;
      e.graph = oracle::corpus_graph(i);
      for (std::size_t ell = 1; ell <= 4; ++ell) {
        e.reduced.push_back(reduce(e.graph, ell));
        e.packing.push_back(max_packing_size(e.graph, ell, kMaxR));
      }
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

std::string describe(std::uint64_t index, std::size_t ell, std::size_t r) {
  std::ostringstream os;
  os << "corpus " << index << " ell " << ell << " r " << r;
  return os.str();
}

Verdict reduction_equivalence() {
  Verdict v;
  auto start = Clock::now();
  auto& entries = corpus();
  std::size_t decisions = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.graph.order() > 18 || max_degree(e.graph) > 5)
      v.fail("corpus " + std::to_string(i) + " outside n <= 18, max degree <= 5");
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      const Graph& h = e.reduced[ell - 1].graph;
      std::size_t after = max_packing_size(h, ell, kMaxR);
      for (std::size_t r = 1; r <= kMaxR; ++r) {
        ++decisions;
        if ((e.packing[ell - 1] >= r) != (after >= r))
          v.fail(describe(i, ell, r));
      }
    }
  }
  std::ostringstream os;
  os << entries.size() << " graphs, " << decisions
     << " decisions compared, " << seconds_since(start) << " s";
  v.detail = os.str();
  if (seconds_since(start) > 120.0)
    v.fail("runtime above 2 minutes");
  return v;
}

Verdict kernel_soundness() {
  Verdict v;
  auto& entries = corpus();
  std::size_t outcomes = 0, reduced_checked = 0, promoted = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const Graph& g = e.graph;
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      std::size_t before = e.packing[ell - 1];
      for (std::size_t r = 1; r <= kMaxR; ++r) {
        auto out = kernelize_scattered(g, ell, r);
        ++outcomes;
        promoted += out.promoted();
        bool after = find_packing(out.instance.graph, ell, r).has_value();
        if (after != (before >= r))
          v.fail("scattered " + describe(i, ell, r));
        if (!out.promoted() && r >= 2) {
          ++reduced_checked;
          std::size_t d =
              std::max<std::size_t>(1, max_degree(out.instance.graph));
          if (!(static_cast<double>(out.instance.graph.order()) <
                scattered_threshold(ell, r, d)))
            v.fail("scattered size " + describe(i, ell, r));
        }
      }
      auto two = kernelize_two(g, ell);
      ++outcomes;
      promoted += two.promoted();
      if (find_packing(two.instance.graph, ell, 2).has_value() != (before >= 2))
        v.fail("two " + describe(i, ell, 2));
      if (!two.promoted()) {
        ++reduced_checked;
        std::size_t d = std::max<std::size_t>(1, max_degree(two.instance.graph));
        if (!(static_cast<double>(two.instance.graph.order()) <
              two_cycles_threshold(ell, d)))
          v.fail("two size " + describe(i, ell, 2));
      }
    }
    for (std::size_t r = 2; r <= kMaxR; ++r) {
      auto out = kernelize_disjoint(g, r);
      ++outcomes;
      promoted += out.promoted();
      if (find_packing(out.instance.graph, 1, r).has_value() !=
          (e.packing[0] >= r))
        v.fail("disjoint " + describe(i, 1, r));
      if (!out.promoted() && r >= 3) {
        ++reduced_checked;
        if (!(static_cast<double>(out.instance.graph.order()) <
              disjoint_kernel_bound(*out.provenance.lambda, r)))
          v.fail("disjoint size " + describe(i, 1, r));
      }
    }
  }
  std::ostringstream os;
  os << outcomes << " pipeline outcomes (" << promoted << " promoted), "
     << reduced_checked << " reduced outputs size-checked";
  v.detail = os.str();
  return v;
}

// Every edge replaced by a path of s + 1 edges.
Graph subdivide(const Graph& g, std::size_t s) {
  Graph out;
  for (VertexId v : g.vertices())
    out.add_vertex(v);
  for (auto [u, v] : g.edges()) {
    VertexId prev = u;
    for (std::size_t i = 0; i < s; ++i) {
      VertexId mid = out.add_vertex();
      out.add_edge(prev, mid);
      prev = mid;
    }
    out.add_edge(prev, v);
  }
  return out;
}

Verdict structural_suite() {
  Verdict v;
  std::size_t graphs = 0, with_cycle = 0, girth6 = 0;
  auto audit = [&](const Graph& g, std::size_t ell, const std::string& name) {
    ++graphs;
    auto shortest = girth_and_shortest_cycle(g);
    if (shortest) {
      ++with_cycle;
      girth6 += shortest->length >= 6;
    }
    for (const auto& line : audit_reduced_structure(g, ell))
      v.fail(name + ": " + line);
  };
  auto& entries = corpus();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t ell = 1; ell <= 4; ++ell)
      audit(entries[i].reduced[ell - 1].graph, ell,
            "corpus " + std::to_string(i) + " ell " + std::to_string(ell));
  for (std::size_t d : {4u, 5u, 6u, 7u, 8u})
    for (std::size_t ell : {1u, 3u, 4u, 5u})
      for (std::size_t r : {2u, 3u}) {
        auto report = de_bruijn_instance(d, ell, r, 0);
        audit(report.graph, ell,
              "de Bruijn d " + std::to_string(d) + " ell " +
                  std::to_string(ell) + " r " + std::to_string(r));
      }
  // Subdivided 2-cores of sparse random graphs, taken at the smallest ell
  // for which they are reduced, reach girth well above 6.
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph core = reduce(random_bounded_degree(20 + seed % 100, 3 + seed % 2,
                                              0x57c0000ULL + seed),
                        1000)
                     .graph;
    if (is_forest(core))
      continue;
    std::size_t s = 1 + seed % 4;
    Graph sub = subdivide(core, s);
    for (std::size_t ell = 1; ell <= 4 * (s + 1); ++ell)
      if (is_reduced(sub, ell)) {
        audit(sub, ell, "subdivided seed " + std::to_string(seed));
        break;
      }
  }
  std::ostringstream os;
  os << graphs << " reduced graphs audited (" << with_cycle
     << " with a cycle, " << girth6 << " with girth >= 6)";
  v.detail = os.str();
  return v;
}

Verdict two_cycle_direction() {
  Verdict v;
  std::size_t negatives = 0, empty = 0;
  auto& entries = corpus();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t ell : {1u, 2u}) {
      const Graph& h = entries[i].reduced[ell - 1].graph;
      if (find_packing(h, ell, 2))
        continue;
      if (h.order() == 0) {
        ++empty;
        continue;
      }
      ++negatives;
      double bound = two_cycles_threshold(ell, max_degree(h));
      if (!(static_cast<double>(h.order()) < bound))
        v.fail(describe(i, ell, 2) + ": order " + std::to_string(h.order()));
      auto shortest = girth_and_shortest_cycle(h);
      if (!shortest || shortest->length > 8 * ell - 4)
        v.fail(describe(i, ell, 2) + ": girth");
    }
  std::ostringstream os;
  os << negatives << " nonempty reduced negatives checked, " << empty
     << " empty reduced graphs (no cycle) skipped";
  v.detail = os.str();
  return v;
}

Verdict lower_bound_instances() {
  Verdict v;
  std::size_t solved = 0, instances = 0;
  for (std::size_t d : {4u, 6u})
    for (std::size_t ell : {3u, 4u})
      for (std::size_t r : {2u, 3u}) {
        std::string name = "d " + std::to_string(d) + " ell " +
                           std::to_string(ell) + " r " + std::to_string(r);
        ++instances;
        try {
          auto report = de_bruijn_instance(d, ell, r);
          const Graph& g = report.graph;
          if (!report.validated || !is_reduced(g, ell) ||
              !oracle::brute_is_reduced(g, ell))
            v.fail(name + ": not reduced");
          if (max_degree(g) > d)
            v.fail(name + ": degree");
          if (g.order() != lower_bound_order(ell, r, d))
            v.fail(name + ": order " + std::to_string(g.order()));
          if (g.order() <= 20) {
            ++solved;
            if (find_packing(g, ell, r))
              v.fail(name + ": packing found");
          }
        } catch (const std::exception& e) {
          v.fail(name + ": " + e.what());
        }
      }
  v.detail = std::to_string(instances) + " instances, " +
             std::to_string(solved) + " confirmed negative by the solver";
  return v;
}

Verdict erdos_posa_arithmetic() {
  Verdict v;
  if (erdos_posa_bound(1) != 3.0)
    v.fail("f(1) != 3");
  auto start = Clock::now();
  std::size_t worst_k = 0;
  double worst_ratio = 0.0;
  for (std::size_t k = 3; k <= 1000000; ++k) {
    double kk = static_cast<double>(k);
    double ratio = erdos_posa_bound(k) / (kk * std::log2(kk));
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_k = k;
    }
    if (!(erdos_posa_bound(k) <= kErdosPosaConstant * kk * std::log2(kk)))
      v.fail("k " + std::to_string(k));
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 1.0)
    v.fail("evaluation took " + std::to_string(elapsed) + " s");
  std::ostringstream os;
  os << "f(1) = 3, max f(k)/(k log k) = " << worst_ratio << " at k = "
     << worst_k << ", " << elapsed << " s";
  v.detail = os.str();
  return v;
}

Verdict fvs_factor() {
  Verdict v;
  std::size_t graphs = 0, optimal = 0;
  for (std::uint64_t seed = 0; graphs < 12000; ++seed) {
    std::size_t n = 1 + seed % 9;
    std::size_t d = 2 + (seed / 9) % 7;
    std::size_t most = n * d / 2;
    std::size_t m = n == 1 ? 0 : (n - 1) + (seed * 7919) % (most - n + 2);
    Graph g = random_bounded_degree(n, d, 0xf7500000ULL + seed, m);
    if (connected_components(g) != 1)
      continue;
    ++graphs;
    auto x = fvs_2approx(g);
    auto best = min_fvs_bruteforce(g);
    if (!is_feedback_vertex_set(g, x))
      v.fail("seed " + std::to_string(seed) + ": not a feedback set");
    if (x.size() > 2 * best.size())
      v.fail("seed " + std::to_string(seed) + ": " + std::to_string(x.size()) +
             " > 2 * " + std::to_string(best.size()));
    optimal += x.size() == best.size();
  }
  v.detail = std::to_string(graphs) + " random connected graphs (n <= 9), " +
             std::to_string(optimal) + " solved optimally";
  return v;
}

Verdict independent_set_equivalence() {
  Verdict v;
  std::size_t graphs = 0, decisions = 0;
  for (std::uint64_t seed = 0; graphs < 240; ++seed) {
    std::size_t n = 1 + seed % 8;
    Graph g = random_bounded_degree(n, 3, 0x1e9a0000ULL + seed);
    ++graphs;
    std::size_t alpha = max_independent_set_bruteforce(g).size();
    for (std::size_t ell = 2; ell <= 4; ++ell) {
      Graph h = is_to_scattered(g, ell);
      std::string name = "seed " + std::to_string(seed) + " ell " +
                         std::to_string(ell);
      if (h.order() != 3 * g.order() + (ell - 2) * g.size())
        v.fail(name + ": size formula");
      if (max_degree(h) != max_degree(g) + 2)
        v.fail(name + ": degree");
      std::size_t packing = max_packing_size(h, ell, 4);
      for (std::size_t r = 1; r <= 4; ++r) {
        ++decisions;
        if ((alpha >= r) != (packing >= r))
          v.fail(name + " r " + std::to_string(r));
      }
    }
  }
  v.detail = std::to_string(graphs) + " graphs (n <= 8, max degree <= 3), " +
             std::to_string(decisions) + " decisions";
  return v;
}

Verdict complexity_evidence() {
  Verdict v;
  std::size_t runs = 0;
  auto check = [&](const Graph& g, std::size_t ell, const std::string& name) {
    ++runs;
    auto result = reduce(g, ell);
    if (result.iterations > 2 * g.order())
      v.fail(name + ": " + std::to_string(result.iterations) + " iterations");
  };
  auto& entries = corpus();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t ell = 1; ell <= 4; ++ell) {
      ++runs;
      if (entries[i].reduced[ell - 1].iterations > 2 * entries[i].graph.order())
        v.fail(describe(i, ell, 0));
    }
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    check(random_bounded_degree(500 + seed * 25, 2 + seed % 5, seed),
          1 + seed % 6, "random seed " + std::to_string(seed));
  for (std::size_t n : {100u, 1000u, 10000u})
    check(path_graph(n), 4, "path " + std::to_string(n));

  Graph path = path_graph(100000);
  auto start = Clock::now();
  auto result = reduce(path, 4);
  double ms = seconds_since(start) * 1000.0;
  ++runs;
  if (result.iterations > 2 * path.order())
    v.fail("path 100000: " + std::to_string(result.iterations) + " iterations");
  if (result.graph.order() != 0)
    v.fail("path 100000 did not reduce to the empty graph");
  std::ostringstream os;
  os << runs << " runs within 2n iterations; path n = 100000, ell = 4: "
     << result.iterations << " iterations, " << ms << " ms";
  if (ms >= 1000.0)
    os << " (soft 1 s target missed)";
  v.detail = os.str();
  return v;
}

Verdict micro_facts() {
  Verdict v;
  auto c9_3 = reduce(cycle_graph(9), 3).graph;
  if (!(c9_3.order() == 4 && c9_3.size() == 4 && oracle::brute_girth(c9_3) == 4 &&
        oracle::brute_is_reduced(c9_3, 3)))
    v.fail("reduce(C9, 3) is not C4");
  auto c9_1 = reduce(cycle_graph(9), 1).graph;
  if (!(c9_1.order() == 3 && c9_1.size() == 3 && oracle::brute_girth(c9_1) == 3))
    v.fail("reduce(C9, 1) is not C3");

  Graph k4 = complete_graph(4);
  std::size_t brute_k4 = 0;
  for (const auto& c : oracle::all_simple_cycles(k4))
    brute_k4 += !oracle::has_chord(k4, c);
  if (brute_k4 != 4 || enumerate_chordless_cycles(k4, 100).size() != 4)
    v.fail("K4 chordless cycles");

  Graph petersen = petersen_graph();
  auto shortest = girth_and_shortest_cycle(petersen);
  if (oracle::brute_girth(petersen) != 5 || !shortest || shortest->length != 5)
    v.fail("Petersen girth");
  v.detail = "C9 -> C4 (ell 3), C9 -> C3 (ell 1), K4: 4 chordless cycles, "
             "Petersen girth 5; all matched by the brute-force oracles";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"reduction preserves packing decisions", reduction_equivalence},
      {"kernel soundness and size bounds", kernel_soundness},
      {"structural suite on reduced graphs", structural_suite},
      {"two-cycle negatives are small with short girth", two_cycle_direction},
      {"lower-bound instances", lower_bound_instances},
      {"Erdos-Posa arithmetic", erdos_posa_arithmetic},
      {"feedback vertex set factor 2", fvs_factor},
      {"independent set reduction equivalence", independent_set_equivalence},
      {"reduction work bound", complexity_evidence},
      {"worked micro-facts", micro_facts},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    all = all && v.pass;
    std::printf("[%s] criterion %zu: %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, v.detail.c_str());
    for (const auto& f : v.failures)
      std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
