#include "scattered/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scattered/generators.hpp"
#include "scattered/solver.hpp"

namespace scattered {

namespace {

// Thresholds guard the promotion to a yes-instance, so floating-point slack
// always goes upward.
double round_up(double x) {
  return std::nextafter(x + std::abs(x) * 1e-12,
                        std::numeric_limits<double>::infinity());
}

double power(std::size_t base, std::size_t exponent) {
  return std::pow(static_cast<double>(base), static_cast<double>(exponent));
}

KernelOutcome start(const Graph& g, std::size_t ell, std::size_t r) {
  auto reduced = reduce(g, ell);
  KernelOutcome out;
  out.instance = {std::move(reduced.graph), ell, r};
  out.provenance.trace = std::move(reduced.trace);
  out.provenance.iterations = reduced.iterations;
  out.provenance.measured_size = out.instance.graph.order();
  return out;
}

void promote(KernelOutcome& out) {
  out.kind = KernelKind::promoted_yes;
  out.instance.graph = canonical_yes(out.instance.r, out.instance.ell);
}

// Cleans up vertices of degree at most one, repeatedly.
void strip_low_degree(Graph& h) {
  std::vector<VertexId> stack;
  for (VertexId v : h.vertices())
    if (h.degree(v) <= 1)
      stack.push_back(v);
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (!h.has_vertex(v) || h.degree(v) > 1)
      continue;
    std::vector<VertexId> nb(h.neighbors(v).begin(), h.neighbors(v).end());
    h.remove_vertex(v);
    for (VertexId w : nb)
      if (h.degree(w) <= 1)
        stack.push_back(w);
  }
}

// A cycle in which every vertex but at most one has degree two, assuming
// minimum degree two.
std::optional<std::vector<VertexId>> semidisjoint_cycle(const Graph& h) {
  std::vector<std::uint8_t> seen(h.id_bound(), 0);
  for (VertexId v : h.vertices()) {
    if (h.degree(v) != 2 || seen[v])
      continue;
    seen[v] = 1;
    auto nb = h.neighbors(v);
    std::vector<VertexId> chain{v};
    VertexId ends[2];
    bool closed = false;
    for (int side = 0; side < 2 && !closed; ++side) {
      VertexId prev = v;
      VertexId cur = nb[side];
      while (h.degree(cur) == 2) {
        if (cur == v) {
          closed = true;
          break;
        }
        seen[cur] = 1;
        if (side == 0)
          chain.push_back(cur);
        else
          chain.insert(chain.begin(), cur);
        auto cn = h.neighbors(cur);
        VertexId next = cn[0] == prev ? cn[1] : cn[0];
        prev = cur;
        cur = next;
      }
      ends[side] = cur;
    }
    if (closed)
      return chain;
    if (ends[0] == ends[1]) {
      chain.push_back(ends[0]);
      return chain;
    }
  }
  return std::nullopt;
}

}  // namespace

double scattered_threshold(std::size_t ell, std::size_t r, std::size_t d) {
  if (ell < 1 || r < 2 || d < 1)
    throw ParameterError("scattered_threshold needs ell >= 1, r >= 2, d >= 1");
  double core = static_cast<double>(ell * ell) * power(d, ell) *
                static_cast<double>(r);
  return 24.0 * core * std::log2(8.0 * core);
}

double two_cycles_threshold(std::size_t ell, std::size_t d) {
  if (ell < 1 || d < 1)
    throw ParameterError("two_cycles_threshold needs ell >= 1, d >= 1");
  return 2.0 * static_cast<double>(ell) * static_cast<double>(8 * ell - 4) *
         power(d, ell);
}

double erdos_posa_bound(std::size_t k) {
  if (k < 1)
    throw ParameterError("erdos_posa_bound needs k >= 1");
  if (k == 1)
    return 3.0;
  double kk = static_cast<double>(k);
  double lg = std::log2(kk);
  return 4.0 * kk * (lg + std::log2(lg) + 4.0) + kk - 1.0;
}

std::size_t lower_bound_order(std::size_t ell, std::size_t r, std::size_t d) {
  if (ell < 1 || r < 2 || d < 2)
    throw ParameterError("lower_bound_order needs ell >= 1, r >= 2, d >= 2");
  std::size_t order = r - 1;
  for (std::size_t i = 1; i < ell; ++i) {
    if (order > std::numeric_limits<std::size_t>::max() / (d / 2))
      throw ParameterError("lower_bound_order overflows");
    order *= d / 2;
  }
  return order;
}

double disjoint_kernel_bound(std::size_t lambda, std::size_t r) {
  return 148.0 * static_cast<double>(lambda) * static_cast<double>(r) *
         std::log2(static_cast<double>(r));
}

std::vector<VertexId> fvs_2approx(const Graph& g) {
  Graph h = g;
  strip_low_degree(h);
  std::vector<double> weight(h.id_bound(), 1.0);
  std::vector<VertexId> picked;
  constexpr double kZero = 1e-12;

  while (!h.empty()) {
    std::vector<VertexId> hit;
    if (auto cycle = semidisjoint_cycle(h)) {
      auto lightest = *std::min_element(
          cycle->begin(), cycle->end(),
          [&](VertexId a, VertexId b) { return weight[a] < weight[b]; });
      double gamma = weight[lightest];
      for (VertexId u : *cycle) {
        weight[u] -= gamma;
        if (u == lightest || weight[u] <= kZero)
          hit.push_back(u);
      }
    } else {
      auto vs = h.vertices();
      VertexId lightest = vs.front();
      double gamma = std::numeric_limits<double>::infinity();
      for (VertexId u : vs) {
        double ratio = weight[u] / static_cast<double>(h.degree(u) - 1);
        if (ratio < gamma) {
          gamma = ratio;
          lightest = u;
        }
      }
      for (VertexId u : vs) {
        weight[u] -= gamma * static_cast<double>(h.degree(u) - 1);
        if (u == lightest || weight[u] <= kZero)
          hit.push_back(u);
      }
    }
    std::sort(hit.begin(), hit.end());
    for (VertexId u : hit) {
      weight[u] = 0.0;
      h.remove_vertex(u);
      picked.push_back(u);
    }
    strip_low_degree(h);
  }

  // Drop vertices the others make unnecessary, latest first.
  std::vector<VertexId> solution = picked;
  for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
    std::vector<VertexId> without;
    for (VertexId u : solution)
      if (u != *it)
        without.push_back(u);
    if (is_feedback_vertex_set(g, without))
      solution = std::move(without);
  }
  std::sort(solution.begin(), solution.end());
  return solution;
}

KernelOutcome kernelize_scattered(const Graph& g, std::size_t ell,
                                  std::size_t r) {
  if (ell < 1 || r < 1)
    throw ParameterError("kernelize_scattered needs ell >= 1, r >= 1");
  auto out = start(g, ell, r);
  const std::size_t order = out.provenance.measured_size;
  if (r == 1) {
    // A nonempty reduced graph has minimum degree two, hence a cycle.
    out.provenance.threshold_used = 1.0;
  } else {
    std::size_t d = std::max<std::size_t>(1, max_degree(out.instance.graph));
    out.provenance.threshold_used = round_up(scattered_threshold(ell, r, d));
  }
  if (static_cast<double>(order) >= out.provenance.threshold_used)
    promote(out);
  return out;
}

KernelOutcome kernelize_two(const Graph& g, std::size_t ell) {
  if (ell < 1)
    throw ParameterError("kernelize_two needs ell >= 1");
  auto out = start(g, ell, 2);
  std::size_t d = std::max<std::size_t>(1, max_degree(out.instance.graph));
  out.provenance.threshold_used = two_cycles_threshold(ell, d);
  if (static_cast<double>(out.provenance.measured_size) >=
      out.provenance.threshold_used)
    promote(out);
  return out;
}

KernelOutcome kernelize_disjoint(const Graph& g, std::size_t r) {
  if (r < 2)
    throw ParameterError("kernelize_disjoint needs r >= 2");
  const std::size_t lambda = lambda_index(g);
  if (r == 2) {
    auto out = kernelize_two(g, 1);
    out.provenance.lambda = lambda;
    return out;
  }
  auto out = start(g, 1, r);
  out.provenance.lambda = lambda;
  if (lambda <= 1)
    return out;

  auto fvs = fvs_2approx(out.instance.graph);
  out.provenance.fvs_size = fvs.size();
  out.provenance.threshold_used = round_up(2.0 * erdos_posa_bound(r));
  if (static_cast<double>(fvs.size()) > out.provenance.threshold_used)
    promote(out);
  return out;
}

}  // namespace scattered
