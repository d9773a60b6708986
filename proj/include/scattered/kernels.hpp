#ifndef SCATTERED_KERNELS_HPP
#define SCATTERED_KERNELS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scattered/graph.hpp"
#include "scattered/reduction.hpp"

namespace scattered {

class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Closed-form bounds. Every logarithm is base 2.

/// 24 l^2 d^l r log(8 l^2 d^l r): every ell-reduced graph of maximum degree
/// at most d on more vertices has an ell-packing of r cycles.
double scattered_threshold(std::size_t ell, std::size_t r, std::size_t d);

/// 2l(8l - 4) d^l, the sharper bound for two cycles.
double two_cycles_threshold(std::size_t ell, std::size_t d);

/// f(1) = 3, f(k) = 4k(log k + log log k + 4) + k - 1: beyond a feedback
/// vertex set of f(k) vertices a graph has k disjoint cycles.
double erdos_posa_bound(std::size_t k);

/// Constant c < 16.4 with f(k) <= c k log k for k >= 3.
inline constexpr double kErdosPosaConstant = 16.4;

/// Order (r-1) floor(d/2)^(l-1) of the largest known reduced graphs with
/// maximum degree d and no ell-packing of r cycles.
std::size_t lower_bound_order(std::size_t ell, std::size_t r, std::size_t d);

/// Feedback vertex set at most twice the optimum (local-ratio method on
/// semidisjoint cycles, followed by reverse deletion). O(n^2) for bounded
/// degree.
std::vector<VertexId> fvs_2approx(const Graph& g);

struct KernelInstance {
  Graph graph;
  std::size_t ell = 1;
  std::size_t r = 2;
};

struct KernelProvenance {
  ReductionTrace trace;
  std::size_t iterations = 0;
  /// The threshold the measured quantity was compared against, already
  /// rounded up; 0 when no comparison happened.
  double threshold_used = 0.0;
  /// Order of the reduced graph.
  std::size_t measured_size = 0;
  std::optional<std::size_t> fvs_size;
  /// Star index of the input graph (disjoint-cycles pipeline only).
  std::optional<std::size_t> lambda;
};

enum class KernelKind { reduced, promoted_yes };

/// Either the reduced instance or the canonical positive instance r K3.
struct KernelOutcome {
  KernelKind kind = KernelKind::reduced;
  KernelInstance instance;
  KernelProvenance provenance;

  bool promoted() const { return kind == KernelKind::promoted_yes; }
};

/// Reduce, then promote to r K3 once the reduced order reaches the scattered
/// threshold for its own maximum degree. r = 1 promotes any nonempty
/// reduced graph.
KernelOutcome kernelize_scattered(const Graph& g, std::size_t ell,
                                  std::size_t r);

/// r = 2 with the two-cycle threshold; the canonical output is K3 + K3.
KernelOutcome kernelize_two(const Graph& g, std::size_t ell);

/// Vertex-disjoint cycles (ell = 1) with the feedback-vertex-set test.
KernelOutcome kernelize_disjoint(const Graph& g, std::size_t r);

/// Bound on Reduced outputs of kernelize_disjoint for r >= 3:
/// 148 lambda r log r.
double disjoint_kernel_bound(std::size_t lambda, std::size_t r);

}  // namespace scattered

#endif  // SCATTERED_KERNELS_HPP
