#ifndef SCATTERED_BENCH_HPP
#define SCATTERED_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace scattered {

/// One generated instance pushed through kernelize_scattered.
struct BenchCase {
  std::string family;  // path | cycle | random | debruijn | yes
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t ell = 1;
  std::size_t r = 2;
  std::uint64_t seed = 0;
};

struct BenchRow {
  BenchCase params;
  std::size_t input_order = 0;
  std::size_t input_size = 0;
  std::size_t input_max_degree = 0;
  std::size_t output_order = 0;
  std::string outcome;  // reduced | promoted, empty on failure
  double threshold = 0.0;
  std::size_t iterations = 0;
  double wall_ms = 0.0;
  std::string status = "ok";
};

inline constexpr const char* kBenchHeader =
    "family,n,d,ell,r,seed,input_order,input_size,input_max_degree,"
    "output_order,outcome,threshold,iterations,wall_ms,status";

/// Expands {"sweeps": [{"family": ..., "n": [...], "d": [...], "ell": [...],
/// "r": [...], "seeds": [...]}, ...]} into the cartesian product of each
/// sweep, in order. Missing lists default to a single neutral value.
std::vector<BenchCase> expand_bench_config(const nlohmann::json& config);

BenchRow run_bench_case(const BenchCase& c);

/// Runs every case, `jobs` at a time; rows come back in case order.
std::vector<BenchRow> run_bench(const std::vector<BenchCase>& cases,
                                std::size_t jobs = 1);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace scattered

#endif  // SCATTERED_BENCH_HPP
