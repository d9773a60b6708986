#include "scattered/bench.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "scattered/generators.hpp"
#include "scattered/kernels.hpp"
#include "scattered/solver.hpp"

namespace scattered {

namespace {

template <typename T>
std::vector<T> list_or(const nlohmann::json& sweep, const char* key, T fallback) {
  if (!sweep.contains(key))
    return {fallback};
  const auto& value = sweep.at(key);
  if (value.is_array())
    return value.get<std::vector<T>>();
  return {value.get<T>()};
}

Graph build_instance(const BenchCase& c) {
  if (c.family == "path")
    return path_graph(c.n);
  if (c.family == "cycle")
    return cycle_graph(c.n);
  if (c.family == "random")
    return random_bounded_degree(c.n, c.d, c.seed);
  if (c.family == "debruijn")
    return de_bruijn_instance(c.d, c.ell, c.r, 0).graph;
  if (c.family == "yes")
    return canonical_yes(c.r, c.ell);
  throw ParameterError("unknown bench family '" + c.family + "'");
}

}  // namespace

std::vector<BenchCase> expand_bench_config(const nlohmann::json& config) {
  std::vector<BenchCase> cases;
  if (!config.contains("sweeps"))
    return cases;
  for (const auto& sweep : config.at("sweeps")) {
    auto family = sweep.at("family").get<std::string>();
    for (auto n : list_or<std::size_t>(sweep, "n", 0))
      for (auto d : list_or<std::size_t>(sweep, "d", 0))
        for (auto ell : list_or<std::size_t>(sweep, "ell", 1))
          for (auto r : list_or<std::size_t>(sweep, "r", 2))
            for (auto seed : list_or<std::uint64_t>(sweep, "seeds", 0))
              cases.push_back({family, n, d, ell, r, seed});
  }
  return cases;
}

BenchRow run_bench_case(const BenchCase& c) {
  BenchRow row;
  row.params = c;
  try {
    Graph g = build_instance(c);
    row.input_order = g.order();
    row.input_size = g.size();
    row.input_max_degree = max_degree(g);
    auto start = std::chrono::steady_clock::now();
    auto outcome = kernelize_scattered(g, c.ell, c.r);
    auto stop = std::chrono::steady_clock::now();
    row.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    row.output_order = outcome.instance.graph.order();
    row.outcome = outcome.promoted() ? "promoted" : "reduced";
    row.threshold = outcome.provenance.threshold_used;
    row.iterations = outcome.provenance.iterations;
  } catch (const ResourceLimitError& e) {
    row.status = std::string("resource-limit: ") + e.what();
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

std::vector<BenchRow> run_bench(const std::vector<BenchCase>& cases,
                                std::size_t jobs) {
  std::vector<BenchRow> rows(cases.size());
  jobs = std::max<std::size_t>(1, std::min(jobs, cases.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++)
      rows[i] = run_bench_case(cases[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << kBenchHeader << '\n';
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"')
        out += '"';
      out += ch;
    }
    return out + "\"";
  };
  for (const auto& row : rows) {
    const auto& p = row.params;
    os << p.family << ',' << p.n << ',' << p.d << ',' << p.ell << ',' << p.r
       << ',' << p.seed << ',' << row.input_order << ',' << row.input_size
       << ',' << row.input_max_degree << ',' << row.output_order << ','
       << row.outcome << ',' << std::setprecision(10) << row.threshold << ','
       << row.iterations << ',' << std::fixed << std::setprecision(3)
       << row.wall_ms << std::defaultfloat << ','
       << (row.status == "ok" ? row.status : quoted(row.status)) << '\n';
  }
  return os.str();
}

}  // namespace scattered
