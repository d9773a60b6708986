#include "scattered/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace scattered {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(Bits& b, std::size_t i) {
  b[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

template <typename F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    auto word = b[w];
    while (word) {
      auto bit = static_cast<std::size_t>(std::countr_zero(word));
      f(w * 64 + bit);
      word &= word - 1;
    }
  }
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False when a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent_[a] = b;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

bool acyclic_without(const Graph& g, const std::vector<std::uint8_t>& removed) {
  UnionFind uf(g.id_bound());
  for (auto [u, v] : g.edges()) {
    if (removed[u] || removed[v])
      continue;
    if (!uf.unite(u, v))
      return false;
  }
  return true;
}

// Induced-path search rooted at the smallest vertex of each cycle.
class ChordlessEnumerator {
public:
  ChordlessEnumerator(const Graph& g, std::size_t limit)
      : g_(g),
        limit_(limit),
        on_path_(g.id_bound(), 0),
        touches_interior_(g.id_bound(), 0),
        touches_root_(g.id_bound(), 0) {}

  std::vector<Cycle> run() {
    for (VertexId s : g_.vertices()) {
      root_ = s;
      for (VertexId w : g_.neighbors(s))
        touches_root_[w] = 1;
      on_path_[s] = 1;
      path_.assign(1, s);
      for (VertexId w : g_.neighbors(s))
        if (w > s)
          step(w);
      on_path_[s] = 0;
      for (VertexId w : g_.neighbors(s))
        touches_root_[w] = 0;
    }
    for (auto& c : found_)
      c = canonical_cycle(std::move(c));
    std::vector<std::pair<std::vector<VertexId>, std::size_t>> keyed;
    keyed.reserve(found_.size());
    for (std::size_t i = 0; i < found_.size(); ++i) {
      auto key = found_[i];
      std::sort(key.begin(), key.end());
      keyed.emplace_back(std::move(key), i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Cycle> out;
    out.reserve(found_.size());
    for (auto& [key, i] : keyed)
      out.push_back(std::move(found_[i]));
    return out;
  }

private:
  // Appends x to the path, whose last vertex is adjacent to x.
  void step(VertexId x) {
    const bool extends_interior = path_.size() >= 2;
    VertexId previous_last = path_.back();
    if (extends_interior)
      for (VertexId w : g_.neighbors(previous_last))
        ++touches_interior_[w];
    path_.push_back(x);
    on_path_[x] = 1;

    VertexId second = path_[1];
    for (VertexId y : g_.neighbors(x)) {
      if (y <= root_ || on_path_[y] || touches_interior_[y])
        continue;
      if (touches_root_[y]) {
        // y closes the cycle; count each cycle in one direction only.
        if (second < y) {
          if (found_.size() >= limit_)
            throw ResourceLimitError("more than " + std::to_string(limit_) +
                                     " chordless cycles");
          found_.push_back(path_);
          found_.back().push_back(y);
        }
        continue;
      }
      step(y);
    }

    on_path_[x] = 0;
    path_.pop_back();
    if (extends_interior)
      for (VertexId w : g_.neighbors(previous_last))
        --touches_interior_[w];
  }

  const Graph& g_;
  std::size_t limit_;
  VertexId root_ = 0;
  std::vector<VertexId> path_;
  std::vector<std::uint8_t> on_path_;
  std::vector<std::uint32_t> touches_interior_;
  std::vector<std::uint8_t> touches_root_;
  std::vector<Cycle> found_;
};

bool search_independent(const std::vector<Bits>& rows, Bits candidates,
                        std::size_t need, std::vector<std::size_t>& chosen) {
  if (need == 0)
    return true;
  if (popcount(candidates) < need)
    return false;

  // Some solution meets the closed neighborhood of any candidate, so branch
  // over the smallest one.
  std::size_t pivot = 0;
  std::size_t pivot_degree = static_cast<std::size_t>(-1);
  for_each_bit(candidates, [&](std::size_t v) {
    if (pivot_degree == 0)
      return;
    std::size_t d = 0;
    for (std::size_t w = 0; w < candidates.size(); ++w)
      d += static_cast<std::size_t>(std::popcount(rows[v][w] & candidates[w]));
    if (d < pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  });

  Bits branch(candidates.size(), 0);
  for (std::size_t w = 0; w < candidates.size(); ++w)
    branch[w] = rows[pivot][w] & candidates[w];
  set_bit(branch, pivot);

  std::vector<std::size_t> order;
  for_each_bit(branch, [&](std::size_t v) { order.push_back(v); });
  for (std::size_t u : order) {
    Bits next = candidates;
    for (std::size_t w = 0; w < next.size(); ++w)
      next[w] &= ~rows[u][w];
    clear_bit(next, u);
    chosen.push_back(u);
    if (search_independent(rows, std::move(next), need - 1, chosen))
      return true;
    chosen.pop_back();
    clear_bit(candidates, u);
    if (popcount(candidates) < need)
      return false;
  }
  return false;
}

}  // namespace

Cycle canonical_cycle(Cycle cycle) {
  if (cycle.size() < 2)
    return cycle;
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1])
    std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::vector<Cycle> enumerate_chordless_cycles(const Graph& g,
                                              std::size_t limit) {
  if (limit == 0)
    throw ResourceLimitError("cycle limit must be positive");
  return ChordlessEnumerator(g, limit).run();
}

ConflictGraph::ConflictGraph(const Graph& g, const std::vector<Cycle>& cycles,
                             std::size_t ell) {
  const std::size_t n = cycles.size();
  rows_.assign(n, Bits(words_for(n), 0));

  std::vector<std::vector<std::size_t>> containing(g.id_bound());
  for (std::size_t j = 0; j < n; ++j)
    for (VertexId v : cycles[j])
      containing[v].push_back(j);

  // Cycles i and j conflict when j has a vertex within ell-1 of cycle i.
  const std::size_t radius = ell == 0 ? 0 : ell - 1;
  for (std::size_t i = 0; i < n; ++i) {
    auto ball = distances_within(g, cycles[i], radius);
    for (VertexId v = 0; v < ball.size(); ++v) {
      if (!ball[v].finite())
        continue;
      for (std::size_t j : containing[v])
        if (j != i) {
          set_bit(rows_[i], j);
          set_bit(rows_[j], i);
        }
    }
  }
}

std::optional<std::vector<std::size_t>> ConflictGraph::independent_set(
    std::size_t size) const {
  Bits all(words_for(node_count()), 0);
  for (std::size_t i = 0; i < node_count(); ++i)
    set_bit(all, i);
  std::vector<std::size_t> chosen;
  if (!search_independent(rows_, std::move(all), size, chosen))
    return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::size_t ConflictGraph::independence_number(std::size_t cap) const {
  std::size_t best = 0;
  while (best < cap && independent_set(best + 1))
    ++best;
  return best;
}

bool ConflictGraph::is_independent(const std::vector<std::size_t>& nodes) const {
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (nodes[a] == nodes[b] || conflict(nodes[a], nodes[b]))
        return false;
  return true;
}

std::optional<CyclePacking> find_packing(const Graph& g, std::size_t ell,
                                         std::size_t r, std::size_t limit) {
  if (ell < 1 || r < 1)
    throw std::invalid_argument("find_packing: ell and r must be positive");
  auto cycles = enumerate_chordless_cycles(g, limit);
  ConflictGraph conflicts(g, cycles, ell);
  auto chosen = conflicts.independent_set(r);
  if (!chosen)
    return std::nullopt;
  CyclePacking packing;
  packing.ell = ell;
  for (std::size_t i : *chosen)
    packing.cycles.push_back(cycles[i]);
  return packing;
}

std::size_t max_packing_size(const Graph& g, std::size_t ell, std::size_t cap,
                             std::size_t limit) {
  if (ell < 1)
    throw std::invalid_argument("max_packing_size: ell must be positive");
  auto cycles = enumerate_chordless_cycles(g, limit);
  return ConflictGraph(g, cycles, ell).independence_number(cap);
}

PackingCheck verify_packing(const Graph& g, const CyclePacking& p,
                            std::size_t ell, std::size_t r) {
  if (p.cycles.size() < r)
    return {false, "too-few-cycles"};
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    const auto& c = p.cycles[i];
    auto bad = PackingCheck{false, "not-a-cycle:" + std::to_string(i)};
    if (c.size() < 3)
      return bad;
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return bad;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!g.has_edge(c[k], c[(k + 1) % c.size()]))
        return bad;
  }
  for (std::size_t i = 0; i < p.cycles.size(); ++i)
    for (std::size_t j = i + 1; j < p.cycles.size(); ++j)
      if (subgraph_distance(g, p.cycles[i], p.cycles[j]) < ell)
        return {false,
                "too-close:" + std::to_string(i) + "," + std::to_string(j)};
  return {true, ""};
}

bool is_feedback_vertex_set(const Graph& g,
                            const std::vector<VertexId>& removed) {
  std::vector<std::uint8_t> flag(g.id_bound(), 0);
  for (VertexId v : removed)
    if (v < flag.size())
      flag[v] = 1;
  return acyclic_without(g, flag);
}

std::vector<VertexId> min_fvs_bruteforce(const Graph& g, std::size_t cap) {
  if (g.order() > cap)
    throw ResourceLimitError("min_fvs_bruteforce: " + std::to_string(g.order()) +
                             " vertices exceeds cap " + std::to_string(cap));
  auto vs = g.vertices();
  const std::size_t n = vs.size();
  std::vector<std::uint8_t> flag(g.id_bound(), 0);
  std::vector<std::size_t> pick;

  // Lexicographic k-subsets of vs, smallest k first.
  for (std::size_t k = 0; k <= n; ++k) {
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      for (std::size_t i : pick)
        flag[vs[i]] = 1;
      bool ok = acyclic_without(g, flag);
      for (std::size_t i : pick)
        flag[vs[i]] = 0;
      if (ok) {
        std::vector<VertexId> out;
        for (std::size_t i : pick)
          out.push_back(vs[i]);
        return out;
      }
      std::size_t pos = k;
      while (pos > 0 && pick[pos - 1] == n - k + pos - 1)
        --pos;
      if (pos == 0)
        break;
      ++pick[pos - 1];
      for (std::size_t i = pos; i < k; ++i)
        pick[i] = pick[i - 1] + 1;
    }
  }
  return vs;
}

std::vector<VertexId> max_independent_set_bruteforce(const Graph& g,
                                                     std::size_t cap) {
  if (g.order() > std::min<std::size_t>(cap, 40))
    throw ResourceLimitError("max_independent_set_bruteforce: " +
                             std::to_string(g.order()) +
                             " vertices exceeds cap " + std::to_string(cap));
  auto vs = g.vertices();
  const std::size_t n = vs.size();
  std::vector<std::size_t> local(g.id_bound(), 0);
  for (std::size_t i = 0; i < n; ++i)
    local[vs[i]] = i;
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[local[u]] |= std::uint64_t{1} << local[v];
    adj[local[v]] |= std::uint64_t{1} << local[u];
  }

  std::uint64_t best = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    if (std::popcount(mask) <= std::popcount(best))
      continue;
    bool independent = true;
    for (auto rest = mask; rest && independent; rest &= rest - 1)
      independent = (adj[std::countr_zero(rest)] & mask) == 0;
    if (independent)
      best = mask;
  }
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < n; ++i)
    if ((best >> i) & 1U)
      out.push_back(vs[i]);
  return out;
}

}  // namespace scattered
