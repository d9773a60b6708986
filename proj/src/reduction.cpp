#include "scattered/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

namespace scattered {

namespace {

void require_edge(const Graph& g, VertexId u, VertexId v, const char* what) {
  if (!g.has_edge(u, v))
    throw GraphError(std::string(what) + ": {" + std::to_string(u) + ", " +
                     std::to_string(v) + "} is not an edge");
}

bool share_neighbor(const Graph& g, VertexId u, VertexId v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j)
      return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

// Extends `path` past its last vertex while that vertex has degree two,
// stopping at `cap` edges or when the next step would close a cycle.
void extend_back(const Graph& g, std::vector<VertexId>& path,
                 std::size_t cap) {
  while (path.size() - 1 < cap) {
    VertexId end = path.back();
    if (g.degree(end) != 2)
      return;
    VertexId prev = path[path.size() - 2];
    auto nb = g.neighbors(end);
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    if (next == path.front())
      return;
    path.push_back(next);
  }
}

// Vertices met walking away from `v` through `first`, stepping only through
// degree-two vertices, at most `cap` of them, never revisiting `v` or a
// vertex flagged in `avoid`.
std::vector<VertexId> walk_side(const Graph& g, VertexId v, VertexId first,
                                std::size_t cap,
                                const std::set<VertexId>& avoid) {
  std::vector<VertexId> side;
  VertexId prev = v;
  VertexId cur = first;
  while (side.size() < cap) {
    if (cur == v || avoid.count(cur))
      break;
    side.push_back(cur);
    if (g.degree(cur) != 2)
      break;
    auto nb = g.neighbors(cur);
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return side;
}

}  // namespace

Graph replay(const Graph& original, const ReductionTrace& trace) {
  Graph g = original;
  for (const auto& event : trace.events) {
    if (const auto* c = std::get_if<ContractEvent>(&event)) {
      if (g.contract(c->u, c->v) != c->survivor)
        throw GraphError("replay: unexpected survivor " +
                         std::to_string(c->survivor));
    } else {
      const auto& d = std::get<DeleteEvent>(event);
      std::size_t expected = d.reason == DeleteReason::degree0 ? 0 : 1;
      if (!g.has_vertex(d.v) || g.degree(d.v) != expected)
        throw GraphError("replay: vertex " + std::to_string(d.v) +
                         " does not have the recorded degree");
      g.remove_vertex(d.v);
    }
  }
  return g;
}

SubdivisionPath max_subdivision_path_through(const Graph& g, VertexId u,
                                             VertexId v, std::size_t cap) {
  require_edge(g, u, v, "max_subdivision_path_through");
  std::vector<VertexId> path{u, v};
  if (cap <= 1)
    return {std::move(path)};
  extend_back(g, path, cap);
  std::reverse(path.begin(), path.end());
  extend_back(g, path, cap);
  std::reverse(path.begin(), path.end());
  return {std::move(path)};
}

bool is_ell_redundant(const Graph& g, VertexId u, VertexId v,
                      std::size_t ell) {
  require_edge(g, u, v, "is_ell_redundant");
  if (ell < 1)
    throw GraphError("is_ell_redundant: ell must be at least 1");
  if (share_neighbor(g, u, v))
    return false;
  return max_subdivision_path_through(g, u, v, ell + 1).length() > ell;
}

bool is_reduced(const Graph& g, std::size_t ell) {
  for (VertexId v : g.vertices())
    if (g.degree(v) < 2)
      return false;
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) != 2 && g.degree(v) != 2)
      continue;
    if (is_ell_redundant(g, u, v, ell))
      return false;
  }
  return true;
}

ReductionResult reduce(const Graph& g, std::size_t ell) {
  if (ell < 1)
    throw GraphError("reduce: ell must be at least 1");

  ReductionResult result{g, {}, 0};
  Graph& h = result.graph;
  auto& events = result.trace.events;

  std::vector<std::uint8_t> marked(h.id_bound(), 0);
  std::vector<std::uint8_t> queued(h.id_bound(), 0);
  std::deque<VertexId> worklist;
  auto unmark = [&](VertexId v) {
    marked[v] = 0;
    if (!queued[v]) {
      queued[v] = 1;
      worklist.push_back(v);
    }
  };
  for (VertexId v : h.vertices())
    unmark(v);

  while (!worklist.empty()) {
    VertexId v = worklist.front();
    worklist.pop_front();
    queued[v] = 0;
    if (!h.has_vertex(v) || marked[v])
      continue;
    ++result.iterations;

    std::size_t deg = h.degree(v);
    if (deg >= 3) {
      marked[v] = 1;
    } else if (deg == 2) {
      auto nb = h.neighbors(v);
      VertexId a = nb[0];
      VertexId b = nb[1];
      bool redundant =
          !h.has_edge(a, b) &&
          max_subdivision_path_through(h, a, v, ell + 1).length() > ell;
      if (redundant) {
        VertexId survivor = h.contract(a, v);
        events.push_back(ContractEvent{a, v, survivor});
        unmark(survivor);
      } else {
        marked[v] = 1;
      }
    } else if (deg == 1) {
      VertexId u = h.neighbors(v)[0];
      if (marked[u] && h.degree(u) <= 3)
        unmark(u);
      h.remove_vertex(v);
      events.push_back(DeleteEvent{v, DeleteReason::degree1});
    } else {
      h.remove_vertex(v);
      events.push_back(DeleteEvent{v, DeleteReason::degree0});
    }
  }
  return result;
}

RemainderReduction reduce_remainder(const Graph& g,
                                    const LayeredDecomposition& dec) {
  const std::size_t ell = dec.ell;
  if (ell < 1 || dec.layers.size() != ell + 1)
    throw GraphError("reduce_remainder: malformed decomposition");
  if (!is_reduced(g, ell))
    throw GraphError("reduce_remainder: input graph is not " +
                     std::to_string(ell) + "-reduced");

  Graph h = induced_subgraph(g, dec.remainder);
  std::set<VertexId> frontier(dec.outer_layer().begin(),
                              dec.outer_layer().end());
  auto prune = [&] {
    for (auto it = frontier.begin(); it != frontier.end();)
      it = h.has_vertex(*it) ? std::next(it) : frontier.erase(it);
  };
  auto find_degree = [&](std::size_t deg) -> std::optional<VertexId> {
    for (VertexId v : frontier)
      if (h.degree(v) == deg)
        return v;
    return std::nullopt;
  };

  // Pendant paths: strip at most ell+1 edges hanging off a frontier leaf and
  // keep the vertex they hung from in the frontier.
  while (auto leaf = find_degree(1)) {
    VertexId prev = *leaf;
    VertexId cur = h.neighbors(prev)[0];
    std::vector<VertexId> doomed{prev};
    while (doomed.size() < ell + 1 && h.degree(cur) == 2) {
      auto nb = h.neighbors(cur);
      VertexId next = nb[0] == prev ? nb[1] : nb[0];
      doomed.push_back(cur);
      prev = cur;
      cur = next;
    }
    for (VertexId v : doomed)
      h.remove_vertex(v);
    frontier.insert(cur);
    prune();
  }

  // Contracts up to `steps` edges starting at v, following `first_side`
  // then `second_side`; each edge must still be redundant when contracted.
  auto contract_along = [&](VertexId v, const std::vector<VertexId>& first_side,
                            const std::vector<VertexId>& second_side,
                            std::size_t steps) -> std::optional<VertexId> {
    VertexId merged = v;
    std::size_t done = 0;
    for (const auto* side : {&first_side, &second_side}) {
      for (VertexId next : *side) {
        if (done == steps)
          return merged;
        if (!h.has_edge(merged, next) || !is_ell_redundant(h, merged, next, ell))
          return done ? std::optional<VertexId>(merged) : std::nullopt;
        merged = h.contract(merged, next);
        ++done;
      }
    }
    return done ? std::optional<VertexId>(merged) : std::nullopt;
  };

  while (auto v = find_degree(2)) {
    auto nb = h.neighbors(*v);
    VertexId a = nb[0];
    VertexId b = nb[1];
    const std::size_t cap = 2 * ell + 1;
    auto side_a = walk_side(h, *v, a, cap, {});
    std::set<VertexId> seen(side_a.begin(), side_a.end());
    auto side_b = walk_side(h, *v, b, cap, seen);
    std::size_t length = std::min(side_a.size() + side_b.size(), cap);

    if (length <= ell) {
      frontier.erase(*v);
    } else if (length <= 2 * ell) {
      auto merged = contract_along(*v, side_a, side_b, length - ell);
      prune();
      frontier.erase(merged.value_or(*v));
    } else {
      // Go through the side with at least ell+1 edges, preferring the
      // smaller next vertex when both qualify.
      bool use_a = side_a.size() >= ell + 1;
      if (use_a && side_b.size() >= ell + 1)
        use_a = a < b;
      const auto& side = use_a ? side_a : side_b;
      auto merged = contract_along(*v, side, {}, ell + 1);
      prune();
      if (merged)
        frontier.insert(*merged);
      else
        frontier.erase(*v);
    }
  }

  while (auto v = find_degree(0)) {
    h.remove_vertex(*v);
    frontier.erase(*v);
  }

  RemainderReduction out{std::move(h), 0};
  out.removed = dec.remainder.size() - out.graph.order();
  return out;
}

std::vector<std::string> audit_reduced_structure(const Graph& g,
                                                 std::size_t ell) {
  std::vector<std::string> violations;
  auto shortest = girth_and_shortest_cycle(g);
  if (!shortest)
    return violations;

  const std::size_t girth = shortest->length;
  const std::size_t h = girth / 4;
  auto dist = distances_from(g, shortest->cycle);

  std::size_t depth = 0;
  for (VertexId v : g.vertices())
    if (dist[v].finite())
      depth = std::max(depth, dist[v].value());
  std::vector<std::vector<VertexId>> layers(depth + 1);
  for (VertexId v : g.vertices())
    if (dist[v].finite())
      layers[dist[v].value()].push_back(v);
  auto layer_size = [&](std::size_t i) {
    return i < layers.size() ? layers[i].size() : std::size_t{0};
  };
  auto report = [&](const std::string& line) {
    std::ostringstream os;
    os << line << " (girth " << girth << ", ell " << ell << ")";
    violations.push_back(os.str());
  };

  for (std::size_t i = 1; i + 1 <= h && i < layers.size(); ++i) {
    for (VertexId v : layers[i]) {
      std::size_t below = 0;
      for (VertexId w : g.neighbors(v)) {
        if (dist[w] == Distance(i - 1))
          ++below;
        if (dist[w] == Distance(i))
          report("layer " + std::to_string(i) + " is not independent: edge {" +
                 std::to_string(v) + ", " + std::to_string(w) + "}");
      }
      if (below != 1)
        report("vertex " + std::to_string(v) + " in layer " +
               std::to_string(i) + " has " + std::to_string(below) +
               " neighbors one layer down");
    }
  }
  for (std::size_t i = 1; i + 2 <= h; ++i)
    if (layer_size(i + 1) < layer_size(i))
      report("layer " + std::to_string(i + 1) + " is smaller than layer " +
             std::to_string(i));
  for (std::size_t i = 1; i + 1 + ell <= h; ++i)
    if (layer_size(i + ell) < 2 * layer_size(i))
      report("layer " + std::to_string(i + ell) +
             " has fewer than twice the vertices of layer " +
             std::to_string(i));
  if (girth >= 6) {
    int exponent = static_cast<int>(girth / (4 * ell)) - 1;
    double bound = static_cast<double>(girth) * std::ldexp(1.0, exponent);
    if (static_cast<double>(g.order()) < bound)
      report("order " + std::to_string(g.order()) + " below " +
             std::to_string(bound));
  }
  return violations;
}

}  // namespace scattered
