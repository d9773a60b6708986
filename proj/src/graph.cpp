#include "scattered/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace scattered {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void insert_sorted(std::vector<VertexId>& list, VertexId v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void erase_sorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v)
    list.erase(it);
}

// Plain BFS returning raw hop counts (kNone when unreached), optionally
// truncated at `radius`.
std::vector<std::size_t> bfs(const Graph& g, std::span<const VertexId> sources,
                             std::size_t radius) {
  std::vector<std::size_t> dist(g.id_bound(), kNone);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (!g.has_vertex(s))
      throw GraphError("unknown source vertex " + std::to_string(s));
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    if (dist[u] >= radius)
      continue;
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kNone) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMap to_distance_map(const std::vector<std::size_t>& raw) {
  DistanceMap out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw[i] != kNone)
      out[i] = Distance(raw[i]);
  return out;
}

// Vertices of the 2-core; only these can lie on a cycle.
std::vector<std::uint8_t> two_core(const Graph& g) {
  std::vector<std::uint8_t> alive(g.id_bound(), 0);
  std::vector<std::size_t> deg(g.id_bound(), 0);
  std::vector<VertexId> stack;
  for (VertexId v : g.vertices()) {
    alive[v] = 1;
    deg[v] = g.degree(v);
    if (deg[v] < 2)
      stack.push_back(v);
  }
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (!alive[v])
      continue;
    alive[v] = 0;
    for (VertexId w : g.neighbors(v))
      if (alive[w] && --deg[w] == 1)
        stack.push_back(w);
  }
  return alive;
}

// Exact maximum independent set size over the vertices flagged in `alive`.
// Degree <= 1 vertices are taken greedily; otherwise branch on a vertex of
// maximum degree.
std::size_t mis_size(const std::vector<std::vector<std::size_t>>& adj,
                     std::vector<std::uint8_t>& alive) {
  std::size_t best_vertex = kNone;
  std::size_t best_degree = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!alive[v])
      continue;
    std::size_t d = 0;
    for (std::size_t w : adj[v])
      d += alive[w];
    if (d <= 1) {
      std::vector<std::size_t> removed{v};
      alive[v] = 0;
      for (std::size_t w : adj[v])
        if (alive[w]) {
          alive[w] = 0;
          removed.push_back(w);
        }
      std::size_t result = 1 + mis_size(adj, alive);
      for (std::size_t w : removed)
        alive[w] = 1;
      return result;
    }
    if (best_vertex == kNone || d > best_degree) {
      best_vertex = v;
      best_degree = d;
    }
  }
  if (best_vertex == kNone)
    return 0;

  alive[best_vertex] = 0;
  std::size_t without = mis_size(adj, alive);
  std::vector<std::size_t> removed;
  for (std::size_t w : adj[best_vertex])
    if (alive[w]) {
      alive[w] = 0;
      removed.push_back(w);
    }
  std::size_t with = 1 + mis_size(adj, alive);
  for (std::size_t w : removed)
    alive[w] = 1;
  alive[best_vertex] = 1;
  return std::max(without, with);
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n) : adj_(n), present_(n, 1), order_(n) {}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v))
    return false;
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  const auto& shorter = a.size() <= b.size() ? a : b;
  VertexId other = a.size() <= b.size() ? v : u;
  return std::binary_search(shorter.begin(), shorter.end(), other);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  require_vertex(v, "neighbors");
  return adj_[v];
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(order_);
  for (std::size_t v = 0; v < present_.size(); ++v)
    if (present_[v])
      out.push_back(static_cast<VertexId>(v));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (VertexId v : adj_[u])
      if (u < v)
        out.emplace_back(static_cast<VertexId>(u), v);
  return out;
}

bool Graph::add_vertex(VertexId v) {
  if (v >= adj_.size()) {
    adj_.resize(std::size_t{v} + 1);
    present_.resize(std::size_t{v} + 1, 0);
  }
  if (present_[v])
    return false;
  present_[v] = 1;
  ++order_;
  return true;
}

VertexId Graph::add_vertex() {
  auto v = static_cast<VertexId>(adj_.size());
  add_vertex(v);
  return v;
}

bool Graph::add_edge(VertexId u, VertexId v) {
  if (u == v)
    throw GraphError("self-loop at vertex " + std::to_string(u));
  add_vertex(u);
  add_vertex(v);
  if (has_edge(u, v))
    return false;
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++size_;
  return true;
}

void Graph::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v))
    throw GraphError("not an edge: {" + std::to_string(u) + ", " +
                     std::to_string(v) + "}");
  erase_sorted(adj_[u], v);
  erase_sorted(adj_[v], u);
  --size_;
}

void Graph::remove_vertex(VertexId v) {
  require_vertex(v, "remove_vertex");
  for (VertexId w : adj_[v])
    erase_sorted(adj_[w], v);
  size_ -= adj_[v].size();
  adj_[v].clear();
  present_[v] = 0;
  --order_;
}

VertexId Graph::contract(VertexId u, VertexId v) {
  if (!has_edge(u, v))
    throw GraphError("cannot contract non-edge {" + std::to_string(u) + ", " +
                     std::to_string(v) + "}");
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  for (VertexId w : a)
    if (w != v && std::binary_search(b.begin(), b.end(), w))
      throw GraphError("cannot contract {" + std::to_string(u) + ", " +
                       std::to_string(v) + "}: common neighbor " +
                       std::to_string(w));
  VertexId keep = std::min(u, v);
  VertexId gone = std::max(u, v);
  std::vector<VertexId> moved;
  for (VertexId w : adj_[gone])
    if (w != keep)
      moved.push_back(w);
  remove_vertex(gone);
  for (VertexId w : moved)
    add_edge(keep, w);
  return keep;
}

void Graph::require_vertex(VertexId v, const char* what) const {
  if (!has_vertex(v))
    throw GraphError(std::string(what) + ": unknown vertex " +
                     std::to_string(v));
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order_ != b.order_ || a.size_ != b.size_)
    return false;
  std::size_t bound = std::max(a.id_bound(), b.id_bound());
  for (std::size_t v = 0; v < bound; ++v) {
    bool in_a = a.has_vertex(static_cast<VertexId>(v));
    bool in_b = b.has_vertex(static_cast<VertexId>(v));
    if (in_a != in_b)
      return false;
    if (in_a && a.adj_[v] != b.adj_[v])
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Distance

std::size_t Distance::value() const {
  if (!hops_)
    throw std::logic_error("value() of an unreachable distance");
  return *hops_;
}

std::string Distance::to_string() const {
  return hops_ ? std::to_string(*hops_) : std::string("unreachable");
}

// ---------------------------------------------------------------------------
// Free functions

Graph build_graph(std::span<const Edge> edges,
                  std::span<const VertexId> isolated) {
  Graph g;
  for (VertexId v : isolated)
    g.add_vertex(v);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

Graph contract_edge(const Graph& g, VertexId u, VertexId v) {
  Graph out = g;
  out.contract(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  Graph out;
  std::vector<std::uint8_t> inside(g.id_bound(), 0);
  for (VertexId v : keep) {
    if (!g.has_vertex(v))
      throw GraphError("induced_subgraph: unknown vertex " + std::to_string(v));
    inside[v] = 1;
    out.add_vertex(v);
  }
  for (VertexId v : keep)
    for (VertexId w : g.neighbors(v))
      if (v < w && inside[w])
        out.add_edge(v, w);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out = a;
  auto shift = static_cast<VertexId>(a.id_bound());
  for (VertexId v : b.vertices())
    out.add_vertex(v + shift);
  for (auto [u, v] : b.edges())
    out.add_edge(u + shift, v + shift);
  return out;
}

DistanceMap distances_from(const Graph& g, std::span<const VertexId> sources) {
  return to_distance_map(bfs(g, sources, kNone));
}

DistanceMap distances_within(const Graph& g, std::span<const VertexId> sources,
                             std::size_t radius) {
  return to_distance_map(bfs(g, sources, radius));
}

Distance subgraph_distance(const Graph& g, std::span<const VertexId> a,
                           std::span<const VertexId> b) {
  if (a.empty() || b.empty())
    throw GraphError("subgraph_distance: empty vertex set");
  for (VertexId v : b)
    if (!g.has_vertex(v))
      throw GraphError("subgraph_distance: unknown vertex " +
                       std::to_string(v));
  auto dist = bfs(g, a, kNone);
  std::size_t best = kNone;
  for (VertexId v : b)
    best = std::min(best, dist[v]);
  return best == kNone ? Distance::unreachable() : Distance(best);
}

std::optional<ShortestCycle> girth_and_shortest_cycle(const Graph& g) {
  if (is_forest(g))
    return std::nullopt;

  auto core = two_core(g);
  std::size_t best = kNone;
  std::vector<VertexId> best_cycle;

  std::vector<std::size_t> dist(g.id_bound(), kNone);
  std::vector<VertexId> parent(g.id_bound(), 0);
  std::vector<VertexId> touched;
  std::deque<VertexId> queue;

  for (VertexId root : g.vertices()) {
    if (!core[root])
      continue;
    for (VertexId v : touched)
      dist[v] = kNone;
    touched.clear();
    queue.clear();

    dist[root] = 0;
    parent[root] = root;
    touched.push_back(root);
    queue.push_back(root);
    // Any cycle found from here has length >= 2*dist(u)+1.
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      if (best != kNone && 2 * dist[u] + 1 >= best)
        break;
      for (VertexId w : g.neighbors(u)) {
        if (!core[w])
          continue;
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (w != parent[u] && dist[w] >= dist[u]) {
          std::size_t closed = dist[u] + dist[w] + 1;
          if (closed >= best)
            continue;
          // Walk both tree paths up to their lowest common ancestor.
          std::vector<VertexId> left{u};
          std::vector<VertexId> right{w};
          VertexId a = u;
          VertexId b = w;
          while (dist[b] > dist[a]) {
            b = parent[b];
            right.push_back(b);
          }
          while (a != b) {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            right.push_back(b);
          }
          // ancestor -> ... -> u, then w -> ... up to (excluding) ancestor
          right.pop_back();
          std::vector<VertexId> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          if (cycle.size() < best) {
            best = cycle.size();
            best_cycle = std::move(cycle);
          }
        }
      }
    }
  }
  return ShortestCycle{best, std::move(best_cycle)};
}

bool is_forest(const Graph& g) {
  return g.size() + connected_components(g) == g.order();
}

std::size_t connected_components(const Graph& g) {
  std::vector<std::uint8_t> seen(g.id_bound(), 0);
  std::size_t count = 0;
  std::vector<VertexId> stack;
  for (VertexId s : g.vertices()) {
    if (seen[s])
      continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (VertexId v : g.vertices())
    best = std::max(best, g.degree(v));
  return best;
}

std::size_t independence_number(const Graph& g,
                                std::span<const VertexId> subset) {
  std::vector<std::size_t> local(g.id_bound(), kNone);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (!g.has_vertex(subset[i]))
      throw GraphError("independence_number: unknown vertex " +
                       std::to_string(subset[i]));
    local[subset[i]] = i;
  }
  std::vector<std::vector<std::size_t>> adj(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (VertexId w : g.neighbors(subset[i]))
      if (local[w] != kNone)
        adj[i].push_back(local[w]);
  std::vector<std::uint8_t> alive(subset.size(), 1);
  return mis_size(adj, alive);
}

std::size_t lambda_index(const Graph& g) {
  if (g.empty())
    return 0;
  std::size_t best = 0;
  for (VertexId v : g.vertices()) {
    auto nb = g.neighbors(v);
    if (nb.size() <= best)
      continue;
    best = std::max(best, independence_number(g, nb));
  }
  return best + 1;
}

LayeredDecomposition layered_decomposition(const Graph& g, std::size_t ell) {
  if (ell < 1)
    throw GraphError("layered_decomposition: ell must be at least 1");
  auto shortest = girth_and_shortest_cycle(g);
  if (!shortest)
    throw GraphError("layered_decomposition: graph is a forest");

  LayeredDecomposition dec;
  dec.ell = ell;
  dec.cycle = shortest->cycle;
  dec.layers.resize(ell + 1);

  auto dist = bfs(g, dec.cycle, kNone);
  for (VertexId v : g.vertices()) {
    std::size_t d = dist[v];
    if (d != kNone && d <= ell)
      dec.layers[d].push_back(v);
    if (d == kNone || d >= ell)
      dec.remainder.push_back(v);
  }
  return dec;
}

bool is_well_formed(const Graph& g) {
  std::size_t order = 0;
  std::size_t twice_size = 0;
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!g.has_vertex(v))
      continue;
    ++order;
    auto nb = g.neighbors(v);
    twice_size += nb.size();
    if (!std::is_sorted(nb.begin(), nb.end()) ||
        std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      return false;
    for (VertexId w : nb) {
      if (w == v || !g.has_vertex(w))
        return false;
      auto back = g.neighbors(w);
      if (!std::binary_search(back.begin(), back.end(), v))
        return false;
    }
  }
  return order == g.order() && twice_size == 2 * g.size();
}

}  // namespace scattered
