#include "scattered/io.hpp"

#include <charconv>
#include <sstream>

namespace scattered {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i)
      words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::optional<std::size_t> to_index(std::string_view word) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size())
    return std::nullopt;
  return value;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto cut = text.find('\n');
    f(number, text.substr(0, cut));
    if (cut == std::string_view::npos)
      break;
    text.remove_prefix(cut + 1);
  }
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  Graph g;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    auto words = split_words(raw);
    if (words.empty() || words[0] == "c")
      return;
    if (words[0] == "p") {
      if (n)
        throw ParseError(line, "second problem line");
      if (words.size() != 4 || words[1] != "edge")
        throw ParseError(line, "expected 'p edge <n> <m>'");
      auto count = to_index(words[2]);
      if (!count || !to_index(words[3]))
        throw ParseError(line, "malformed vertex or edge count");
      n = *count;
      g = Graph(*n);
      return;
    }
    if (words[0] == "e") {
      if (words.size() != 3)
        throw ParseError(line, "expected 'e <u> <v>'");
      auto u = to_index(words[1]);
      auto v = to_index(words[2]);
      if (!u || !v)
        throw ParseError(line, "malformed vertex index");
      if (*u == *v)
        throw ParseError(line, "self-loop at vertex " + std::to_string(*u));
      if (!n)
        throw ParseError(line, "edge before the problem line");
      if (*u < 1 || *v < 1 || *u > *n || *v > *n)
        throw ParseError(line, "vertex index out of range 1.." +
                                   std::to_string(*n));
      g.add_edge(static_cast<VertexId>(*u - 1), static_cast<VertexId>(*v - 1));
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(words[0]) + "'");
  });
  if (!n)
    throw ParseError(0, "missing 'p edge' problem line");
  return g;
}

Graph densify(const Graph& g) {
  std::vector<VertexId> rank(g.id_bound(), 0);
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    rank[vs[i]] = static_cast<VertexId>(i);
  Graph out(vs.size());
  for (auto [u, v] : g.edges())
    out.add_edge(rank[u], rank[v]);
  return out;
}

std::string write_dimacs(const Graph& g) {
  Graph dense = densify(g);
  std::ostringstream os;
  os << "p edge " << dense.order() << ' ' << dense.size() << '\n';
  for (auto [u, v] : dense.edges())
    os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

CyclePacking parse_certificate(std::string_view text, std::size_t ell) {
  CyclePacking p;
  p.ell = ell;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    auto words = split_words(raw);
    if (words.empty() || words[0] == "c")
      return;
    Cycle cycle;
    for (auto w : words) {
      auto idx = to_index(w);
      if (!idx || *idx < 1)
        throw ParseError(line, "malformed vertex index '" + std::string(w) +
                                   "'");
      cycle.push_back(static_cast<VertexId>(*idx - 1));
    }
    p.cycles.push_back(std::move(cycle));
  });
  return p;
}

std::string write_certificate(const CyclePacking& p) {
  std::ostringstream os;
  for (const auto& c : p.cycles) {
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i] + 1;
    os << '\n';
  }
  return os.str();
}

nlohmann::json trace_to_json(const ReductionTrace& trace) {
  auto out = nlohmann::json::array();
  for (const auto& event : trace.events) {
    if (const auto* c = std::get_if<ContractEvent>(&event)) {
      out.push_back({{"op", "contract"},
                     {"u", c->u},
                     {"v", c->v},
                     {"survivor", c->survivor}});
    } else {
      const auto& d = std::get<DeleteEvent>(event);
      out.push_back({{"op", "delete"},
                     {"v", d.v},
                     {"reason", d.reason == DeleteReason::degree0 ? "degree0"
                                                                  : "degree1"}});
    }
  }
  return out;
}

GraphStats compute_stats(const Graph& g) {
  GraphStats s;
  s.n = g.order();
  s.m = g.size();
  s.delta = max_degree(g);
  s.lambda = lambda_index(g);
  if (auto c = girth_and_shortest_cycle(g))
    s.girth = c->length;
  return s;
}

nlohmann::json to_json(const GraphStats& s) {
  nlohmann::json j = {{"n", s.n},
                      {"m", s.m},
                      {"delta", s.delta},
                      {"lambda", s.lambda},
                      {"girth", nullptr}};
  if (s.girth)
    j["girth"] = *s.girth;
  return j;
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j = {{"command", r.command},
                      {"input_stats", to_json(r.input_stats)},
                      {"output_stats", nullptr},
                      {"outcome", nullptr},
                      {"threshold", nullptr},
                      {"trace_length", r.trace_length},
                      {"elapsed_ms", r.elapsed_ms}};
  if (r.output_stats)
    j["output_stats"] = to_json(*r.output_stats);
  if (!r.outcome.empty())
    j["outcome"] = r.outcome;
  if (r.threshold)
    j["threshold"] = *r.threshold;
  return j;
}

std::string to_text(const RunReport& r) {
  std::ostringstream os;
  auto stats = [&](const char* prefix, const GraphStats& s) {
    os << prefix << "n=" << s.n << '\n'
       << prefix << "m=" << s.m << '\n'
       << prefix << "delta=" << s.delta << '\n'
       << prefix << "lambda=" << s.lambda << '\n'
       << prefix << "girth="
       << (s.girth ? std::to_string(*s.girth) : std::string("none")) << '\n';
  };
  os << "command=" << r.command << '\n';
  stats(r.output_stats ? "input." : "", r.input_stats);
  if (r.output_stats)
    stats("output.", *r.output_stats);
  if (!r.outcome.empty())
    os << "outcome=" << r.outcome << '\n';
  if (r.threshold)
    os << "threshold=" << *r.threshold << '\n';
  os << "trace_length=" << r.trace_length << '\n'
     << "elapsed_ms=" << r.elapsed_ms << '\n';
  return os.str();
}

}  // namespace scattered
