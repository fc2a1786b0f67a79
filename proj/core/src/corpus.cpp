#include "hopdom/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "hopdom/embedding.hpp"
#include "hopdom/reductions.hpp"

namespace hopdom {

namespace {

using Colors = std::vector<int>;

Colors refine(const Graph& g, Colors c) {
  const int n = g.n();
  int classes = static_cast<int>(std::set<int>(c.begin(), c.end()).size());
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = c[v];
      for (Vertex u : g.neighbors(v)) sig[v].second.push_back(c[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      c[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int now = static_cast<int>(sorted.size());
    if (now == classes) return c;
    classes = now;
  }
}

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& order) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) bits = (bits << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
  return bits;
}

// Individualization-refinement: branch on every vertex of the first
// non-singleton cell and keep the largest adjacency code over all leaves.
void canon_search(const Graph& g, Colors c, std::uint64_t& best, std::vector<Vertex>& best_order, bool& have) {
  c = refine(g, std::move(c));
  const int n = g.n();
  std::vector<int> count(n, 0);
  for (int x : c) ++count[x];
  int target = -1;
  for (int col = 0; col < n; ++col)
    if (count[col] > 1) {
      target = col;
      break;
    }
  if (target < 0) {
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[c[v]] = v;
    const std::uint64_t code = code_of(g, order);
    if (!have || code > best) best = code, best_order = order, have = true;
    return;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (c[v] != target) continue;
    Colors next(n);
    for (Vertex x = 0; x < n; ++x) next[x] = 2 * c[x] + (c[x] == target && x != v ? 1 : 0);
    canon_search(g, std::move(next), best, best_order, have);
  }
}

std::pair<std::uint64_t, Graph> canon(const Graph& g) {
  if (g.n() > 11) throw InputError("canonical form supports at most 11 vertices");
  std::uint64_t best = 0;
  std::vector<Vertex> order;
  bool have = false;
  Colors c(g.n());
  for (Vertex v = 0; v < g.n(); ++v) c[v] = g.degree(v);
  canon_search(g, c, best, order, have);
  std::vector<Vertex> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v])});
  return {best, graph_from_edges(g.n(), edges)};
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

long long to_int(const std::string& s, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0)
    throw InputError(std::string("bad ") + what + " '" + s + "' in corpus spec");
  return v;
}

Graph random_regular(int n, int d, std::mt19937_64& rng) {
  std::vector<Edge> edges = build_regular_graph(n, d).edges();
  std::set<Edge> present(edges.begin(), edges.end());
  const std::size_t m = edges.size();
  if (m < 2) return graph_from_edges(n, edges);
  auto norm = [](Vertex a, Vertex b) { return Edge{std::min(a, b), std::max(a, b)}; };
  for (std::size_t step = 0; step < 10 * m; ++step) {
    std::size_t i = rng() % m, j = rng() % m;
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, dd] = edges[j];
    if (rng() & 1) std::swap(c, dd);
    if (a == c || a == dd || b == c || b == dd) continue;
    Edge x = norm(a, c), y = norm(b, dd);
    if (present.count(x) || present.count(y)) continue;
    present.erase(edges[i]);
    present.erase(edges[j]);
    present.insert(x);
    present.insert(y);
    edges[i] = x;
    edges[j] = y;
  }
  std::sort(edges.begin(), edges.end());
  return graph_from_edges(n, edges);
}

bool keep(const CorpusSpec& spec, const Graph& g) {
  if (spec.connected_only && !is_connected(g)) return false;
  if (spec.regular_degree && !is_regular(g, *spec.regular_degree)) return false;
  if (spec.planar_max_degree_4) {
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.degree(v) > 4) return false;
    if (!is_planar(g)) return false;
  }
  return true;
}

}  // namespace

Graph canonical_form(const Graph& g) { return canon(g).second; }

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw InputError("exhaustive generation supports 1 <= n <= 8");
  static std::mutex mu;
  static std::vector<std::vector<Graph>> levels;
  std::lock_guard lock(mu);
  if (levels.empty()) levels.push_back({graph_from_edges(1, {})});
  while (static_cast<int>(levels.size()) < n) {
    const int k = static_cast<int>(levels.size());  // graphs on k vertices -> k + 1
    std::map<std::pair<std::size_t, std::uint64_t>, Graph> found;
    for (const Graph& g : levels.back()) {
      const std::vector<Edge> base = g.edges();
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<Edge> edges = base;
        for (Vertex v = 0; v < k; ++v)
          if (mask >> v & 1) edges.push_back({v, k});
        auto [code, cg] = canon(graph_from_edges(k + 1, edges));
        found.emplace(std::pair(cg.m(), code), std::move(cg));
      }
    }
    std::vector<Graph> next;
    for (auto& [key, g] : found) next.push_back(std::move(g));
    levels.push_back(std::move(next));
  }
  return levels[n - 1];
}

std::optional<Graph> named_graph(std::string_view name) {
  const std::string s(name);
  std::vector<Edge> e;
  if (s == "K13" || s == "claw") return graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  if (s == "K33" || s == "K_{3,3}") {
    for (Vertex a = 0; a < 3; ++a)
      for (Vertex b = 3; b < 6; ++b) e.push_back({a, b});
    return graph_from_edges(6, e);
  }
  if (s == "Petersen") {
    for (Vertex i = 0; i < 5; ++i) {
      e.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
      e.push_back({i, i + 5});
      e.push_back({std::min(5 + i, 5 + (i + 2) % 5), std::max(5 + i, 5 + (i + 2) % 5)});
    }
    std::sort(e.begin(), e.end());
    return graph_from_edges(10, e);
  }
  if (s == "Q3") {
    for (Vertex a = 0; a < 8; ++a)
      for (int bit = 0; bit < 3; ++bit)
        if (!(a >> bit & 1)) e.push_back({a, a | (1 << bit)});
    std::sort(e.begin(), e.end());
    return graph_from_edges(8, e);
  }
  if (s == "paw") return graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  if (s == "diamond") return graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  if (s.size() < 2 || (s[0] != 'K' && s[0] != 'P' && s[0] != 'C')) return std::nullopt;
  int n = 0;
  auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || n < 1 || n > 64) return std::nullopt;
  if (s[0] == 'K') {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) e.push_back({a, b});
  } else if (s[0] == 'P') {
    for (Vertex a = 0; a + 1 < n; ++a) e.push_back({a, a + 1});
  } else {
    if (n < 3) return std::nullopt;
    for (Vertex a = 0; a + 1 < n; ++a) e.push_back({a, a + 1});
    e.push_back({0, n - 1});
    std::sort(e.begin(), e.end());
  }
  return graph_from_edges(n, e);
}

CorpusSpec parse_corpus_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("corpus spec needs the form mode:args");
  const std::string mode(text.substr(0, colon));
  const std::string_view rest = text.substr(colon + 1);
  CorpusSpec spec;
  if (mode == "exhaustive") {
    spec.mode = CorpusMode::Exhaustive;
    spec.n_max = static_cast<int>(to_int(std::string(rest), "n_max"));
    if (spec.n_max < 1 || spec.n_max > 8) throw InputError("exhaustive corpus needs 1 <= n_max <= 8");
  } else if (mode == "named") {
    spec.mode = CorpusMode::Named;
    spec.names = split(rest, ',');
    for (const auto& n : spec.names)
      if (!named_graph(n)) throw InputError("unknown graph name '" + n + "'");
  } else if (mode == "random") {
    auto parts = split(rest, ':');
    if (parts.size() != 4) throw InputError("random corpus needs random:n:d:count:seed");
    spec.mode = CorpusMode::RandomRegular;
    spec.n = static_cast<int>(to_int(parts[0], "n"));
    spec.d = static_cast<int>(to_int(parts[1], "d"));
    spec.count = static_cast<int>(to_int(parts[2], "count"));
    spec.seed = static_cast<std::uint64_t>(to_int(parts[3], "seed"));
  } else {
    throw InputError("unknown corpus mode '" + mode + "'");
  }
  return spec;
}

std::vector<NamedGraph> enumerate_corpus(const CorpusSpec& spec) {
  std::vector<NamedGraph> out;
  switch (spec.mode) {
    case CorpusMode::Exhaustive:
      if (spec.n_max < 1 || spec.n_max > 8) throw InputError("exhaustive corpus needs 1 <= n_max <= 8");
      for (int n = 1; n <= spec.n_max; ++n) {
        auto gs = connected_graphs(n);
        for (std::size_t i = 0; i < gs.size(); ++i)
          out.push_back({"n" + std::to_string(n) + "." + std::to_string(i), std::move(gs[i])});
      }
      break;
    case CorpusMode::Named:
      for (const auto& name : spec.names) {
        auto g = named_graph(name);
        if (!g) throw InputError("unknown graph name '" + name + "'");
        out.push_back({name, std::move(*g)});
      }
      break;
    case CorpusMode::RandomRegular: {
      if (!spec.seed) throw InputError("random regular corpus needs a seed");
      std::mt19937_64 rng(*spec.seed);
      for (int i = 0; i < spec.count; ++i)
        out.push_back({"rr" + std::to_string(spec.n) + "." + std::to_string(spec.d) + ".s" +
                           std::to_string(*spec.seed) + "#" + std::to_string(i),
                       random_regular(spec.n, spec.d, rng)});
      break;
    }
  }
  std::erase_if(out, [&](const NamedGraph& ng) { return !keep(spec, ng.graph); });
  return out;
}

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  if (n > 62) throw InputError("graph6 output supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) out += static_cast<char>(63 + acc), acc = 0, nbits = 0;
    }
  if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw InputError("empty graph6 string");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw InputError("graph6 character out of range");
  const int n = text[0] - 63;
  if (n > 62) throw InputError("graph6 input supports at most 62 vertices");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (text.size() != 1 + (bits + 5) / 6) throw InputError("graph6 string has the wrong length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((text[1 + k / 6] - 63) >> (5 - k % 6) & 1) edges.push_back({i, j});
  std::sort(edges.begin(), edges.end());
  return graph_from_edges(n, edges);
}

}  // namespace hopdom
