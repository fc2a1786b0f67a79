#include "hopdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

namespace hopdom {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

VertexSet::VertexSet(std::vector<Vertex> sorted_ids) : ids_(std::move(sorted_ids)) {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] < 0) throw InputError("vertex set contains a negative id");
    if (i > 0 && ids_[i - 1] >= ids_[i])
      throw InputError("vertex set ids must be strictly increasing");
  }
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::within(int n) const { return ids_.empty() || ids_.back() < n; }

std::string VertexSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids_[i]);
  }
  return out;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v < 0 || v >= n()) throw InputError("vertex id " + std::to_string(v) + " out of range");
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

const std::string& Graph::label(Vertex v) const {
  static const std::string empty;
  if (v < 0 || v >= n()) throw InputError("vertex id " + std::to_string(v) + " out of range");
  return labels_.empty() ? empty : labels_[v];
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(n);
  labels_.resize(n);
}

Vertex GraphBuilder::add_vertex(std::string label) {
  adj_.emplace_back();
  if (!label.empty()) labelled_ = true;
  labels_.push_back(std::move(label));
  return n() - 1;
}

void GraphBuilder::set_label(Vertex v, std::string label) {
  check(v);
  labelled_ = true;
  labels_[v] = std::move(label);
}

void GraphBuilder::check(Vertex v) const {
  if (v < 0 || v >= n()) throw InputError("vertex id " + std::to_string(v) + " out of range");
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  const auto& a = adj_[u].size() < adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() < adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw InputError("parallel edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void GraphBuilder::ensure_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) add_edge(u, v);
}

Graph GraphBuilder::build() const {
  Graph g;
  g.adj_ = adj_;
  std::size_t deg_sum = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    deg_sum += nb.size();
  }
  g.m_ = deg_sum / 2;
  if (labelled_) g.labels_ = labels_;
  return g;
}

Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

std::vector<int> bfs_distances(const Graph& g, Vertex src, int cutoff) {
  std::vector<int> dist(g.n(), -1);
  if (src < 0 || src >= g.n()) throw InputError("vertex id " + std::to_string(src) + " out of range");
  std::deque<Vertex> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (cutoff >= 0 && dist[x] >= cutoff) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

VertexSet exact_distance_neighborhood(const Graph& g, Vertex v, int r) {
  if (r < 1) throw InputError("radius must be positive");
  auto dist = bfs_distances(g, v, r);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.n(); ++u)
    if (dist[u] == r) out.push_back(u);
  return VertexSet(std::move(out));
}

std::vector<VertexSet> distance_two_sets(const Graph& g) {
  std::vector<VertexSet> out;
  out.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) out.push_back(exact_distance_neighborhood(g, v, 2));
  return out;
}

bool is_regular(const Graph& g, int d) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

bool is_claw_free(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
      }
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<int> index(g.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i]))
      if (index[w] > static_cast<int>(i)) b.add_edge(static_cast<int>(i), index[w]);
  return b.build();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_nonneg(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  GraphBuilder builder;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks.size() != 2) throw ParseError(line_no, "expected two integers");
    long long a = parse_nonneg(toks[0], line_no);
    long long b = parse_nonneg(toks[1], line_no);
    if (!have_header) {
      if (a > 10'000'000) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      builder = GraphBuilder(static_cast<int>(n));
      continue;
    }
    if (a >= n || b >= n) throw ParseError(line_no, "vertex id out of range");
    if (a >= b) throw ParseError(line_no, "edge must satisfy u < v");
    if (static_cast<long long>(edges.size()) >= m) throw ParseError(line_no, "more edges than declared");
    Edge e{static_cast<Vertex>(a), static_cast<Vertex>(b)};
    if (builder.has_edge(e.u, e.v)) throw ParseError(line_no, "duplicate edge");
    builder.add_edge(e.u, e.v);
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(line_no, "missing header line 'n m'");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges but found " +
                                  std::to_string(edges.size()));
  return builder.build();
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace hopdom
