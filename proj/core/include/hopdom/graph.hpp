#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopdom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments to a library call (out-of-range ids, unsupported parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

// Sorted list of distinct vertex ids. Comparison is lexicographic on the
// sorted sequence, which is the order used for deterministic witnesses.
class VertexSet {
 public:
  VertexSet() = default;
  // Throws InputError unless ids are strictly increasing and non-negative.
  explicit VertexSet(std::vector<Vertex> sorted_ids);
  static VertexSet from_unsorted(std::vector<Vertex> ids);

  const std::vector<Vertex>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;
  bool within(int n) const;
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  std::string to_string() const;  // space separated ids

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

class GraphBuilder;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t m() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  // Empty string when the graph carries no labels.
  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t m_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0);

  int n() const { return static_cast<int>(adj_.size()); }
  Vertex add_vertex(std::string label = {});
  void set_label(Vertex v, std::string label);

  // Rejects self-loops and parallel edges.
  void add_edge(Vertex u, Vertex v);
  // Idempotent variant for constructions that close neighborhoods into cliques.
  void ensure_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  Graph build() const;

 private:
  void check(Vertex v) const;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  bool labelled_ = false;
};

Graph graph_from_edges(int n, const std::vector<Edge>& edges);

// BFS distances from src; -1 marks unreachable vertices. Search stops
// expanding past `cutoff` when cutoff >= 0.
std::vector<int> bfs_distances(const Graph& g, Vertex src, int cutoff = -1);

// { u : d(v,u) = r } for r >= 1.
VertexSet exact_distance_neighborhood(const Graph& g, Vertex v, int r);
std::vector<VertexSet> distance_two_sets(const Graph& g);

bool is_regular(const Graph& g, int d);
bool is_claw_free(const Graph& g);
bool is_connected(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hopdom
