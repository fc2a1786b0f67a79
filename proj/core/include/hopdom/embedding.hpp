#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopdom/graph.hpp"

namespace hopdom {

class EmbeddingError : public Error {
 public:
  using Error::Error;
};

struct Point {
  long long x = 0;
  long long y = 0;
  auto operator<=>(const Point&) const = default;
};

struct EmbeddedEdge {
  Edge edge;                // u < v
  std::vector<Point> path;  // lattice points from coords[u] to coords[v], inclusive
  int length() const { return static_cast<int>(path.size()) - 1; }
};

// Orthogonal drawing on the integer lattice: vertices at lattice points,
// edges as chains of axis-parallel unit steps.
struct GridEmbedding {
  std::vector<Point> coords;       // per vertex
  std::vector<EmbeddedEdge> edges;  // ascending by (u, v)
  int scale = 1;
};

// Checks distinct coordinates, unit axis-parallel steps, endpoints, internal
// disjointness (from other paths and from vertex points) and k_uv >= 2.
// Appends a human-readable reason per violation when diagnostics is given.
bool validate_embedding(const GridEmbedding& e, std::vector<std::string>* diagnostics = nullptr);

// Stretches every unit segment into `factor` unit segments.
GridEmbedding scale_embedding(const GridEmbedding& e, int factor);

// Graph whose vertices and edges are those of the embedding.
Graph embedded_graph(const GridEmbedding& e);

bool is_planar(const Graph& g);

// Planar graphs of maximum degree <= 4 only; scale >= 2.
GridEmbedding embed_orthogonal(const Graph& g, int scale = 4);

GridEmbedding parse_embedding(std::string_view text);
std::string serialize_embedding(const GridEmbedding& e);

}  // namespace hopdom
