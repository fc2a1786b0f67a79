#pragma once

#include <array>
#include <string>
#include <vector>

#include "hopdom/embedding.hpp"
#include "hopdom/graph.hpp"
#include "hopdom/rational.hpp"
#include "hopdom/solvers.hpp"

namespace hopdom {

// A placed disk breaks the separation band; always a construction bug.
class PlacementError : public Error {
 public:
  using Error::Error;
};

struct Disk {
  Rational cx, cy;  // radius is 1/2
  std::string role;
};

// Disk ids of one edge gadget; index p holds C^p, -1 where unused.
struct RunDisks {
  std::array<Vertex, 17> c{};
};

// Disk ids of the grid gadget at an interior lattice point; index 1..4.
struct GridDisks {
  std::array<Vertex, 5> c{};
};

struct EdgeDisks {
  Edge edge;                    // source edge, path runs from u to v
  std::vector<RunDisks> runs;   // k runs
  std::vector<GridDisks> grids;  // k - 1 interior points, in path order
};

struct DiskLayout {
  Problem problem = Problem::HopDom;
  GridEmbedding source;
  std::vector<Disk> disks;  // vertex disks 0..n-1, then per edge: run, grid, run, ...
  std::vector<EdgeDisks> edges;
  int offset = 0;
};

// problem must be HopDom or TwoStepDom; e must pass validate_embedding.
DiskLayout reduce_unit_disk(Problem problem, const GridEmbedding& e);

// Edge iff squared center distance <= 1, decided exactly.
Graph intersection_graph(const DiskLayout& l);

// Intended adjacency, generated from the gadget templates without geometry.
Graph template_graph(const DiskLayout& l);

// True iff the intersection graph equals the template graph under the
// identity map on disk ids.
bool template_fidelity(const DiskLayout& l, std::vector<std::string>* diagnostics = nullptr);

struct SeparationStats {
  Rational max_adjacent_sq;     // largest squared distance among intersecting pairs
  Rational min_nonadjacent_sq;  // smallest squared distance among the others
  bool holds() const;           // <= (7/8)^2 and >= (9/8)^2
};
SeparationStats separation_stats(const DiskLayout& l);

// Offset as printed for each construction: HD sum(3k + k - 1), 2SD sum(7(k + 1) + k).
int printed_offset(Problem problem, const GridEmbedding& e);

VertexSet unit_disk_forward_certificate(const DiskLayout& l, const VertexSet& vc);
VertexSet unit_disk_extract_vertex_cover(const DiskLayout& l, const VertexSet& sol);

// Header "id,role,cx_num,cx_den,cy_num,cy_den".
std::string layout_csv(const DiskLayout& l);
std::string layout_svg(const DiskLayout& l);
std::string layout_dot(const DiskLayout& l);

}  // namespace hopdom
