#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopdom/graph.hpp"
#include "hopdom/solvers.hpp"

namespace hopdom {

class RealizationError : public Error {
 public:
  using Error::Error;
};
class PreconditionError : public Error {
 public:
  using Error::Error;
};
// Raised when a valid solution cannot be normalized into a small enough
// vertex cover; this is a counterexample to the reduction on that instance.
class ExtractionError : public Error {
 public:
  using Error::Error;
};
class DispatchError : public Error {
 public:
  using Error::Error;
};

enum class Family { ThreeRegular, DRegular, ClawFree, UnitDisk };

struct ReductionKind {
  Problem problem = Problem::HopDom;
  Family family = Family::ThreeRegular;
  int d = 0;  // only meaningful for DRegular

  // "hd-3reg", "2sd-dreg" (with d appended as ":d" when given), "hd-ud", ...
  std::string name() const;
  bool operator==(const ReductionKind&) const = default;
};

// Accepts "hd-3reg", "2sd-claw", "hd-ud", "hd-dreg" (uses default_d) and
// "hd-dreg:5".
std::optional<ReductionKind> parse_kind(std::string_view text, int default_d = 4);

// Additive constant per source edge for the non-geometric families.
int offset_per_edge(const ReductionKind& kind);

struct Gadget {
  Edge edge;                                           // source edge (i < j)
  std::vector<std::pair<std::string, Vertex>> members;  // short name -> id, construction order

  Vertex at(std::string_view name) const;
};

struct Reduction {
  ReductionKind kind;
  Graph source;
  Graph output;
  int offset = 0;
  std::vector<std::string> roles;  // per output vertex
  std::vector<Gadget> gadgets;     // one per source edge, ascending edge order
};

Graph build_regular_graph(int n, int d);

Reduction reduce(const ReductionKind& kind, const Graph& g1);

VertexSet forward_certificate(const Reduction& r, const VertexSet& vc);
VertexSet extract_vertex_cover(const Reduction& r, const VertexSet& sol);

// Vertices outside {u_i} whose degree differs from d.
std::vector<Vertex> gadget_degree_violations(const Reduction& r, int d);

std::string serialize_reduction(const Reduction& r);

struct ReductionReport {
  std::string kind;
  Graph output;
  int offset = 0;
  std::vector<std::string> roles;
};
ReductionReport parse_reduction_report(std::string_view text);

}  // namespace hopdom
