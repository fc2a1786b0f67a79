#pragma once

#include <vector>

#include "hopdom/graph.hpp"
#include "hopdom/solvers.hpp"
#include "oracle.hpp"

namespace testing {

inline oracle::Instance as_oracle(const hopdom::Graph& g) {
  oracle::Edges e;
  for (const auto& x : g.edges()) e.emplace_back(x.u, x.v);
  return oracle::Instance(g.n(), e);
}

inline oracle::Kind kind_of(hopdom::Problem p) {
  switch (p) {
    case hopdom::Problem::VertexCover: return oracle::Kind::VC;
    case hopdom::Problem::HopDom: return oracle::Kind::HD;
    case hopdom::Problem::TwoStepDom: return oracle::Kind::TSD;
  }
  return oracle::Kind::VC;
}

inline std::vector<int> ids(const hopdom::VertexSet& s) { return {s.begin(), s.end()}; }

inline hopdom::Graph K(int n) {
  std::vector<hopdom::Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return hopdom::graph_from_edges(n, e);
}

inline hopdom::Graph P(int n) {
  std::vector<hopdom::Edge> e;
  for (int a = 0; a + 1 < n; ++a) e.push_back({a, a + 1});
  return hopdom::graph_from_edges(n, e);
}

inline hopdom::Graph C(int n) {
  std::vector<hopdom::Edge> e{{0, n - 1}};
  for (int a = 0; a + 1 < n; ++a) e.push_back({a, a + 1});
  return hopdom::graph_from_edges(n, e);
}

}  // namespace testing
