#include <doctest.h>

#include <atomic>

#include "hopdom/corpus.hpp"
#include "hopdom/solvers.hpp"
#include "../helpers.hpp"

using namespace hopdom;
using testing::as_oracle;
using testing::ids;
using testing::kind_of;

namespace {

SolveResult solve_with(const Graph& g, Problem p, Method m) {
  SolveOptions o;
  o.force_method = m;
  return solve_minimum(g, p, o);
}

}  // namespace

TEST_CASE("hop domination checker") {
  const Graph c4 = testing::C(4);  // a=0 b=1 c=2 d=3
  CHECK(is_hop_dominating(c4, VertexSet({0, 1, 2, 3})));
  CHECK(is_hop_dominating(c4, VertexSet({0, 1})));
  CHECK_FALSE(is_hop_dominating(testing::P(4), VertexSet({1})));
  CHECK(as_oracle(c4).valid(oracle::Kind::HD, std::vector<int>{0, 1}));
  CHECK_FALSE(as_oracle(testing::P(4)).valid(oracle::Kind::HD, std::vector<int>{1}));
}

TEST_CASE("2-step domination checker") {
  for (int n = 1; n <= 5; ++n) {
    const Graph k = testing::K(n);
    CHECK_FALSE(is_two_step_dominating(k, VertexSet::from_unsorted({0})));
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    CHECK_FALSE(is_two_step_dominating(k, VertexSet(all)));
  }
  CHECK(is_two_step_dominating(testing::C(4), VertexSet({0, 1, 2, 3})));
  CHECK(is_two_step_dominating(testing::C(5), VertexSet({0, 2, 4})));
  CHECK(as_oracle(testing::C(5)).valid(oracle::Kind::TSD, std::vector<int>{0, 2, 4}));
  CHECK_FALSE(is_two_step_dominating(testing::C(5), VertexSet({0, 1, 2})));
  CHECK_FALSE(as_oracle(testing::C(5)).valid(oracle::Kind::TSD, std::vector<int>{0, 1, 2}));
}

TEST_CASE("vertex cover checker") {
  CHECK(is_vertex_cover(testing::K(2), VertexSet({0})));
  CHECK(is_vertex_cover(testing::C(4), VertexSet({0, 2})));
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = a + 1; b < 4; ++b) CHECK_FALSE(is_vertex_cover(testing::K(4), VertexSet({a, b})));
}

TEST_CASE("solver examples") {
  for (int n = 1; n <= 6; ++n) {
    auto r = solve_minimum(testing::K(n), Problem::HopDom);
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(*r.optimum == n);
    CHECK(r.witness->size() == static_cast<std::size_t>(n));
  }
  CHECK(*solve_minimum(testing::C(4), Problem::HopDom).optimum == 2);
  CHECK(*solve_minimum(testing::C(4), Problem::TwoStepDom).optimum == 4);
  CHECK(*solve_minimum(testing::C(5), Problem::TwoStepDom).optimum == 3);
  CHECK(*solve_minimum(testing::K(4), Problem::VertexCover).optimum == 3);

  // P4 a-b-c-d: {a,b} = {0,1} is the lexicographically smallest optimum
  // (the exhaustive oracle also finds {a,d} = {0,3} optimal).
  const auto p4 = solve_minimum(testing::P(4), Problem::HopDom);
  CHECK(*p4.optimum == 2);
  CHECK(*p4.witness == VertexSet({0, 1}));
  CHECK(as_oracle(testing::P(4)).valid(oracle::Kind::HD, std::vector<int>{0, 3}));
  CHECK(*as_oracle(testing::P(4)).minimum(oracle::Kind::HD) == std::vector<int>{0, 1});
}

TEST_CASE("2-step domination is infeasible exactly when some N(v,2) is empty") {
  const auto r = solve_minimum(testing::K(3), Problem::TwoStepDom);
  CHECK(r.status == SolveStatus::Infeasible);
  CHECK_FALSE(r.feasible());
  CHECK_FALSE(r.optimum.has_value());
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      bool empty = false;
      for (Vertex v = 0; v < n; ++v) empty |= exact_distance_neighborhood(g, v, 2).empty();
      CHECK((solve_minimum(g, Problem::TwoStepDom).status == SolveStatus::Infeasible) == empty);
    }
}

TEST_CASE("both methods match the exhaustive oracle, witness included") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const auto o = as_oracle(g);
      for (Problem p : {Problem::VertexCover, Problem::HopDom, Problem::TwoStepDom}) {
        const auto want = o.minimum(kind_of(p));
        for (Method m : {Method::Brute, Method::BranchAndBound}) {
          const auto r = solve_with(g, p, m);
          CAPTURE(to_graph6(g));
          CAPTURE(to_string(p));
          CAPTURE(to_string(m));
          REQUIRE(r.feasible() == want.has_value());
          if (!want) continue;
          CHECK(r.status == SolveStatus::Optimal);
          CHECK(*r.optimum == static_cast<int>(want->size()));
          CHECK(ids(*r.witness) == *want);
          CHECK(o.valid(kind_of(p), ids(*r.witness)));
        }
      }
    }
}

TEST_CASE("supersets of feasible sets stay feasible") {
  for (const Graph& g : connected_graphs(5)) {
    for (Problem p : {Problem::VertexCover, Problem::HopDom, Problem::TwoStepDom}) {
      const auto r = solve_minimum(g, p);
      if (!r.feasible()) continue;
      for (Vertex v = 0; v < g.n(); ++v) {
        auto more = ids(*r.witness);
        more.push_back(v);
        CHECK(is_feasible(g, p, VertexSet::from_unsorted(more)));
      }
    }
  }
}

TEST_CASE("budget mode returns a small enough witness") {
  const Graph g = *named_graph("Petersen");
  SolveOptions o;
  o.budget = 9;
  const auto r = solve_minimum(g, Problem::HopDom, o);
  CHECK(r.status == SolveStatus::BudgetMet);
  CHECK(r.witness->size() <= 9u);
  CHECK(*r.optimum == static_cast<int>(r.witness->size()));
  CHECK(is_hop_dominating(g, *r.witness));

  o.budget = 0;  // below the optimum: the search runs to completion
  const auto exact = solve_minimum(g, Problem::HopDom, o);
  CHECK(exact.status == SolveStatus::Optimal);
  CHECK(*exact.optimum == *solve_minimum(g, Problem::HopDom).optimum);
}

TEST_CASE("deadline and cancellation stop the search") {
  const Graph g = *named_graph("Q3");
  SolveOptions o;
  o.deadline = Clock::now() - std::chrono::seconds(1);
  o.force_method = Method::BranchAndBound;
  CHECK(solve_minimum(g, Problem::HopDom, o).status == SolveStatus::Timeout);

  std::atomic<bool> stop{true};
  SolveOptions c;
  c.cancel = &stop;
  c.force_method = Method::Brute;
  CHECK(solve_minimum(g, Problem::VertexCover, c).status == SolveStatus::Timeout);
}

TEST_CASE("repeated runs give identical witnesses") {
  const Graph g = *named_graph("Petersen");
  for (Problem p : {Problem::VertexCover, Problem::HopDom, Problem::TwoStepDom}) {
    const auto a = solve_minimum(g, p), b = solve_minimum(g, p);
    CHECK(*a.witness == *b.witness);
    CHECK(*solve_with(g, p, Method::Brute).witness == *solve_with(g, p, Method::BranchAndBound).witness);
  }
}

TEST_CASE("problem names") {
  CHECK(parse_problem("vc") == Problem::VertexCover);
  CHECK(parse_problem("hd") == Problem::HopDom);
  CHECK(parse_problem("2sd") == Problem::TwoStepDom);
  CHECK_FALSE(parse_problem("ds").has_value());
}
