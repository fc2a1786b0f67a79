#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hopdom/graph.hpp"

namespace hopdom {

enum class Problem { VertexCover, HopDom, TwoStepDom };

std::string_view to_string(Problem p);
// Accepts the CLI vocabulary: "vc", "hd", "2sd".
std::optional<Problem> parse_problem(std::string_view s);

enum class Method { Brute, BranchAndBound };
std::string_view to_string(Method m);

enum class SolveStatus {
  Optimal,     // optimum is exact
  Infeasible,  // only possible for TwoStepDom
  BudgetMet,   // stopped early with a witness of size <= budget
  Timeout,     // deadline or cancellation hit; witness is the best found, if any
};
std::string_view to_string(SolveStatus s);

using Clock = std::chrono::steady_clock;

struct SolveOptions {
  std::optional<int> budget;
  bool deterministic = true;
  std::optional<Clock::time_point> deadline;
  std::optional<Method> force_method;
  const std::atomic<bool>* cancel = nullptr;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  std::optional<int> optimum;  // size of the witness; exact only when status == Optimal
  std::optional<VertexSet> witness;
  std::uint64_t nodes_explored = 0;
  Method method = Method::Brute;

  bool feasible() const { return witness.has_value(); }
};

bool is_hop_dominating(const Graph& g, const VertexSet& s);
bool is_two_step_dominating(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_feasible(const Graph& g, Problem p, const VertexSet& s);

SolveResult solve_minimum(const Graph& g, Problem p, const SolveOptions& opts = {});

}  // namespace hopdom
