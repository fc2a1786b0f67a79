#include "hopdom/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "set_cover.hpp"

namespace hopdom {

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::VertexCover: return "vc";
    case Problem::HopDom: return "hd";
    case Problem::TwoStepDom: return "2sd";
  }
  return "?";
}

std::optional<Problem> parse_problem(std::string_view s) {
  if (s == "vc") return Problem::VertexCover;
  if (s == "hd") return Problem::HopDom;
  if (s == "2sd") return Problem::TwoStepDom;
  return std::nullopt;
}

std::string_view to_string(Method m) { return m == Method::Brute ? "BRUTE" : "BNB"; }

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "OPTIMAL";
    case SolveStatus::Infeasible: return "INFEASIBLE";
    case SolveStatus::BudgetMet: return "BUDGET";
    case SolveStatus::Timeout: return "TIMEOUT";
  }
  return "?";
}

namespace {

void require_subset(const Graph& g, const VertexSet& s) {
  if (!s.within(g.n())) throw InputError("vertex set is not a subset of V(G)");
}

// Marks, for every vertex, whether some member of s lies at distance exactly 2.
std::vector<char> reached_at_two(const Graph& g, const VertexSet& s) {
  std::vector<char> hit(g.n(), 0);
  for (Vertex u : s) {
    auto dist = bfs_distances(g, u, 2);
    for (Vertex v = 0; v < g.n(); ++v)
      if (dist[v] == 2) hit[v] = 1;
  }
  return hit;
}

}  // namespace

bool is_hop_dominating(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  auto hit = reached_at_two(g, s);
  for (Vertex v = 0; v < g.n(); ++v)
    if (!s.contains(v) && !hit[v]) return false;
  return true;
}

bool is_two_step_dominating(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  auto hit = reached_at_two(g, s);
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  require_subset(g, s);
  for (const auto& e : g.edges())
    if (!s.contains(e.u) && !s.contains(e.v)) return false;
  return true;
}

bool is_feasible(const Graph& g, Problem p, const VertexSet& s) {
  switch (p) {
    case Problem::VertexCover: return is_vertex_cover(g, s);
    case Problem::HopDom: return is_hop_dominating(g, s);
    case Problem::TwoStepDom: return is_two_step_dominating(g, s);
  }
  return false;
}

namespace {

// Sets are vertices. VC elements are edges; HD/2SD elements are vertices,
// covered by members at distance 2 (HD also lets a member cover itself).
detail::CoverEngine make_engine(const Graph& g, Problem p) {
  std::vector<std::vector<int>> sets(g.n());
  if (p == Problem::VertexCover) {
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      sets[edges[i].u].push_back(static_cast<int>(i));
      sets[edges[i].v].push_back(static_cast<int>(i));
    }
    return detail::CoverEngine(static_cast<int>(edges.size()), sets);
  }
  auto n2 = distance_two_sets(g);
  for (Vertex u = 0; u < g.n(); ++u) {
    sets[u].assign(n2[u].begin(), n2[u].end());
    if (p == Problem::HopDom) sets[u].push_back(u);
  }
  return detail::CoverEngine(g.n(), sets);
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

VertexSet to_set(const std::vector<int>& ids) { return VertexSet::from_unsorted(ids); }

}  // namespace

SolveResult solve_minimum(const Graph& g, Problem p, const SolveOptions& opts) {
  SolveResult res;
  auto engine = make_engine(g, p);
  if (!engine.coverable()) {
    res.status = SolveStatus::Infeasible;
    return res;
  }
  auto expired = [&opts]() {
    if (opts.cancel && opts.cancel->load(std::memory_order_relaxed)) return true;
    return opts.deadline && Clock::now() >= *opts.deadline;
  };
  const detail::CoverEngine::StopFn stop = expired;

  std::vector<int> best = engine.greedy();
  int ub = static_cast<int>(best.size());
  auto finish = [&](SolveStatus st, std::vector<int> sets) {
    res.status = st;
    res.witness = to_set(sets);
    res.optimum = static_cast<int>(sets.size());
    return res;
  };
  if (opts.budget && ub <= *opts.budget) return finish(SolveStatus::BudgetMet, best);
  if (expired()) return finish(SolveStatus::Timeout, best);

  Method method;
  if (opts.force_method) {
    method = *opts.force_method;
  } else {
    method = log_binomial(engine.n_sets(), ub) <= 24 * std::log(2.0) ? Method::Brute
                                                                       : Method::BranchAndBound;
  }
  res.method = method;

  if (method == Method::Brute) {
    int lb = engine.root_lower_bound();
    auto out = engine.brute(lb, ub, stop);
    res.nodes_explored = out.nodes;
    if (out.aborted) return finish(SolveStatus::Timeout, best);
    if (!out.found) throw Error("internal: brute force missed the greedy cover");
    return finish(SolveStatus::Optimal, out.sets);
  }

  detail::CoverEngine::Query q;
  q.limit = ub - 1;
  if (opts.budget) q.stop_at_size = *opts.budget;
  auto out = engine.search(q, stop);
  res.nodes_explored += out.nodes;
  if (out.found) best = out.sets;
  if (out.aborted) return finish(SolveStatus::Timeout, best);
  if (opts.budget && out.found && static_cast<int>(best.size()) <= *opts.budget) {
    // The search may have stopped before proving optimality.
    return finish(SolveStatus::BudgetMet, best);
  }
  if (!opts.deterministic) return finish(SolveStatus::Optimal, best);

  // Lexicographically smallest optimum: fix vertices in id order, keeping a
  // witness consistent with the decisions made so far.
  const int opt = static_cast<int>(best.size());
  std::vector<int> chosen, banned;
  std::vector<char> in_witness(engine.n_sets(), 0);
  for (int s : best) in_witness[s] = 1;
  for (int v = 0; v < engine.n_sets() && static_cast<int>(chosen.size()) < opt; ++v) {
    if (in_witness[v]) {
      chosen.push_back(v);
      continue;
    }
    detail::CoverEngine::Query probe;
    probe.forced = chosen;
    probe.forced.push_back(v);
    probe.forbidden = banned;
    probe.limit = opt;
    probe.stop_at_first = true;
    auto found = engine.search(probe, stop);
    res.nodes_explored += found.nodes;
    if (found.aborted) return finish(SolveStatus::Timeout, best);
    if (found.found) {
      best = found.sets;
      std::fill(in_witness.begin(), in_witness.end(), 0);
      for (int s : best) in_witness[s] = 1;
      chosen.push_back(v);
    } else {
      banned.push_back(v);
    }
  }
  return finish(SolveStatus::Optimal, best);
}

}  // namespace hopdom
