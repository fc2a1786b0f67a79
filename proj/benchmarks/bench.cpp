#include <benchmark/benchmark.h>

#include "hopdom/corpus.hpp"
#include "hopdom/embedding.hpp"
#include "hopdom/reductions.hpp"
#include "hopdom/solvers.hpp"
#include "hopdom/unit_disk.hpp"

using namespace hopdom;

namespace {

Graph random_cubic(int n) {
  CorpusSpec spec;
  spec.mode = CorpusMode::RandomRegular;
  spec.n = n;
  spec.d = 3;
  spec.count = 1;
  spec.seed = 1;
  return enumerate_corpus(spec).front().graph;
}

void BM_DistanceTwoSets(benchmark::State& state) {
  const Graph g = random_cubic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distance_two_sets(g));
}
BENCHMARK(BM_DistanceTwoSets)->Arg(16)->Arg(64)->Arg(256);

void BM_Solve(benchmark::State& state, Problem p, Method m) {
  const Graph g = random_cubic(static_cast<int>(state.range(0)));
  SolveOptions o;
  o.force_method = m;
  for (auto _ : state) benchmark::DoNotOptimize(solve_minimum(g, p, o));
}
BENCHMARK_CAPTURE(BM_Solve, vc_bnb, Problem::VertexCover, Method::BranchAndBound)->Arg(12)->Arg(20)->Arg(28);
BENCHMARK_CAPTURE(BM_Solve, hd_bnb, Problem::HopDom, Method::BranchAndBound)->Arg(12)->Arg(20)->Arg(28);
BENCHMARK_CAPTURE(BM_Solve, tsd_bnb, Problem::TwoStepDom, Method::BranchAndBound)->Arg(12)->Arg(20)->Arg(28);
BENCHMARK_CAPTURE(BM_Solve, hd_brute, Problem::HopDom, Method::Brute)->Arg(12)->Arg(16);

void BM_SolveReduced(benchmark::State& state, const char* kind) {
  const Reduction r = reduce(*parse_kind(kind), *named_graph("P3"));
  for (auto _ : state) benchmark::DoNotOptimize(solve_minimum(r.output, r.kind.problem));
}
BENCHMARK_CAPTURE(BM_SolveReduced, hd_3reg_P3, "hd-3reg")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveReduced, sd_dreg5_P3, "2sd-dreg:5")->Unit(benchmark::kMillisecond);

void BM_Reduce(benchmark::State& state, const char* kind) {
  const Graph g = random_cubic(static_cast<int>(state.range(0)));
  const ReductionKind k = *parse_kind(kind);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(k, g));
}
BENCHMARK_CAPTURE(BM_Reduce, hd_3reg, "hd-3reg")->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(BM_Reduce, sd_claw, "2sd-claw")->Arg(64)->Arg(512);

void BM_Embed(benchmark::State& state) {
  const Graph g = random_cubic(static_cast<int>(state.range(0)));
  if (!is_planar(g)) {
    state.SkipWithError("sample graph is not planar");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(embed_orthogonal(g));
}
BENCHMARK(BM_Embed)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EmbedGrid(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  std::vector<Edge> e;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      const int v = r * side + c;
      if (c + 1 < side) e.push_back({v, v + 1});
      if (r + 1 < side) e.push_back({v, v + side});
    }
  const Graph g = graph_from_edges(side * side, e);
  for (auto _ : state) benchmark::DoNotOptimize(embed_orthogonal(g));
}
BENCHMARK(BM_EmbedGrid)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_UnitDiskLayout(benchmark::State& state, Problem p) {
  const GridEmbedding e = embed_orthogonal(*named_graph("C4"), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const DiskLayout l = reduce_unit_disk(p, e);
    benchmark::DoNotOptimize(intersection_graph(l));
  }
}
BENCHMARK_CAPTURE(BM_UnitDiskLayout, hd, Problem::HopDom)->Arg(2)->Arg(8);
BENCHMARK_CAPTURE(BM_UnitDiskLayout, sd, Problem::TwoStepDom)->Arg(2)->Arg(8);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = *named_graph("Petersen");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

}  // namespace

BENCHMARK_MAIN();
