#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hopdom/corpus.hpp"
#include "hopdom/verify.hpp"
#include "../helpers.hpp"

using namespace hopdom;

namespace {

Graph permuted(const Graph& g, std::uint64_t seed) {
  std::vector<Vertex> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Edge> e;
  for (const auto& x : g.edges()) e.push_back({std::min(p[x.u], p[x.v]), std::max(p[x.u], p[x.v])});
  return graph_from_edges(g.n(), e);
}

ReductionKind kind(const char* s) { return *parse_kind(s); }

}  // namespace

TEST_CASE("connected graph counts") {
  const int expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto gs = connected_graphs(n);
    CHECK(static_cast<int>(gs.size()) == expected[n - 1]);
    std::set<std::string> codes;
    for (const Graph& g : gs) {
      CHECK(is_connected(g));
      codes.insert(to_graph6(canonical_form(g)));
    }
    CHECK(codes.size() == gs.size());
  }
}

TEST_CASE("exhaustive corpus up to four vertices") {
  const auto c = enumerate_corpus(parse_corpus_spec("exhaustive:4"));
  CHECK(c.size() == 10);
  CHECK(c.front().name == "n1.0");
  CHECK(c.front().graph.n() == 1);
  CHECK(c[1].graph.edges() == testing::K(2).edges());
}

TEST_CASE("named corpus") {
  const auto c = enumerate_corpus(parse_corpus_spec("named:K4"));
  REQUIRE(c.size() == 1);
  CHECK(c[0].graph.n() == 4);
  CHECK(c[0].graph.m() == 6);
  const auto two = enumerate_corpus(parse_corpus_spec("named:K_{3,3},Petersen"));
  REQUIRE(two.size() == 2);
  CHECK(is_regular(two[0].graph, 3));
  CHECK(two[1].graph.n() == 10);
  CHECK(is_regular(two[1].graph, 3));
  CHECK_THROWS_AS(parse_corpus_spec("named:Nope"), InputError);
  CHECK_FALSE(named_graph("K0").has_value());
  CHECK(is_claw_free(*named_graph("paw")));
  CHECK_FALSE(is_claw_free(*named_graph("claw")));
}

TEST_CASE("random regular corpus is seeded and regular") {
  const auto spec = parse_corpus_spec("random:8:3:5:7");
  CHECK(spec.mode == CorpusMode::RandomRegular);
  CHECK(spec.seed == 7u);
  const auto a = enumerate_corpus(spec);
  const auto b = enumerate_corpus(spec);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(is_regular(a[i].graph, 3));
    CHECK(a[i].graph.n() == 8);
    CHECK(a[i].graph.edges() == b[i].graph.edges());
  }
  CHECK(a[0].name == "rr8.3.s7#0");
  const auto other = enumerate_corpus(parse_corpus_spec("random:8:3:5:8"));
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].graph.edges() != other[i].graph.edges();
  CHECK(differs);
  CHECK_THROWS(enumerate_corpus(parse_corpus_spec("random:7:3:1:1")));
}

TEST_CASE("corpus spec errors") {
  CHECK_THROWS_AS(parse_corpus_spec("exhaustive:9"), InputError);
  CHECK_THROWS_AS(parse_corpus_spec("exhaustive"), InputError);
  CHECK_THROWS_AS(parse_corpus_spec("bogus:3"), InputError);
  CHECK_THROWS_AS(parse_corpus_spec("random:8:3"), InputError);
}

TEST_CASE("graph6") {
  CHECK(to_graph6(*named_graph("Petersen")) == "IheA@GUAo");
  CHECK(from_graph6("IheA@GUAo").edges() == named_graph("Petersen")->edges());
  CHECK(to_graph6(testing::K(2)) == "A_");
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_graphs(n)) CHECK(from_graph6(to_graph6(g)).edges() == g.edges());
  CHECK_THROWS_AS(from_graph6("A"), InputError);
}

TEST_CASE("canonical form is invariant under relabelling") {
  for (const char* name : {"Petersen", "Q3", "C7", "paw", "K_{3,3}"}) {
    const Graph g = *named_graph(name);
    const Graph c = canonical_form(g);
    for (std::uint64_t s = 1; s <= 5; ++s) CHECK(canonical_form(permuted(g, s)).edges() == c.edges());
  }
  CHECK(canonical_form(testing::P(4)).edges() != canonical_form(*named_graph("claw")).edges());
}

TEST_CASE("single verification rows") {
  const NamedGraph k2{"K2", testing::K(2)};
  const VerifyRow r = verify_row(k2, kind("hd-dreg:4"), {});
  CHECK(r.status == RowStatus::Pass);
  CHECK(r.tau == 1);
  CHECK(r.gamma == 2);
  CHECK(r.offset == 1);
  CHECK(r.n2 == 11);

  const VerifyRow h = verify_row(k2, kind("hd-3reg"), {});
  CHECK(h.gamma == 7);
  CHECK(h.status == RowStatus::Pass);

  const VerifyRow u = verify_row({"K5", testing::K(5)}, kind("hd-ud"), {});
  CHECK(u.status == RowStatus::Skipped);
  CHECK(u.note.find("planar") != std::string::npos);
  const Graph star5 = graph_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const VerifyRow s5 = verify_row({"star5", star5}, kind("2sd-ud"), {});
  CHECK(s5.status == RowStatus::Skipped);
  CHECK(s5.note.find("degree") != std::string::npos);

  VerifyOptions quick;
  quick.budget = std::chrono::milliseconds(0);
  CHECK(verify_row({"P3", testing::P(3)}, kind("hd-3reg"), quick).status == RowStatus::Timeout);
}

TEST_CASE("verification report") {
  CHECK(run_verification({}, {kind("hd-3reg")}).passed());
  CHECK(run_verification({}, {kind("hd-3reg")}).rows.empty());

  const auto corpus = enumerate_corpus(parse_corpus_spec("named:K2,P3,C3"));
  const std::vector<ReductionKind> kinds{kind("hd-3reg"), kind("2sd-3reg")};
  VerifyOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const VerifyReport a = run_verification(corpus, kinds, one);
  const VerifyReport b = run_verification(corpus, kinds, four);
  REQUIRE(a.rows.size() == 6);
  CHECK(a.passed());
  CHECK(a.count(RowStatus::Pass) == 6);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].graph == b.rows[i].graph);
    CHECK(a.rows[i].kind == b.rows[i].kind);
    CHECK(a.rows[i].gamma == b.rows[i].gamma);
    CHECK(a.rows[i].solution_witness == b.rows[i].solution_witness);
  }
  CHECK(a.rows[0].graph == "K2");
  CHECK(a.rows[0].kind == "hd-3reg");
  CHECK(a.rows[1].kind == "2sd-3reg");
  CHECK(a.rows[1].gamma == 4);
  CHECK(a.rows[5].gamma == 11);

  const std::string tsv = report_tsv(a);
  CHECK(tsv.rfind("# hopdomlab-verify v1\n", 0) == 0);
  CHECK(tsv.find("\ngraph\tgraph6\tkind\tn1\tm1\tn2\tm2\ttau\tgamma\toffset\texpected\tprinted_offset\tstatus") !=
        std::string::npos);
  CHECK(tsv.find("\nK2\tA_\thd-3reg\t2\t1\t") != std::string::npos);
  CHECK(tsv.find("# summary PASS=6 FAIL=0 TIMEOUT=0 SKIPPED=0\n") != std::string::npos);
  std::size_t rows = 0;
  for (std::size_t p = 0; (p = tsv.find('\n', p)) != std::string::npos; ++p)
    if (p + 1 < tsv.size() && tsv[p + 1] != '#') ++rows;
  CHECK(rows == 1 + 6);
  CHECK(report_table(a).find("PASS 6") != std::string::npos);
}

TEST_CASE("thread count from the environment") {
  setenv("HOPDOMLAB_THREADS", "3", 1);
  CHECK(default_thread_count() == 3);
  setenv("HOPDOMLAB_THREADS", "junk", 1);
  CHECK(default_thread_count() >= 1);
  unsetenv("HOPDOMLAB_THREADS");
}
