#include <doctest.h>

#include "hopdom/corpus.hpp"
#include "hopdom/embedding.hpp"
#include "hopdom/rational.hpp"
#include "hopdom/reductions.hpp"
#include "hopdom/unit_disk.hpp"
#include "../helpers.hpp"

using namespace hopdom;
using testing::as_oracle;
using testing::ids;

namespace {

GridEmbedding straight_k2(int k) {
  GridEmbedding e;
  e.coords = {{0, 0}, {k, 0}};
  EmbeddedEdge ee{{0, 1}, {}};
  for (int x = 0; x <= k; ++x) ee.path.push_back({x, 0});
  e.edges.push_back(ee);
  return e;
}

// P3 with both edges of length 2 and a bend at the middle vertex.
GridEmbedding bent_p3() {
  return parse_embedding(
      "hopdomlab-embedding v1\nV 0 0 0\nV 1 2 0\nV 2 2 2\nE 0 1 0 0 1 0 2 0\nE 1 2 2 0 2 1 2 2\n");
}

GridEmbedding square_c4() {
  return parse_embedding(
      "hopdomlab-embedding v1\nV 0 0 0\nV 1 1 0\nV 2 1 1\nV 3 0 1\n"
      "E 0 1 0 0 1 0\nE 1 2 1 0 1 1\nE 2 3 1 1 0 1\nE 0 3 0 0 0 1\n");
}

DiskLayout loose_disks(std::vector<std::pair<Rational, Rational>> centers) {
  DiskLayout l;
  for (auto [x, y] : centers) l.disks.push_back({x, y, "x"});
  return l;
}

bool has_bend(const EmbeddedEdge& ee) {
  for (std::size_t i = 2; i < ee.path.size(); ++i) {
    const auto a = ee.path[i - 2], c = ee.path[i];
    if (a.x != c.x && a.y != c.y) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
  CHECK((Rational(3, 4) * Rational(3, 4)) == Rational(9, 16));
  CHECK(Rational(7, 8) < Rational(1));
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("embedding validation") {
  std::vector<std::string> why;
  CHECK(validate_embedding(scale_embedding(square_c4(), 2), &why));
  CHECK(why.empty());

  // Unit squares are legal drawings, but k_uv = 1 leaves no grid vertex.
  CHECK_FALSE(validate_embedding(square_c4(), &why));
  CHECK_FALSE(why.empty());

  const GridEmbedding crossing = parse_embedding(
      "hopdomlab-embedding v1\nV 0 0 1\nV 1 2 1\nV 2 1 0\nV 3 1 2\n"
      "E 0 1 0 1 1 1 2 1\nE 2 3 1 0 1 1 1 2\n");
  why.clear();
  CHECK_FALSE(validate_embedding(crossing, &why));
  REQUIRE_FALSE(why.empty());
  CHECK(why.front().find("crosses") != std::string::npos);

  GridEmbedding diagonal = straight_k2(2);
  diagonal.edges[0].path[1] = {1, 1};
  CHECK_FALSE(validate_embedding(diagonal));

  GridEmbedding through = straight_k2(2);
  through.coords.push_back({1, 0});
  CHECK_FALSE(validate_embedding(through));

  GridEmbedding same_point = straight_k2(2);
  same_point.coords.push_back({0, 0});
  CHECK_FALSE(validate_embedding(same_point));
}

TEST_CASE("embedding file round trip and errors") {
  const GridEmbedding e = bent_p3();
  CHECK(e.coords.size() == 3);
  CHECK(e.edges[1].length() == 2);
  const GridEmbedding back = parse_embedding(serialize_embedding(e));
  CHECK(back.coords == e.coords);
  CHECK(back.edges.size() == e.edges.size());
  CHECK(back.edges[1].path == e.edges[1].path);

  // Reversed edge records are normalized to u < v.
  const GridEmbedding rev = parse_embedding("hopdomlab-embedding v1\nV 0 0 0\nV 1 2 0\nE 1 0 2 0 1 0 0 0\n");
  CHECK(rev.edges[0].edge == Edge{0, 1});
  CHECK(rev.edges[0].path.front() == Point{0, 0});

  CHECK_THROWS_AS(parse_embedding("V 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_embedding("hopdomlab-embedding v1\nV 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_embedding("hopdomlab-embedding v1\nV 1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_embedding("hopdomlab-embedding v1\nV 0 0 0\nE 0 3 0 0 1 0\n"), ParseError);
}

TEST_CASE("orthogonal embedder") {
  const GridEmbedding c4 = embed_orthogonal(testing::C(4));
  CHECK(validate_embedding(c4));
  CHECK(c4.scale == 4);
  for (const auto& ee : c4.edges) CHECK(ee.length() == 4);

  const GridEmbedding k2 = embed_orthogonal(testing::K(2));
  CHECK(k2.coords[0].y == k2.coords[1].y);
  CHECK(std::llabs(k2.coords[0].x - k2.coords[1].x) == 4);
  CHECK(k2.edges[0].length() == 4);

  const GridEmbedding k4 = embed_orthogonal(testing::K(4));
  CHECK(validate_embedding(k4));
  CHECK(embedded_graph(k4).edges() == testing::K(4).edges());
  CHECK(std::any_of(k4.edges.begin(), k4.edges.end(), has_bend));

  CHECK(embed_orthogonal(testing::K(2), 2).edges[0].length() == 2);
  CHECK_THROWS_AS(embed_orthogonal(testing::K(5)), EmbeddingError);
  CHECK_THROWS_AS(embed_orthogonal(*named_graph("K33")), EmbeddingError);
  const Graph star5 = graph_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK_THROWS_AS(embed_orthogonal(star5), EmbeddingError);
  CHECK_THROWS_AS(embed_orthogonal(testing::K(2), 1), InputError);
}

TEST_CASE("embedder handles every planar small graph of max degree 4") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      bool fits = true;
      for (Vertex v = 0; v < n; ++v) fits &= g.degree(v) <= 4;
      if (!fits || !is_planar(g)) continue;
      const GridEmbedding e = embed_orthogonal(g, 2);
      CAPTURE(to_graph6(g));
      CHECK(validate_embedding(e));
      CHECK(embedded_graph(e).edges() == g.edges());
    }
  for (const char* name : {"Q3", "C8", "P7"}) {
    const Graph g = *named_graph(name);
    const GridEmbedding e = embed_orthogonal(g);
    CHECK(validate_embedding(e));
    CHECK(embedded_graph(e).edges() == g.edges());
  }
}

TEST_CASE("intersection graph decides contact exactly") {
  CHECK(intersection_graph(loose_disks({{0, 0}, {Rational(3, 4), 0}})).m() == 1);
  CHECK(intersection_graph(loose_disks({{0, 0}, {Rational(3, 2), 0}})).m() == 0);
  CHECK(intersection_graph(loose_disks({{0, 0}, {1, 0}})).m() == 1);  // tangent counts
  CHECK(intersection_graph(loose_disks({{0, 0}, {Rational(1, 2), Rational(1, 2)}})).m() == 1);
  CHECK(intersection_graph(loose_disks({{0, 0}, {Rational(3, 4), Rational(3, 4)}})).m() == 0);
  CHECK_THROWS_AS(intersection_graph(loose_disks({{0, 0}, {Rational(1, 3), 0}})), InputError);

  std::vector<std::pair<Rational, Rational>> chain;
  for (int i = 0; i < 7; ++i) chain.push_back({Rational(3 * i, 4), 0});
  CHECK(intersection_graph(loose_disks(chain)).edges() == testing::P(7).edges());
}

TEST_CASE("unit-disk HD gadget on K2 with one grid vertex") {
  const DiskLayout l = reduce_unit_disk(Problem::HopDom, straight_k2(2));
  CHECK(l.disks.size() == 2 + 2 * 11 + 4);
  CHECK(l.offset == 7);
  CHECK(printed_offset(Problem::HopDom, l.source) == 7);

  std::vector<std::string> why;
  CHECK(template_fidelity(l, &why));
  CHECK(why.empty());
  const SeparationStats s = separation_stats(l);
  CHECK(s.holds());
  CHECK(s.max_adjacent_sq <= Rational(49, 64));
  CHECK(s.min_nonadjacent_sq >= Rational(81, 64));

  const Graph g = intersection_graph(l);
  for (const auto& run : l.edges[0].runs)
    for (int p = 1; p <= 7; ++p) CHECK(g.degree(run.c[p]) <= 4);
  CHECK(l.disks[0].role == "u_0");
  CHECK(l.disks[l.edges[0].grids[0].c[1]].role == "C_d^1_{0;1}@1");
  for (const auto& d : l.disks) CHECK(d.role.find(',') == std::string::npos);

  const VertexSet c1 = unit_disk_forward_certificate(l, VertexSet({0}));
  CHECK(c1.size() == 8);
  CHECK(is_hop_dominating(g, c1));
  CHECK(as_oracle(g).valid(oracle::Kind::HD, ids(c1)));
  const VertexSet c2 = unit_disk_forward_certificate(l, VertexSet({0, 1}));
  CHECK(c2.size() == 9);
  CHECK(is_hop_dominating(g, c2));
  const VertexSet c3 = unit_disk_forward_certificate(l, VertexSet({1}));
  CHECK(c3.size() == 8);
  CHECK(is_hop_dominating(g, c3));
  CHECK(unit_disk_extract_vertex_cover(l, c1) == VertexSet({0}));
  CHECK_THROWS_AS(unit_disk_forward_certificate(l, VertexSet()), PreconditionError);
}

TEST_CASE("unit-disk 2SD gadget on K2 with one grid vertex") {
  const DiskLayout l = reduce_unit_disk(Problem::TwoStepDom, straight_k2(2));
  CHECK(l.disks.size() == 2 + 2 * 16 + 4);
  CHECK(l.offset == 15);
  CHECK(printed_offset(Problem::TwoStepDom, l.source) == 23);
  CHECK(template_fidelity(l));
  CHECK(separation_stats(l).holds());
  const Graph g = intersection_graph(l);
  const VertexSet c = unit_disk_forward_certificate(l, VertexSet({0}));
  CHECK(c.size() == 16);
  CHECK(is_two_step_dominating(g, c));
  CHECK(as_oracle(g).valid(oracle::Kind::TSD, ids(c)));
}

TEST_CASE("unit-disk optimum equals cover plus offset on small embeddings") {
  const GridEmbedding cases[] = {straight_k2(2), straight_k2(3), straight_k2(4), bent_p3()};
  for (Problem p : {Problem::HopDom, Problem::TwoStepDom})
    for (const auto& e : cases) {
      const DiskLayout l = reduce_unit_disk(p, e);
      const Graph g = intersection_graph(l);
      const int tau = *solve_minimum(embedded_graph(e), Problem::VertexCover).optimum;
      const auto r = solve_minimum(g, p);
      CAPTURE(to_string(p));
      CAPTURE(l.disks.size());
      REQUIRE(r.status == SolveStatus::Optimal);
      CHECK(*r.optimum == tau + l.offset);
      CHECK(template_fidelity(l));
      int closed = 0;
      for (const auto& ee : e.edges) closed += p == Problem::HopDom ? 4 * ee.length() - 1 : 8 * ee.length() - 1;
      CHECK(l.offset == closed);
      CHECK(is_vertex_cover(embedded_graph(e), unit_disk_extract_vertex_cover(l, *r.witness)));
    }
}

TEST_CASE("doubling the scale only changes the offset by the closed form") {
  const GridEmbedding base = straight_k2(1);
  const DiskLayout a = reduce_unit_disk(Problem::HopDom, scale_embedding(base, 2));
  const DiskLayout b = reduce_unit_disk(Problem::HopDom, scale_embedding(base, 4));
  CHECK(a.offset == 7);
  CHECK(b.offset == 15);
  CHECK(*solve_minimum(intersection_graph(b), Problem::HopDom).optimum == 1 + 15);
}

TEST_CASE("turns in both directions keep the template") {
  const GridEmbedding zigzag = parse_embedding(
      "hopdomlab-embedding v1\nV 0 0 0\nV 1 3 2\nE 0 1 0 0 1 0 1 1 2 1 2 2 3 2\n");
  const GridEmbedding hook = parse_embedding("hopdomlab-embedding v1\nV 0 0 0\nV 1 0 1\nE 0 1 0 0 1 0 1 1 0 1\n");
  for (Problem p : {Problem::HopDom, Problem::TwoStepDom})
    for (const auto& e : {zigzag, hook, embed_orthogonal(testing::C(4), 2), embed_orthogonal(testing::K(4), 2)}) {
      const DiskLayout l = reduce_unit_disk(p, e);
      std::vector<std::string> why;
      CHECK(template_fidelity(l, &why));
      CHECK(separation_stats(l).holds());
    }
}

TEST_CASE("unit-disk preconditions") {
  CHECK_THROWS_AS(reduce_unit_disk(Problem::HopDom, square_c4()), PreconditionError);
  CHECK_THROWS_AS(reduce_unit_disk(Problem::VertexCover, straight_k2(2)), InputError);
}

TEST_CASE("layout emission") {
  const DiskLayout l = reduce_unit_disk(Problem::HopDom, straight_k2(2));
  const std::string csv = layout_csv(l);
  CHECK(csv.rfind("id,role,cx_num,cx_den,cy_num,cy_den\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 29);
  CHECK(csv.find("\n1,u_1,13,1,0,1\n") != std::string::npos);
  CHECK(layout_svg(l).find("<circle") != std::string::npos);
  CHECK(layout_dot(l).find("graph disks") == 0);
}
