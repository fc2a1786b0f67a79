#include <doctest.h>

#include "hopdom/corpus.hpp"
#include "hopdom/graph.hpp"
#include "../helpers.hpp"

using namespace hopdom;
using testing::as_oracle;

namespace {

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto a = edges[i], b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        out.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  return graph_from_edges(static_cast<int>(edges.size()), out);
}

}  // namespace

TEST_CASE("distance-2 neighborhoods") {
  CHECK(exact_distance_neighborhood(testing::P(3), 0, 2) == VertexSet({2}));
  const Graph c4 = testing::C(4);
  for (Vertex v = 0; v < 4; ++v) CHECK(exact_distance_neighborhood(c4, v, 2) == VertexSet({(v + 2) % 4}));
  const Graph petersen = *named_graph("Petersen");
  for (Vertex v = 0; v < 10; ++v) CHECK(exact_distance_neighborhood(petersen, v, 2).size() == 6);
  CHECK_THROWS_AS(exact_distance_neighborhood(c4, 4, 2), InputError);
  CHECK_THROWS_AS(exact_distance_neighborhood(c4, 0, 0), InputError);
}

TEST_CASE("distance neighborhoods agree with Floyd-Warshall on small graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const auto o = as_oracle(g);
      for (Vertex v = 0; v < n; ++v) {
        const VertexSet n1 = exact_distance_neighborhood(g, v, 1);
        const VertexSet n2 = exact_distance_neighborhood(g, v, 2);
        CHECK(std::vector<Vertex>(n1.begin(), n1.end()) == g.neighbors(v));
        for (Vertex u = 0; u < n; ++u) {
          CHECK(n2.contains(u) == (o.dist[v][u] == 2));
          CHECK(n2.contains(u) == exact_distance_neighborhood(g, u, 2).contains(v));
          CHECK(!(n1.contains(u) && n2.contains(u)));
        }
      }
    }
}

TEST_CASE("disconnected vertices are never at distance 2") {
  const Graph g = graph_from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(exact_distance_neighborhood(g, 0, 2) == VertexSet({2}));
  CHECK(exact_distance_neighborhood(g, 3, 2).empty());
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("regularity") {
  CHECK(is_regular(testing::C(4), 2));
  CHECK(is_regular(testing::K(4), 3));
  CHECK_FALSE(is_regular(testing::P(3), 2));
}

TEST_CASE("claw-freeness") {
  CHECK_FALSE(is_claw_free(*named_graph("K13")));
  CHECK(is_claw_free(testing::C(5)));
  const Graph lp = line_graph(*named_graph("Petersen"));
  CHECK(lp.n() == 15);
  CHECK(is_claw_free(lp));
  CHECK_FALSE(is_claw_free(*named_graph("Petersen")));
}

TEST_CASE("edge-list parsing") {
  const Graph k2 = parse_graph("2 1\n0 1");
  CHECK(k2.n() == 2);
  CHECK(k2.m() == 1);
  const Graph e3 = parse_graph("3 0");
  CHECK(e3.n() == 3);
  CHECK(e3.m() == 0);
  const Graph k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  CHECK(is_regular(k4, 3));
  CHECK(parse_graph("# comment\n\n2 1\n# more\n0 1\n").m() == 1);

  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("2 1\n1 0") == 2);        // reversed
  CHECK(line_of("3 2\n0 1\n0 1") == 3);   // duplicate
  CHECK(line_of("2 1\n0 2") == 2);        // out of range
  CHECK(line_of("2 1\n0 x") == 2);        // malformed
  CHECK(line_of("3 2\n0 1") != 0);        // m mismatch
  CHECK(line_of("2 1\n0 1\n0 1 2") != 0);
  CHECK(line_of("") != 0);
}

TEST_CASE("serialization round trip") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const std::string text = serialize_graph(g);
      const Graph back = parse_graph(text);
      CHECK(back.edges() == g.edges());
      CHECK(serialize_graph(back) == text);
    }
}

TEST_CASE("builder rejects loops and parallel edges") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), InputError);
  b.add_edge(0, 1);
  CHECK_THROWS_AS(b.add_edge(1, 0), InputError);
  b.ensure_edge(1, 0);
  CHECK(b.build().m() == 1);
}

TEST_CASE("vertex sets") {
  CHECK_THROWS_AS(VertexSet({2, 1}), InputError);
  CHECK_THROWS_AS(VertexSet({1, 1}), InputError);
  CHECK(VertexSet::from_unsorted({3, 1, 2}) == VertexSet({1, 2, 3}));
  CHECK(VertexSet({0, 3}) < VertexSet({1, 2}));
  CHECK(VertexSet({0, 1}).to_string() == "0 1");
}
