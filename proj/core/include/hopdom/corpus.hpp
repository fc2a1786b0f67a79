#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopdom/graph.hpp"

namespace hopdom {

struct NamedGraph {
  std::string name;
  Graph graph;
};

enum class CorpusMode { Exhaustive, Named, RandomRegular };

struct CorpusSpec {
  CorpusMode mode = CorpusMode::Named;
  int n_max = 0;                   // Exhaustive, at most 8
  std::vector<std::string> names;  // Named
  int n = 0, d = 0, count = 0;     // RandomRegular
  std::optional<std::uint64_t> seed;

  // Optional filters applied after generation.
  bool connected_only = false;
  std::optional<int> regular_degree;
  bool planar_max_degree_4 = false;
};

// "exhaustive:5", "named:K2,P3,Petersen", "random:8:3:5:7" (n:d:count:seed).
CorpusSpec parse_corpus_spec(std::string_view text);

std::vector<NamedGraph> enumerate_corpus(const CorpusSpec& spec);

// Non-isomorphic connected graphs on exactly n vertices, 1 <= n <= 8, in a
// fixed order (by edge count, then canonical form).
std::vector<Graph> connected_graphs(int n);

// K1..K8 as "K<n>", paths "P<n>", cycles "C<n>", "K13" (claw), "K33" or
// "K_{3,3}", "Petersen", "Q3", "paw", "diamond".
std::optional<Graph> named_graph(std::string_view name);

// Canonical relabelling: isomorphic graphs map to identical graphs. n <= 11.
Graph canonical_form(const Graph& g);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace hopdom
