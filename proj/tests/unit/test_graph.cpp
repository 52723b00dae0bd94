#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "grpoly/canonical.hpp"
#include "grpoly/enumerate.hpp"
#include "grpoly/error.hpp"
#include "grpoly/graph.hpp"
#include "grpoly/graph6.hpp"
#include "oracles.hpp"

using namespace grpoly;

namespace {

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<Vertex> random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(GraphValue, RejectsLoopsDuplicatesAndOutOfRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 3}}), DomainError);
}

TEST(GraphValue, EdgesAreNormalized) {
  const Graph a(3, {{2, 0}, {1, 0}});
  const Graph b(3, {{0, 1}, {0, 2}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.has_edge(2, 0));
  EXPECT_FALSE(a.has_edge(1, 2));
}

TEST(GraphValue, SimilarityTripleAndNamedGraphs) {
  const Graph g = disjoint_union(cycle_graph(4), empty_graph(2));
  const SimilarityTriple t = similarity_triple(g);
  EXPECT_EQ(t.n, 6u);
  EXPECT_EQ(t.m, 4u);
  EXPECT_EQ(t.k, 3u);
  EXPECT_EQ(t.nu(), 1);
  EXPECT_EQ(t.rho(), 3);
  EXPECT_EQ(named_graph("complete:5").m(), 10u);
  EXPECT_EQ(named_graph("star:4").n(), 5u);
  EXPECT_TRUE(is_tree(named_graph("prufer:3,3,3")));
  EXPECT_THROW(named_graph("wheel:5"), DomainError);
}

TEST(GraphValue, ComplementIsAnInvolution) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 1 + trial % 8, 0.4);
    const Graph c = complement(g);
    EXPECT_EQ(c.m() + g.m(), g.n() * (g.n() - 1) / 2);
    EXPECT_EQ(complement(c), g);
  }
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(cycle_graph(4)), "Cl");
  EXPECT_EQ(to_graph6(empty_graph(1)), "@");
  EXPECT_EQ(graph_from_graph6(">>graph6<<Bw\n"), complete_graph(3));
}

TEST(Graph6, RoundTripOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) EXPECT_EQ(graph_from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, RoundTripBeyondOneByteHeader) {
  std::mt19937 rng(5);
  for (std::size_t n : {62u, 63u, 64u, 100u}) {
    const Graph g = random_graph(rng, n, 0.1);
    EXPECT_EQ(graph_from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, MalformedInputReportsOffset) {
  try {
    graph_from_graph6("C!");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(graph_from_graph6("Cl~"), ParseError);
  EXPECT_THROW(graph_from_graph6(""), ParseError);
}

TEST(Graph6, StreamSkipsBlankLines) {
  std::istringstream in("Bw\n\nCl\n");
  const auto graphs = read_graph6_stream(in);
  ASSERT_EQ(graphs.size(), 2u);
  std::ostringstream out;
  write_graph6_stream(out, graphs);
  EXPECT_EQ(out.str(), "Bw\nCl\n");
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 10);
    const Graph g = random_graph(rng, n, 0.5);
    const Graph h = relabel(g, random_perm(rng, n));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(isomorphic(g, h));
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  EXPECT_FALSE(isomorphic(path_graph(4), star_graph(3)));
  EXPECT_FALSE(isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  // Both 3-regular on 6 vertices.
  const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  const Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_FALSE(isomorphic(prism, k33));
}

TEST(Enumeration, CountsMatchLabeledDedupOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_graphs(n).size(), oracle::labeled_dedup_count(n)) << "n=" << n;
  }
}

TEST(Enumeration, KnownCountsUpToSeven) {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_graphs(n).size(), expected[n - 1]);
}

TEST(Enumeration, RepresentativesArePairwiseNonIsomorphic) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& g : enumerate_graphs(n)) EXPECT_TRUE(seen.insert(canonical_form(g)).second);
  }
}

TEST(Enumeration, FiltersSelectSubsets) {
  std::size_t total = 0;
  for (std::size_t m = 0; m <= 10; ++m) {
    const auto part = enumerate_graphs(5, EnumerationFilter{m, std::nullopt});
    for (const auto& g : part) EXPECT_EQ(g.m(), m);
    total += part.size();
  }
  EXPECT_EQ(total, 34u);
  for (const auto& g : enumerate_graphs(6, EnumerationFilter{std::nullopt, 1u})) EXPECT_EQ(component_count(g), 1u);
  EXPECT_EQ(enumerate_graphs(6, EnumerationFilter{std::nullopt, 1u}).size(), 112u);
}

TEST(Enumeration, SizeCap) { EXPECT_THROW(enumerate_graphs(kEnumerateMaxVertices + 1), SizeCapError); }

TEST(Enumeration, TreesUpToNine) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto trees = enumerate_trees(n);
    EXPECT_EQ(trees.size(), expected[n - 1]) << "n=" << n;
    for (const auto& t : trees) EXPECT_TRUE(is_tree(t));
  }
}

TEST(Similarity, TriplesSatisfyRealizabilityInequalities) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const auto t = similarity_triple(g);
      const std::size_t r = t.n - t.k;
      EXPECT_LE(r, t.m);
      EXPECT_LE(t.m, r * (r + 1) / 2);
      EXPECT_TRUE(parameters_realizable(t.n, t.m, t.k));
    }
  }
}

TEST(Similarity, BuildWithParametersIsRightInverse) {
  for (std::size_t v = 1; v <= 8; ++v) {
    for (std::size_t k = 1; k <= v; ++k) {
      for (std::size_t e = 0; e <= v * (v - 1) / 2; ++e) {
        const std::size_t r = v - k;
        const bool valid = r <= e && e <= r * (r + 1) / 2;
        EXPECT_EQ(parameters_realizable(v, e, k), valid);
        if (!valid) {
          EXPECT_THROW(build_graph_with_parameters(v, e, k), DomainError);
          continue;
        }
        const auto t = similarity_triple(build_graph_with_parameters(v, e, k));
        EXPECT_EQ(t.n, v);
        EXPECT_EQ(t.m, e);
        EXPECT_EQ(t.k, k);
      }
    }
  }
}
