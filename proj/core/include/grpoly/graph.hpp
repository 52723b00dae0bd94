#pragma once

/// \file graph.hpp
/// \brief Simple undirected graphs and their similarity triple (n, m, k).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grpoly/error.hpp"

namespace grpoly {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored as sorted (u < v) pairs in lexicographic order, so two
/// Graph values compare equal iff they have the same labeled edge set.
/// Isomorphism is only available through canonical_form().
class Graph {
 public:
  Graph() = default;
  /// Throws DomainError on loops, out-of-range endpoints or duplicate edges.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::vector<std::size_t> degrees() const;
  std::vector<std::vector<Vertex>> adjacency_lists() const;
  /// Neighbourhood bitmasks; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct SimilarityTriple {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;

  /// Nullity m - n + k.
  long long nu() const { return static_cast<long long>(m) - static_cast<long long>(n) + static_cast<long long>(k); }
  /// Rank n - k.
  long long rho() const { return static_cast<long long>(n) - static_cast<long long>(k); }

  friend auto operator<=>(const SimilarityTriple&, const SimilarityTriple&) = default;
};

std::string to_string(const SimilarityTriple& t);

std::size_t component_count(const Graph& g);
/// Component index per vertex, numbered by smallest member.
std::vector<std::size_t> component_labels(const Graph& g);
SimilarityTriple similarity_triple(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Image of g under the vertex map v -> perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);
/// Subgraph induced by `keep` (in the given order).
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

/// Graph with exactly v vertices, e edges and k components.
///
/// Builds k-1 isolated vertices plus one component on v-k+1 vertices made of a
/// spanning path and the lexicographically first extra edges. Throws
/// DomainError naming the violated inequality.
Graph build_graph_with_parameters(std::size_t v, std::size_t e, std::size_t k);

/// True iff (v, e, k) satisfies both realizability inequalities.
bool parameters_realizable(std::size_t v, std::size_t e, std::size_t k);

/// Named families: "cycle:N", "complete:N", "path:N", "star:N" (K_{1,N}),
/// "empty:N", "prufer:a,b,c" (tree from a Pruefer code on len+2 vertices).
Graph named_graph(const std::string& spec);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph empty_graph(std::size_t n);
Graph tree_from_prufer(const std::vector<Vertex>& code);

bool is_tree(const Graph& g);
bool is_forest(const Graph& g);

}  // namespace grpoly
