#pragma once

/// \file enumerate.hpp
/// \brief Isomorph-free enumeration of small simple graphs and trees.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grpoly/graph.hpp"

namespace grpoly {

inline constexpr std::size_t kEnumerateMaxVertices = 8;
inline constexpr std::size_t kTreeEnumerateMaxVertices = 9;

/// Edge-count / component-count restriction for enumerate_graphs.
struct EnumerationFilter {
  std::optional<std::size_t> m;
  std::optional<std::size_t> k;
};

/// One canonically labeled representative per isomorphism class on n vertices,
/// ordered by edge count and then canonical code. For n <= 6 every labeled graph
/// is generated and deduplicated; for n = 7, 8 the representatives on n-1
/// vertices are extended by a new vertex in every possible way. Results are
/// cached per n and safe to request from several threads.
std::vector<Graph> enumerate_graphs(std::size_t n, EnumerationFilter filter = {});

/// All graphs with 1..nmax vertices, in enumerate_graphs order per n.
std::vector<Graph> enumerate_graphs_up_to(std::size_t nmax);

/// Rooted-at-centre AHU code; equal iff the trees are isomorphic.
std::string tree_code(const Graph& tree);

/// Non-isomorphic trees on n vertices from all Pruefer codes, deduplicated.
std::vector<Graph> enumerate_trees(std::size_t n);

}  // namespace grpoly
