#pragma once

/// \file canonical.hpp
/// \brief Canonical labeling by partition refinement and individualization.
///
/// Works on symmetric weight matrices so the same search serves simple graphs
/// (weights 0/1) and the multigraph intermediates of deletion-contraction.
/// The search explores every leaf of the individualization tree except those
/// related by a twin transposition, and keeps the lexicographically smallest
/// code. There is no general automorphism pruning, so the cost grows quickly
/// on large highly regular inputs.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grpoly/graph.hpp"

namespace grpoly {

struct WeightMatrix {
  std::size_t n = 0;
  std::vector<std::uint8_t> w;

  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t size) : n(size), w(size * size, 0) {}
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return w[i * n + j]; }
  std::uint8_t& at(std::size_t i, std::size_t j) { return w[i * n + j]; }
};

WeightMatrix weight_matrix(const Graph& g);

struct CanonicalLabeling {
  /// order[i] is the input vertex placed at canonical position i.
  std::vector<Vertex> order;
  /// Upper-triangle weights in canonical order, column-major.
  std::vector<std::uint8_t> code;
};

CanonicalLabeling canonical_labeling(const WeightMatrix& m);

/// Largest vertex count accepted by canonical_form.
inline constexpr std::size_t kCanonicalFormMaxVertices = 10;

/// Byte key equal for two graphs iff they are isomorphic: the vertex count
/// followed by the canonical upper-triangle adjacency bits packed 8 per byte.
std::vector<std::uint8_t> canonical_form(const Graph& g);

/// The canonically relabeled copy of g.
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace grpoly
