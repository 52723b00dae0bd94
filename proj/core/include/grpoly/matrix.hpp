#pragma once

/// \file matrix.hpp
/// \brief Integer matrices attached to graphs and exact characteristic polynomials.

#include <cstddef>
#include <vector>

#include "grpoly/graph.hpp"
#include "grpoly/poly.hpp"

namespace grpoly {

enum class MatrixKind { adjacency, laplacian, cycle };

/// Dense square matrix of exact integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

struct GraphMatrix {
  MatrixKind kind;
  IntMatrix matrix;
};

IntMatrix adjacency_matrix(const Graph& g);
/// D - A.
IntMatrix laplacian_matrix(const Graph& g);

/// Length of the shortest cycle through edge (u, v), or 0 if the edge is a bridge.
std::size_t shortest_cycle_through(const Graph& g, Vertex u, Vertex v);

/// Off-diagonal (u,v): shortest cycle length through the edge when one exists,
/// 1 for a bridge edge, 0 for a non-edge; diagonal: vertex degree.
GraphMatrix cycle_matrix(const Graph& g);

GraphMatrix graph_matrix(const Graph& g, MatrixKind kind);

/// det(X*I - M) by the Faddeev-LeVerrier recurrence; every division is exact.
IntPoly characteristic_polynomial(const IntMatrix& m);

IntPoly char_poly(const Graph& g, MatrixKind kind);

}  // namespace grpoly
