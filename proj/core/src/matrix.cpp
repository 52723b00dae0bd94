#include "grpoly/matrix.hpp"

#include <deque>

namespace grpoly {

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.n());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix l(g.n());
  for (auto [u, v] : g.edges()) {
    l(u, v) = -1;
    l(v, u) = -1;
    l(u, u) += 1;
    l(v, v) += 1;
  }
  return l;
}

std::size_t shortest_cycle_through(const Graph& g, Vertex u, Vertex v) {
  // BFS from u to v in G - uv; a path of length d closes a cycle of length d + 1.
  auto adj = g.adjacency_lists();
  std::vector<std::size_t> dist(g.n(), static_cast<std::size_t>(-1));
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : adj[x]) {
      if ((x == u && y == v) || (x == v && y == u)) continue;
      if (dist[y] != static_cast<std::size_t>(-1)) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y] + 1;
      queue.push_back(y);
    }
  }
  return 0;
}

GraphMatrix cycle_matrix(const Graph& g) {
  IntMatrix c(g.n());
  auto deg = g.degrees();
  for (std::size_t v = 0; v < g.n(); ++v) c(v, v) = static_cast<unsigned long>(deg[v]);
  for (auto [u, v] : g.edges()) {
    std::size_t len = shortest_cycle_through(g, u, v);
    const unsigned long entry = len == 0 ? 1UL : static_cast<unsigned long>(len);
    c(u, v) = entry;
    c(v, u) = entry;
  }
  return {MatrixKind::cycle, std::move(c)};
}

GraphMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency:
      return {kind, adjacency_matrix(g)};
    case MatrixKind::laplacian:
      return {kind, laplacian_matrix(g)};
    case MatrixKind::cycle:
      return cycle_matrix(g);
  }
  throw DomainError("unknown matrix kind");
}

IntPoly characteristic_polynomial(const IntMatrix& a) {
  // M_1 = I, c_{n-1} = -tr(A); M_k = A*M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A*M_k)/k.
  const std::size_t n = a.size();
  std::vector<Integer> coeffs(n + 1);
  coeffs[n] = 1;
  IntMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += coeffs[n - k + 1];
    m = std::move(am);
    IntMatrix prod = a * m;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw Error("characteristic_polynomial: inexact division (not an integer matrix?)");
    }
    mpz_divexact_ui(trace.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[n - k] = -trace;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly char_poly(const Graph& g, MatrixKind kind) {
  if (g.n() == 0) throw DomainError("char_poly needs n >= 1");
  return characteristic_polynomial(graph_matrix(g, kind).matrix);
}

}  // namespace grpoly
