#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls into the library's algorithms beyond the Graph value type, so the
// checks against them are independent.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "grpoly/graph.hpp"
#include "grpoly/poly.hpp"

namespace oracle {

using grpoly::Graph;
using grpoly::Integer;
using grpoly::Rational;
using grpoly::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.n(), std::vector<bool>(g.n(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// Number of isomorphism classes of graphs on n labeled vertices, computed by
/// taking the lexicographically least upper-triangle bit string over all n!
/// relabelings of every labeled graph.
inline std::size_t labeled_dedup_count(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    slot_of[slots[s].first][slots[s].second] = slot_of[slots[s].second][slots[s].first] = s;
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> classes;
  const std::uint32_t total = 1u << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::uint32_t best = mask;
    for (const auto& q : perms) {
      std::uint32_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((mask >> s) & 1u) image |= 1u << slot_of[q[slots[s].first]][q[slots[s].second]];
      }
      best = std::min(best, image);
    }
    classes.insert(best);
  }
  return classes.size();
}

/// Proper colorings with t colors, by exhaustion over t^n assignments.
inline Integer brute_colorings(const Graph& g, unsigned t) {
  const std::size_t n = g.n();
  if (t == 0) return n == 0 ? 1 : 0;
  std::vector<unsigned> color(n, 0);
  Integer count = 0;
  for (;;) {
    bool proper = true;
    for (auto [u, v] : g.edges()) {
      if (color[u] == color[v]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    std::size_t i = 0;
    while (i < n && ++color[i] == t) color[i++] = 0;
    if (i == n) break;
  }
  return count;
}

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Rank of an edge subset in the cycle matroid: n minus the number of
/// components of the spanning subgraph.
inline std::size_t subset_rank(std::size_t n, const std::vector<grpoly::Edge>& edges, std::uint64_t mask) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t rank = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!((mask >> e) & 1u)) continue;
    const std::size_t a = find_root(parent, edges[e].first);
    const std::size_t b = find_root(parent, edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

/// Spanning trees of a connected graph: edge subsets of size n-1 with full rank.
inline Integer brute_spanning_trees(const Graph& g) {
  const auto& edges = g.edges();
  Integer count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) + 1 != g.n()) continue;
    if (subset_rank(g.n(), edges, mask) + 1 == g.n()) ++count;
  }
  return count;
}

/// Tutte polynomial at an integer point via the rank-generating sum over all
/// edge subsets.
inline Integer brute_tutte(const Graph& g, long x, long y) {
  const auto& edges = g.edges();
  const std::size_t r_all = subset_rank(g.n(), edges, (std::uint64_t{1} << edges.size()) - 1);
  Integer total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    const std::size_t r = subset_rank(g.n(), edges, mask);
    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    Integer a;
    Integer b;
    mpz_pow_ui(a.get_mpz_t(), Integer(x - 1).get_mpz_t(), r_all - r);
    mpz_pow_ui(b.get_mpz_t(), Integer(y - 1).get_mpz_t(), size - r);
    total += a * b;
  }
  return total;
}

/// counts[i] = number of i-edge matchings.
inline std::vector<Integer> brute_matchings(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<Integer> counts(g.n() / 2 + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!((mask >> e) & 1u)) continue;
      const std::uint64_t bits = (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);
      if (used & bits) ok = false;
      used |= bits;
    }
    if (ok) ++counts[static_cast<std::size_t>(__builtin_popcountll(mask))];
  }
  return counts;
}

/// counts[i] = number of i-vertex subsets satisfying `keep`.
inline std::vector<Integer> brute_vertex_subsets(const Graph& g,
                                                 const std::function<bool(const std::vector<bool>&)>& keep) {
  const std::size_t n = g.n();
  std::vector<Integer> counts(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> in(n);
    for (std::size_t v = 0; v < n; ++v) in[v] = (mask >> v) & 1u;
    if (keep(in)) ++counts[static_cast<std::size_t>(__builtin_popcount(mask))];
  }
  return counts;
}

inline std::vector<Integer> brute_independent_sets(const Graph& g) {
  return brute_vertex_subsets(g, [&](const std::vector<bool>& in) {
    for (auto [u, v] : g.edges()) {
      if (in[u] && in[v]) return false;
    }
    return true;
  });
}

inline std::vector<Integer> brute_cliques(const Graph& g) {
  const auto a = adjacency(g);
  return brute_vertex_subsets(g, [&](const std::vector<bool>& in) {
    for (std::size_t u = 0; u < g.n(); ++u) {
      for (std::size_t v = u + 1; v < g.n(); ++v) {
        if (in[u] && in[v] && !a[u][v]) return false;
      }
    }
    return true;
  });
}

inline std::vector<Integer> brute_vertex_covers(const Graph& g) {
  return brute_vertex_subsets(g, [&](const std::vector<bool>& in) {
    for (auto [u, v] : g.edges()) {
      if (!in[u] && !in[v]) return false;
    }
    return true;
  });
}

inline std::vector<Integer> brute_dominating_sets(const Graph& g) {
  const auto a = adjacency(g);
  return brute_vertex_subsets(g, [&](const std::vector<bool>& in) {
    for (std::size_t v = 0; v < g.n(); ++v) {
      bool dominated = in[v];
      for (std::size_t u = 0; u < g.n() && !dominated; ++u) dominated = in[u] && a[u][v];
      if (!dominated) return false;
    }
    return true;
  });
}

/// counts[i] = number of i-edge subsets touching every vertex.
inline std::vector<Integer> brute_edge_covers(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<Integer> counts(edges.size() + 1, 0);
  const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::uint64_t touched = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((mask >> e) & 1u) touched |= (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);
    }
    if (touched == all) ++counts[static_cast<std::size_t>(__builtin_popcountll(mask))];
  }
  return counts;
}

/// det(t*I - M) by Gaussian elimination over the rationals.
inline Rational det_shifted(const std::vector<std::vector<long>>& m, long t) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational((i == j ? t : 0) - m[i][j]);
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

inline std::vector<std::vector<long>> adjacency_numbers(const Graph& g) {
  std::vector<std::vector<long>> m(g.n(), std::vector<long>(g.n(), 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

inline std::vector<std::vector<long>> laplacian_numbers(const Graph& g) {
  auto m = adjacency_numbers(g);
  for (std::size_t i = 0; i < g.n(); ++i) {
    long d = 0;
    for (std::size_t j = 0; j < g.n(); ++j) {
      d += m[i][j];
      m[i][j] = -m[i][j];
    }
    m[i][i] = d;
  }
  return m;
}

}  // namespace oracle
