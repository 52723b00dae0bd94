#include "grpoly/catalog.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "grpoly/canonical.hpp"

namespace grpoly {

namespace {

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array kFamilyInfo = {
    FamilyInfo{FamilyId::charA, "charA", 1},
    FamilyInfo{FamilyId::charL, "charL", 1},
    FamilyInfo{FamilyId::charCycle, "charCycle", 1},
    FamilyInfo{FamilyId::matchingDefect, "matchingDefect", 1},
    FamilyInfo{FamilyId::matchingGen, "matchingGen", 1},
    FamilyInfo{FamilyId::matchingBiv, "matchingBiv", 2},
    FamilyInfo{FamilyId::chromatic, "chromatic", 1},
    FamilyInfo{FamilyId::tutte, "tutte", 2},
    FamilyInfo{FamilyId::independence, "independence", 1},
    FamilyInfo{FamilyId::clique, "clique", 1},
    FamilyInfo{FamilyId::vertexCover, "vertexCover", 1},
    FamilyInfo{FamilyId::domination, "domination", 1},
    FamilyInfo{FamilyId::edgeCover, "edgeCover", 1},
};

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : kFamilyInfo) {
    if (f.id == id) return f;
  }
  throw DomainError("unknown family id");
}

}  // namespace

std::string_view family_name(FamilyId id) { return info(id).name; }

FamilyId family_from_name(std::string_view name) {
  for (const auto& f : kFamilyInfo) {
    if (f.name == name) return f.id;
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::size_t family_arity(FamilyId id) { return info(id).arity; }

std::vector<FamilyId> univariate_families() {
  std::vector<FamilyId> out;
  for (const auto& f : kFamilyInfo) {
    if (f.arity == 1) out.push_back(f.id);
  }
  return out;
}

std::string to_string(const PolyValue& value) {
  return std::visit([](const auto& p) { return p.to_string(); }, value);
}

std::optional<Rational> evaluate(const PolyValue& value, std::span<const Rational> point) {
  if (const auto* p = std::get_if<IntPoly>(&value)) {
    if (point.size() != 1) throw DomainError("univariate polynomial evaluated at a point of arity " + std::to_string(point.size()));
    return evaluate(*p, point[0]);
  }
  return std::get<MultiPoly>(value).evaluate(point);
}

const IntPoly& as_univariate(const PolyValue& value) {
  const auto* p = std::get_if<IntPoly>(&value);
  if (p == nullptr) throw DomainError("expected a univariate polynomial");
  return *p;
}

// ---------------------------------------------------------------------------
// Matchings

std::vector<Integer> matching_counts(const Graph& g) {
  if (g.n() > 64) throw SizeCapError("matching_counts supports n <= 64");
  const auto adj = g.adjacency_masks();
  std::unordered_map<std::uint64_t, std::vector<Integer>> memo;
  // Polynomial in the number of matched edges over the vertex set `s`.
  std::function<const std::vector<Integer>&(std::uint64_t)> rec = [&](std::uint64_t s) -> const std::vector<Integer>& {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::vector<Integer> out{1};
    if (s != 0) {
      const int v = std::countr_zero(s);
      const std::uint64_t rest = s & ~(std::uint64_t{1} << v);
      out = rec(rest);
      std::uint64_t nb = adj[static_cast<std::size_t>(v)] & rest;
      while (nb != 0) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        const auto& sub = rec(rest & ~(std::uint64_t{1} << u));
        if (out.size() < sub.size() + 1) out.resize(sub.size() + 1);
        for (std::size_t i = 0; i < sub.size(); ++i) out[i + 1] += sub[i];
      }
    }
    return memo.emplace(s, std::move(out)).first->second;
  };
  const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  return rec(all);
}

PolyValue matching_poly(const Graph& g, MatchingVariant variant) {
  const auto counts = matching_counts(g);
  const std::size_t n = g.n();
  switch (variant) {
    case MatchingVariant::generating:
      return IntPoly(counts);
    case MatchingVariant::defect: {
      std::vector<Integer> c(n + 1);
      for (std::size_t i = 0; i < counts.size(); ++i) c[n - 2 * i] = (i % 2 == 0) ? counts[i] : Integer(-counts[i]);
      return IntPoly(std::move(c));
    }
    case MatchingVariant::bivariate: {
      MultiPoly out(2);
      for (std::size_t i = 0; i < counts.size(); ++i) {
        out.add_term({static_cast<int>(i), static_cast<int>(n - 2 * i)}, counts[i]);
      }
      return out;
    }
  }
  throw DomainError("unknown matching variant");
}

// ---------------------------------------------------------------------------
// Chromatic polynomial

std::optional<IntPoly> ChromaticCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void ChromaticCache::insert(const std::string& key, const IntPoly& value) {
  std::lock_guard lock(mutex_);
  table_.emplace(key, value);
}

std::size_t ChromaticCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

namespace {

IntPoly falling_factorial_poly(std::size_t n) {
  IntPoly out = IntPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i) out *= IntPoly({-static_cast<long>(i), 1});
  return out;
}

IntPoly power_of(const IntPoly& base, std::size_t e) {
  IntPoly out = IntPoly::constant(1);
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

// Identifies v with u and drops v; parallel edges collapse.
Graph contract(const Graph& g, Vertex u, Vertex v) {
  auto map = [&](Vertex x) -> Vertex {
    if (x == v) x = u;
    return x > v ? x - 1 : x;
  };
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    Vertex x = map(a);
    Vertex y = map(b);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    edges.emplace_back(x, y);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(g.n() - 1, std::move(edges));
}

Graph without_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const auto& x : g.edges()) {
    if (x != e) edges.push_back(x);
  }
  return Graph(g.n(), std::move(edges));
}

Graph with_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph(g.n(), std::move(edges));
}

std::vector<Graph> components_of(const Graph& g) {
  auto labels = component_labels(g);
  const std::size_t k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<Vertex>> members(k);
  for (std::size_t v = 0; v < g.n(); ++v) members[labels[v]].push_back(static_cast<Vertex>(v));
  std::vector<Graph> out;
  out.reserve(k);
  for (const auto& mem : members) out.push_back(induced_subgraph(g, mem));
  return out;
}

IntPoly chromatic_rec(const Graph& g, ChromaticCache& cache) {
  const std::size_t n = g.n();
  const std::size_t m = g.m();
  const IntPoly x = IntPoly::x();
  if (m == 0) return IntPoly::monomial(1, n);
  if (m == n * (n - 1) / 2) return falling_factorial_poly(n);
  const std::size_t k = component_count(g);
  if (m + k == n) return IntPoly::monomial(1, k) * power_of(IntPoly({-1, 1}), n - k);
  if (k > 1) {
    IntPoly out = IntPoly::constant(1);
    for (const auto& c : components_of(g)) out *= chromatic_rec(c, cache);
    return out;
  }
  auto code = canonical_form(g);
  std::string key(code.begin(), code.end());
  if (auto hit = cache.find(key)) return *hit;

  IntPoly result;
  auto deg = g.degrees();
  if (2 * m > n * (n - 1) / 2) {
    // Dense: P(G) = P(G + uv) + P(G / uv) for a non-edge uv.
    Edge pick{0, 0};
    std::size_t best = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        std::size_t score = deg[u] + deg[v] + 1;
        if (score > best) {
          best = score;
          pick = {u, v};
        }
      }
    }
    result = chromatic_rec(with_edge(g, pick), cache) + chromatic_rec(contract(g, pick.first, pick.second), cache);
  } else {
    // Sparse: P(G) = P(G - e) - P(G / e), e at a maximum-degree vertex.
    Vertex u = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
    Edge pick{0, 0};
    std::size_t best = 0;
    for (const auto& e : g.edges()) {
      if (e.first != u && e.second != u) continue;
      Vertex other = e.first == u ? e.second : e.first;
      if (deg[other] + 1 > best) {
        best = deg[other] + 1;
        pick = e;
      }
    }
    result = chromatic_rec(without_edge(g, pick), cache) - chromatic_rec(contract(g, pick.first, pick.second), cache);
  }
  cache.insert(key, result);
  return result;
}

}  // namespace

IntPoly chromatic_poly(const Graph& g, ChromaticCache* cache) {
  if (g.n() > kChromaticMaxVertices) {
    throw SizeCapError("chromatic_poly supports n <= " + std::to_string(kChromaticMaxVertices));
  }
  ChromaticCache local;
  return chromatic_rec(g, cache != nullptr ? *cache : local);
}

// ---------------------------------------------------------------------------
// Subset-counting polynomials

namespace {

void check_bits(std::size_t bits, const char* what) {
  if (bits > kSubsetMaxBits) {
    throw SizeCapError(std::string(what) + " enumerates 2^" + std::to_string(bits) + " subsets; cap is 2^" +
                       std::to_string(kSubsetMaxBits));
  }
}

IntPoly from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<Integer> c;
  c.reserve(counts.size());
  for (auto x : counts) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly subset_counting_poly(const Graph& g, SubsetFamily family) {
  const std::size_t n = g.n();
  if (family == SubsetFamily::edgeCover) {
    const std::size_t m = g.m();
    check_bits(m, "edgeCover");
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> counts(m + 1, 0);
    std::vector<std::uint64_t> edge_mask(m);
    for (std::size_t i = 0; i < m; ++i) {
      edge_mask[i] = (std::uint64_t{1} << g.edges()[i].first) | (std::uint64_t{1} << g.edges()[i].second);
    }
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
      std::uint64_t covered = 0;
      for (std::uint64_t t = s; t != 0; t &= t - 1) covered |= edge_mask[static_cast<std::size_t>(std::countr_zero(t))];
      if (covered == full) ++counts[static_cast<std::size_t>(std::popcount(s))];
    }
    return from_counts(counts);
  }

  check_bits(n, "vertex subset family");
  const auto adj = g.adjacency_masks();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 0; s <= full; ++s) {
    bool ok = true;
    switch (family) {
      case SubsetFamily::independence:
        for (std::uint64_t t = s; t != 0 && ok; t &= t - 1) ok = (adj[static_cast<std::size_t>(std::countr_zero(t))] & s) == 0;
        break;
      case SubsetFamily::clique:
        for (std::uint64_t t = s; t != 0 && ok; t &= t - 1) {
          const int v = std::countr_zero(t);
          const std::uint64_t others = s & ~(std::uint64_t{1} << v);
          ok = (adj[static_cast<std::size_t>(v)] & others) == others;
        }
        break;
      case SubsetFamily::vertexCover:
        for (const auto& [u, v] : g.edges()) {
          if (((s >> u) & 1U) == 0 && ((s >> v) & 1U) == 0) {
            ok = false;
            break;
          }
        }
        break;
      case SubsetFamily::domination: {
        std::uint64_t closed = s;
        for (std::uint64_t t = s; t != 0; t &= t - 1) closed |= adj[static_cast<std::size_t>(std::countr_zero(t))];
        ok = closed == full;
        break;
      }
      case SubsetFamily::edgeCover:
        break;
    }
    if (ok) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  return from_counts(counts);
}

PolyValue compute_family(FamilyId id, const Graph& g, ChromaticCache* cache) {
  switch (id) {
    case FamilyId::charA:
      return char_poly(g, MatrixKind::adjacency);
    case FamilyId::charL:
      return char_poly(g, MatrixKind::laplacian);
    case FamilyId::charCycle:
      return char_poly(g, MatrixKind::cycle);
    case FamilyId::matchingDefect:
      return matching_poly(g, MatchingVariant::defect);
    case FamilyId::matchingGen:
      return matching_poly(g, MatchingVariant::generating);
    case FamilyId::matchingBiv:
      return matching_poly(g, MatchingVariant::bivariate);
    case FamilyId::chromatic:
      return chromatic_poly(g, cache);
    case FamilyId::tutte:
      return tutte_poly(g);
    case FamilyId::independence:
      return subset_counting_poly(g, SubsetFamily::independence);
    case FamilyId::clique:
      return subset_counting_poly(g, SubsetFamily::clique);
    case FamilyId::vertexCover:
      return subset_counting_poly(g, SubsetFamily::vertexCover);
    case FamilyId::domination:
      return subset_counting_poly(g, SubsetFamily::domination);
    case FamilyId::edgeCover:
      return subset_counting_poly(g, SubsetFamily::edgeCover);
  }
  throw DomainError("unknown family id");
}

CatalogIdentityReport catalog_identities(const Graph& g) {
  CatalogIdentityReport r;
  r.independence = subset_counting_poly(g, SubsetFamily::independence);
  r.clique = subset_counting_poly(g, SubsetFamily::clique);
  r.independence_of_complement = subset_counting_poly(complement(g), SubsetFamily::independence);
  r.vertex_cover = subset_counting_poly(g, SubsetFamily::vertexCover);
  r.reversed_independence = reverse_coefficients(r.independence, g.n());
  r.clique_matches = r.clique == r.independence_of_complement;
  r.vertex_cover_matches = r.vertex_cover == r.reversed_independence;
  return r;
}

namespace {

// Determinant of the Laplacian with the last row and column removed.
Integer reduced_laplacian_det(const Graph& c) {
  if (c.n() == 1) return 1;
  IntMatrix l = laplacian_matrix(c);
  IntMatrix reduced(c.n() - 1);
  for (std::size_t i = 0; i + 1 < c.n(); ++i) {
    for (std::size_t j = 0; j + 1 < c.n(); ++j) reduced(i, j) = l(i, j);
  }
  IntPoly cp = characteristic_polynomial(reduced);
  Integer det = cp.coefficient(0);
  if ((c.n() - 1) % 2 == 1) det = -det;
  return det;
}

}  // namespace

Integer spanning_forest_count(const Graph& g) {
  Integer out = 1;
  for (const auto& c : components_of(g)) out *= reduced_laplacian_det(c);
  return out;
}

Integer spanning_trees_from_laplacian(const IntPoly& char_laplacian, std::size_t n) {
  // For connected G: coefficient of X is (-1)^(n-1) * n * tau(G).
  Integer c1 = abs(char_laplacian.coefficient(1));
  if (!mpz_divisible_ui_p(c1.get_mpz_t(), static_cast<unsigned long>(n))) {
    throw Error("spanning_trees_from_laplacian: coefficient not divisible by n");
  }
  mpz_divexact_ui(c1.get_mpz_t(), c1.get_mpz_t(), static_cast<unsigned long>(n));
  return c1;
}

}  // namespace grpoly
