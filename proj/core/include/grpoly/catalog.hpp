#pragma once

/// \file catalog.hpp
/// \brief The catalog of graph polynomials, computed exactly.

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "grpoly/graph.hpp"
#include "grpoly/matrix.hpp"
#include "grpoly/poly.hpp"

namespace grpoly {

enum class FamilyId {
  charA,
  charL,
  charCycle,
  matchingDefect,
  matchingGen,
  matchingBiv,
  chromatic,
  tutte,
  independence,
  clique,
  vertexCover,
  domination,
  edgeCover,
};

inline constexpr std::array kAllFamilies = {
    FamilyId::charA,        FamilyId::charL,      FamilyId::charCycle,   FamilyId::matchingDefect,
    FamilyId::matchingGen,  FamilyId::matchingBiv, FamilyId::chromatic,  FamilyId::tutte,
    FamilyId::independence, FamilyId::clique,     FamilyId::vertexCover, FamilyId::domination,
    FamilyId::edgeCover,
};

/// Stable identifier used on the command line and in JSON.
std::string_view family_name(FamilyId id);
FamilyId family_from_name(std::string_view name);
/// Number of indeterminates (1 or 2).
std::size_t family_arity(FamilyId id);
std::vector<FamilyId> univariate_families();

/// Value of a graph polynomial: univariate or multivariate.
using PolyValue = std::variant<IntPoly, MultiPoly>;

std::string to_string(const PolyValue& value);
/// Exact value at a point of the family's arity; nullopt only for Laurent poles.
std::optional<Rational> evaluate(const PolyValue& value, std::span<const Rational> point);
const IntPoly& as_univariate(const PolyValue& value);

/// m_0, m_1, ...: number of matchings of each size (m_0 = 1).
std::vector<Integer> matching_counts(const Graph& g);

enum class MatchingVariant { defect, generating, bivariate };

/// defect: sum (-1)^i m_i X^(n-2i); generating: sum m_i X^i;
/// bivariate (arity 2): sum m_i X^i Y^(n-2i).
PolyValue matching_poly(const Graph& g, MatchingVariant variant);

/// Memo table for chromatic deletion-contraction keyed on canonical forms.
/// Lookups and inserts are mutex-guarded so one cache may be shared between
/// worker threads; results do not depend on sharing.
class ChromaticCache {
 public:
  std::optional<IntPoly> find(const std::string& key) const;
  void insert(const std::string& key, const IntPoly& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, IntPoly> table_;
};

inline constexpr std::size_t kChromaticMaxVertices = 10;
inline constexpr std::size_t kTutteMaxVertices = 9;
inline constexpr std::size_t kSubsetMaxBits = 24;

/// Chromatic polynomial by deletion-contraction with canonical-form memoization.
/// Uses a private cache when none is supplied.
IntPoly chromatic_poly(const Graph& g, ChromaticCache* cache = nullptr);

/// Tutte polynomial T(G; X1, X2) by deletion-contraction over multigraph
/// intermediates, memoized on canonical forms of the weighted adjacency.
MultiPoly tutte_poly(const Graph& g);

enum class SubsetFamily { independence, clique, vertexCover, domination, edgeCover };

/// Coefficient i counts the qualifying subsets of size i (vertex subsets, or
/// edge subsets for edge covers), empty set included when it qualifies.
IntPoly subset_counting_poly(const Graph& g, SubsetFamily family);

/// Computes one catalog family.
PolyValue compute_family(FamilyId id, const Graph& g, ChromaticCache* cache = nullptr);

struct CatalogIdentityReport {
  IntPoly independence;
  IntPoly clique;
  IntPoly independence_of_complement;
  IntPoly vertex_cover;
  IntPoly reversed_independence;
  bool clique_matches = false;
  bool vertex_cover_matches = false;
  bool ok() const { return clique_matches && vertex_cover_matches; }
};

/// Checks Cl(G) = In(complement G) and Vc(G) = X^n In(G; 1/X).
CatalogIdentityReport catalog_identities(const Graph& g);

/// Number of maximal spanning forests (product of per-component spanning tree counts), by Kirchhoff.
Integer spanning_forest_count(const Graph& g);

/// For connected g: spanning tree count read off charL as |coefficient of X| / n.
Integer spanning_trees_from_laplacian(const IntPoly& char_laplacian, std::size_t n);

struct UniversalTutteCheck {
  bool holds = false;
  Rational stored_value;
  Rational prefactor_value;
};

/// Evaluates the universal Tutte polynomial
///   U(G;X,Y,U,V,W) = U^k V^nu W^rho T(G; U X / W, Y / U)
/// two ways at an exact point (X, Y, U, V, W): from its stored Laurent
/// expansion, and through the prefactor-reduction verifier applied to T.
/// Throws DomainError when U or W is zero.
UniversalTutteCheck universal_tutte_check(const Graph& g, std::span<const Rational> point);

/// Laurent expansion of U(G;X,Y,U,V,W) in five variables.
MultiPoly universal_tutte_poly(const Graph& g);

}  // namespace grpoly
