#pragma once

/// \file transforms.hpp
/// \brief Root-relocating transformations of graph polynomials.
///
/// Each transform maps one coefficient sequence to another in a way that can
/// be undone from the similarity triple (and recorded parameters) alone, so
/// the transformed family separates exactly the same similar graphs.

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grpoly/graph.hpp"
#include "grpoly/poly.hpp"

namespace grpoly {

/// P(-X).
IntPoly negate_variable(const IntPoly& p);
/// P(X^2).
IntPoly square_variable(const IntPoly& p);
/// Inverse of square_variable; throws DomainError when an odd coefficient is nonzero.
IntPoly unsquare_variable(const IntPoly& p);

/// Non-negative encoding of a signed coefficient sequence: h_i >= 0 goes to
/// slot 2i, h_i < 0 goes to slot 2i+1 as |h_i|.
IntPoly interleave_nonneg(const IntPoly& p);
/// Inverse of interleave_nonneg: h_i = g_{2i} - g_{2i+1}. Throws DomainError
/// on a negative entry or when both slots of a pair are nonzero.
IntPoly deinterleave(const IntPoly& g);

/// prod_{i=0}^{s} (X - i)^(h_i + 1). Requires non-negative coefficients and s >= deg p.
IntPoly realify(const IntPoly& p, std::size_t s);
/// Reads h_i = mult(i) - 1 back from a realified polynomial.
IntPoly recover_coefficients(const IntPoly& q, std::size_t s);

/// prod_{i=0}^{deg p} (X - h_i). Only the multiset of coefficients is recoverable.
IntPoly realify_rootencode(const IntPoly& p);

enum class PrefactorSign { plus, minus };

/// (kX - n)(nX - k) for plus, (kX + n)(nX + k) for minus.
IntPoly dense_real_prefactor(const SimilarityTriple& t, PrefactorSign sign);

/// right: roots (a +- bi)/c in the right half plane; left: their mirror images.
enum class QuadrantHalf { right, left };

/// c^2 X^2 -+ 2acX + (a^2 + b^2).
IntPoly quadrant_factor(const Integer& a, const Integer& b, const Integer& c, QuadrantHalf half);
/// Product of quadrant_factor over the six assignments of (n, m, k) to (a, b, c).
IntPoly quadrant_prefactor(const SimilarityTriple& t, QuadrantHalf half);

/// Both quadrant halves multiplied together, or 1 when some triple component is zero.
IntPoly complex_density_prefactor(const SimilarityTriple& t);

enum class DensifyMode { complex, real_positive };
IntPoly densify(const IntPoly& p, const SimilarityTriple& t, DensifyMode mode);

struct DensityWitness {
  Integer a;
  Integer b;
  Integer c;
  /// (V, E, k) before scaling: max -> E, min -> k, middle -> V.
  SimilarityTriple unscaled;
  /// 1 when no scaling was needed, else 2E.
  Integer scale;
  SimilarityTriple triple;
  Graph graph;
  /// Squared distance |(a+bi)/c - target|^2, exact.
  Rational distance_squared;
  /// quadrant_prefactor(triple, right) vanishes exactly at (a+bi)/c.
  bool exact_zero = false;
  /// |Q(z)| / sum |q_i||z|^i in floating point.
  double residual = 0.0;
};

inline constexpr std::size_t kDensityMaxVertices = 1000000;

/// Finds pairwise-distinct positive integers a, b, c with (a+bi)/c within eps
/// of the target, smallest c first, then smallest distance, then smallest
/// (a, b). Throws DomainError for targets off the open first quadrant or
/// eps <= 0, SizeCapError when the witness graph would exceed kDensityMaxVertices.
DensityWitness density_witness(const Rational& re, const Rational& im, const Rational& eps);

/// Exact value of p at the Gaussian rational re + im*i.
std::pair<Rational, Rational> evaluate_gaussian(const IntPoly& p, const Rational& re, const Rational& im);

/// P(A X); requires A >= 1, A >= max_{i<d} |h_i| and a positive leading coefficient.
IntPoly rouche_scale(const IntPoly& p, const Integer& a);
/// Inverse of rouche_scale: P(X / A) with exact division of each coefficient.
IntPoly rouche_unscale(const IntPoly& q, const Integer& a);

/// rouche_scale with A = n^r after checking |h_i| <= n^r for every coefficient.
IntPoly scale_for_graph(const IntPoly& p, const SimilarityTriple& t, unsigned r);

/// p((X - beta) / alpha) scaled to a primitive integer polynomial with positive
/// leading coefficient; its roots are alpha*z + beta for the roots z of p.
RatPoly remap_roots(const IntPoly& p, const Rational& alpha, const Rational& beta);

/// Output coefficient i is input coefficient perm[i]; perm must be a
/// permutation of 0..s with s >= deg p.
IntPoly permute_coefficients(const IntPoly& p, const std::vector<std::size_t>& perm);
std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& perm);

// ---------------------------------------------------------------------------
// Named transforms for pipelines

struct TransformStep {
  std::string name;
  std::map<std::string, std::string> params;
};

struct TransformRecord {
  std::string transform;
  std::map<std::string, std::string> params;
  IntPoly input;
  IntPoly output;
  std::map<std::string, std::string> inverse_data;
};

/// Names: negate, square, interleave, deinterleave, realify[s], recover[s],
/// rootencode, densify[mode=complex|real], rouche[A], scale[r], remap[alpha,beta],
/// permute[perm=i/j/...].
std::vector<std::string> transform_names();

/// "name:key=value:key=value,name2,..."
std::vector<TransformStep> parse_transform_chain(const std::string& text);

TransformRecord apply_transform(const IntPoly& p, const TransformStep& step, const SimilarityTriple& t);

/// Reconstructs the input of an invertible record; nullopt for rootencode.
std::optional<IntPoly> invert_transform(const TransformRecord& record, const SimilarityTriple& t);

}  // namespace grpoly
