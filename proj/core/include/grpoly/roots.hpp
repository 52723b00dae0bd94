#pragma once

/// \file roots.hpp
/// \brief Exact real-root counting, integer roots and numeric complex roots.

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "grpoly/poly.hpp"

namespace grpoly {

/// Half-open interval (lo, hi]; a missing endpoint is infinite.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

/// Squarefree decomposition p = c * prod_i f_i^i (Yun); factors are monic.
std::vector<std::pair<RatPoly, std::size_t>> squarefree_decomposition(const IntPoly& p);

/// p / gcd(p, p'), monic.
RatPoly squarefree_part(const IntPoly& p);

/// Number of distinct real roots in the interval. Throws DomainError for p = 0.
std::size_t sturm_count(const IntPoly& p, const Interval& interval = {});

/// Real roots in the interval counted with multiplicity.
std::size_t sturm_count_with_multiplicity(const IntPoly& p, const Interval& interval = {});

/// True when every complex root is real. Nonzero constants count as real-rooted.
bool is_real_rooted(const IntPoly& p);

struct SignProfile {
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;
  friend bool operator==(const SignProfile&, const SignProfile&) = default;
};

/// Distinct real roots on (-inf, 0), at 0 and on (0, inf).
SignProfile sign_profile(const IntPoly& p);
SignProfile sign_profile_with_multiplicity(const IntPoly& p);

/// Integer roots with multiplicities, ascending. Throws DomainError for p = 0.
std::map<Integer, std::size_t> integer_roots(const IntPoly& p);

/// 1 + max_{i<d} |h_i| / |h_d|. Throws DomainError for p = 0.
Rational rouche_bound(const IntPoly& p);

struct NumericRoot {
  std::complex<double> z;
  /// |p(z)| / sum_i |h_i| |z|^i
  double residual = 0.0;
  double modulus() const { return std::abs(z); }
};

inline constexpr double kDefaultResidualTolerance = 1e-9;

/// All complex roots with multiplicity (degree-many), sorted by real then
/// imaginary part. Zero roots are exact. Each squarefree factor is solved by
/// Aberth-Ehrlich iteration in extended precision from fixed start points.
/// Throws ConvergenceError when a residual stays above `tol` after the
/// iteration cap, DomainError for constants.
std::vector<NumericRoot> complex_roots(const IntPoly& p, double tol = kDefaultResidualTolerance);

struct RootReport {
  int degree = 0;
  SignProfile distinct;
  SignProfile with_multiplicity;
  bool real_rooted = false;
  std::map<Integer, std::size_t> integer_roots;
  std::vector<NumericRoot> roots;
  Rational rouche_bound;
  double max_modulus = 0.0;
};

RootReport root_report(const IntPoly& p, double tol = kDefaultResidualTolerance);

/// Fixed 12-decimal rendering with "-0" folded to "0".
std::string format_fixed(double x);

/// CSV columns: re,im,modulus,graph6,family.
std::string scatter_csv_header();
void write_scatter_rows(std::ostream& out, const std::vector<NumericRoot>& roots, const std::string& graph6,
                        const std::string& family);

}  // namespace grpoly
