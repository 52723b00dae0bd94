#pragma once

/// \file poly.hpp
/// \brief Exact polynomial arithmetic over arbitrary-precision integers and rationals.
///
/// IntPoly is a dense univariate polynomial with mpz coefficients stored in
/// ascending degree. It carries a basis tag (power, falling factorial or
/// binomial); ring operations are only defined on power-basis values.
/// RatPoly is the rational counterpart used by Sturm chains and root remapping.
/// MultiPoly is a sparse multivariate (Laurent) polynomial in at most five
/// indeterminates.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grpoly/error.hpp"

namespace grpoly {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Basis { power, falling_factorial, binomial };

std::string to_string(Basis basis);
Basis basis_from_string(const std::string& name);

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs, Basis basis = Basis::power);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  /// The indeterminate X.
  static IntPoly x();

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Basis basis() const { return basis_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of X^i, zero past the degree.
  Integer coefficient(std::size_t i) const;
  const Integer& leading() const;
  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& rhs);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const Integer& rhs) { return lhs *= rhs; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  IntPoly derivative() const;
  /// Multiplication by X^k.
  IntPoly shifted(std::size_t k) const;
  /// Human-readable form, e.g. "X^3 - 3*X^2 + 2*X".
  std::string to_string(const std::string& var = "X") const;

 private:
  void normalize();
  void require_power(const IntPoly& other, const char* op) const;

  std::vector<Integer> coeffs_;
  Basis basis_ = Basis::power;
};

enum class ArithOp { add, sub, mul };

IntPoly arith(const IntPoly& a, const IntPoly& b, ArithOp op);

/// Composition p(inner(X)).
IntPoly substitute(const IntPoly& p, const IntPoly& inner);

/// Rewrites p in another coefficient basis; the value as a function is unchanged.
IntPoly convert_basis(const IntPoly& p, Basis target);

/// Root with multiplicity, possibly rational.
struct RootMultiplicity {
  Rational root;
  std::size_t multiplicity = 1;
};

/// Product of (den*X - num)^mult over the given roots; monic when all roots are integers.
IntPoly from_roots(std::span<const RootMultiplicity> roots);

Integer evaluate(const IntPoly& p, const Integer& x);
Rational evaluate(const IntPoly& p, const Rational& x);
std::complex<double> evaluate(const IntPoly& p, std::complex<double> z);
std::complex<long double> evaluate(const IntPoly& p, std::complex<long double> z);

/// X^d * p(1/X): coefficient i moves to d - i.
IntPoly reverse_coefficients(const IntPoly& p, std::size_t d);

/// Maximum of |c_i| over i < degree (0 for constants).
Integer max_lower_abs(const IntPoly& p);

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coefficient(std::size_t i) const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& s);
  RatPoly operator-() const;
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  /// Euclidean division; throws on a zero divisor.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  Rational evaluate(const Rational& x) const;

  /// Primitive integer multiple with positive leading coefficient.
  IntPoly to_primitive_int() const;
  std::string to_string(const std::string& var = "X") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

RatPoly gcd(RatPoly a, RatPoly b);
RatPoly substitute(const RatPoly& p, const RatPoly& inner);

/// Exponent vector; negative entries allowed (Laurent monomials).
using Exponents = std::vector<int>;

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t arity) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const Integer& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);
  /// Embeds a univariate polynomial in variable `index`.
  static MultiPoly from_univariate(std::size_t arity, std::size_t index, const IntPoly& p);

  std::size_t arity() const { return arity_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Integer& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned e) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  /// Exact evaluation; nullopt when a negative power meets a zero coordinate.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;
  /// Total degree of the polynomial part (max over terms of the exponent sum).
  int total_degree() const;
  bool is_laurent() const;
  /// Univariate view in variable `index`; throws if other variables occur.
  IntPoly to_univariate(std::size_t index = 0) const;
  std::string to_string() const;

 private:
  void check_arity(const MultiPoly& other) const;
  std::size_t arity_ = 0;
  std::map<Exponents, Integer> terms_;
};

}  // namespace grpoly
