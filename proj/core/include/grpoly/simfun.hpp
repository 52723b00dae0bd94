#pragma once

/// \file simfun.hpp
/// \brief Similarity-function expressions and the prefactor-reduction verifier.
///
/// Grammar (whitespace ignored):
///
///     expr     := term (('+' | '-') term)*
///     term     := unary (('*' | '/') unary)*
///     unary    := '-' unary | power
///     power    := atom ('^' exponent)?
///     atom     := INT | 'n' | 'm' | 'k' | 'nu' | 'rho' | 'X1'..'X5' | '(' expr ')'
///     exponent := ['-'] INT | 'n' | 'm' | 'k' | 'nu' | 'rho' | '(' expr ')'
///
/// A parenthesized exponent must be free of indeterminates. Division and
/// negative exponents produce rational similarity functions; they are
/// evaluated exactly at points and as Laurent polynomials when the divisor is
/// a monomial.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grpoly/catalog.hpp"
#include "grpoly/graph.hpp"
#include "grpoly/poly.hpp"

namespace grpoly {

inline constexpr std::size_t kMaxIndeterminates = 5;

class SimExpr {
 public:
  enum class Kind { integer, symbol, indeterminate, add, sub, mul, div, neg, pow, group };
  enum class Symbol { n, m, k, nu, rho };

  struct Node;

  SimExpr() = default;
  explicit SimExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  const Node& root() const;
  bool empty() const { return root_ == nullptr; }

  /// Largest indeterminate index used (1-based), 0 when none.
  std::size_t max_indeterminate() const;
  bool has_indeterminates() const { return max_indeterminate() != 0; }

 private:
  std::shared_ptr<const Node> root_;
};

struct SimExpr::Node {
  Kind kind = Kind::integer;
  Integer value;         // integer literal
  Symbol symbol{};       // symbol
  std::size_t index = 0; // indeterminate, 1-based
  std::shared_ptr<const Node> lhs;  // unary operand / base / left
  std::shared_ptr<const Node> rhs;  // right / exponent
};

/// Throws ParseError (with byte offset) on syntax errors and on indeterminates in exponents.
SimExpr parse_simexpr(std::string_view text);

/// Canonical spelling; equals the input with whitespace removed.
std::string to_string(const SimExpr& e);

Integer symbol_value(SimExpr::Symbol s, const SimilarityTriple& t);

/// Exact value of an indeterminate-free expression (an integer or rational).
/// Throws DomainError on division by zero.
Rational eval_constant(const SimExpr& e, const SimilarityTriple& t);

/// Evaluates to a (Laurent) polynomial with integer coefficients in X1..X_arity.
/// Throws DomainError when the result is not such a polynomial, for example when
/// dividing by a non-monomial.
MultiPoly eval_simexpr(const SimExpr& e, const SimilarityTriple& t, std::size_t arity = kMaxIndeterminates);

/// Univariate convenience: the expression must use at most X1.
IntPoly eval_simexpr_univariate(const SimExpr& e, const SimilarityTriple& t);

/// Exact value at a point; nullopt when a division by zero occurs.
std::optional<Rational> eval_at(const SimExpr& e, const SimilarityTriple& t, std::span<const Rational> point);

/// Degree bound for the expression written as one fraction: both numerator and
/// denominator have total degree at most this value.
std::size_t height(const SimExpr& e, const SimilarityTriple& t);

struct ReductionSpec {
  FamilyId family_p = FamilyId::charA;
  FamilyId family_q = FamilyId::charA;
  std::string prefactor = "1";
  std::vector<std::string> subs;
};

/// Family values used by the verifier; the default computes catalog families.
using FamilyEvaluator = std::function<PolyValue(FamilyId, const Graph&)>;

enum class VerdictStatus { pass, fail, inconclusive };
std::string_view to_string(VerdictStatus s);

struct ReductionCounterexample {
  std::string graph6;
  std::vector<Rational> point;
  Rational lhs;
  Rational rhs;
};

struct ReductionVerdict {
  VerdictStatus status = VerdictStatus::pass;
  /// True when the number of non-pole points checked per graph exceeded the
  /// degree bound, which makes a PASS a proof for the corpus. Only univariate
  /// P can be certified this way.
  bool certified = false;
  std::size_t graphs_checked = 0;
  std::size_t points_checked = 0;
  std::optional<ReductionCounterexample> counterexample;
  /// Graph6 of the first graph lacking enough non-pole points (inconclusive only).
  std::string inconclusive_graph;
};

/// Right-hand side f(G;X) * Q(G; g_1(G;X), ...) at one point; nullopt at a pole.
std::optional<Rational> reduction_rhs(const PolyValue& q_value, const SimilarityTriple& t, const SimExpr& prefactor,
                                      std::span<const SimExpr> subs, std::span<const Rational> point);

/// Number of non-pole points per graph that turns agreement into an identity
/// (univariate P), or the number sampled otherwise.
std::size_t required_points(const PolyValue& p_value, const PolyValue& q_value, const SimilarityTriple& t,
                            const SimExpr& prefactor, std::span<const SimExpr> subs);

/// Checks P(G;X) = f(G;X) * Q(G; g(G;X)) on every graph of the corpus.
///
/// Sample points come from a fixed deterministic sequence unless `points` is
/// non-empty, in which case only those points are used. Per graph the verifier
/// needs required_points() non-pole points; fewer gives INCONCLUSIVE.
/// The first counterexample in corpus order is reported. `threads` = 0 picks
/// the default worker count.
ReductionVerdict verify_prefactor_reduction(const ReductionSpec& spec, std::span<const Graph> corpus,
                                            std::span<const std::vector<Rational>> points = {},
                                            const FamilyEvaluator& evaluator = {}, std::size_t threads = 0);

std::string to_json(const ReductionSpec& spec);
ReductionSpec reduction_spec_from_json(std::string_view json);

}  // namespace grpoly
