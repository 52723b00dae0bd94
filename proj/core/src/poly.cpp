#include "grpoly/poly.hpp"

#include <algorithm>
#include <sstream>

namespace grpoly {

std::string to_string(Basis basis) {
  switch (basis) {
    case Basis::power:
      return "power";
    case Basis::falling_factorial:
      return "falling";
    case Basis::binomial:
      return "binomial";
  }
  return "power";
}

Basis basis_from_string(const std::string& name) {
  if (name == "power") return Basis::power;
  if (name == "falling" || name == "falling-factorial") return Basis::falling_factorial;
  if (name == "binomial") return Basis::binomial;
  throw DomainError("unknown basis '" + name + "'");
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs, Basis basis)
    : coeffs_(std::move(coeffs)), basis_(basis) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void IntPoly::require_power(const IntPoly& other, const char* op) const {
  if (basis_ != Basis::power || other.basis_ != Basis::power) {
    throw DomainError(std::string("basis mismatch in ") + op + ": arithmetic needs power basis");
  }
}

Integer IntPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t IntPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return 0;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  require_power(rhs, "add");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  require_power(rhs, "sub");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

namespace {

// Below this length on the shorter side the schoolbook product wins.
constexpr std::size_t kKroneckerThreshold = 24;

std::size_t max_bits(const std::vector<Integer>& c) {
  std::size_t best = 0;
  for (const auto& x : c) best = std::max(best, mpz_sizeinbase(x.get_mpz_t(), 2));
  return best;
}

// sum of c[i] * 2^(bits * (i - lo)) for i in [lo, hi), split in halves so the
// work is quasi-linear in the total size.
Integer pack(const std::vector<Integer>& c, std::size_t lo, std::size_t hi, std::size_t bits) {
  if (hi - lo == 1) return c[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  Integer high = pack(c, mid, hi, bits);
  mpz_mul_2exp(high.get_mpz_t(), high.get_mpz_t(), bits * (mid - lo));
  return pack(c, lo, mid, bits) + high;
}

// Inverse of pack for digits in the balanced range (-2^(bits-1), 2^(bits-1)).
void unpack(Integer value, std::vector<Integer>& out, std::size_t lo, std::size_t hi, std::size_t bits) {
  if (hi - lo == 1) {
    out[lo] = std::move(value);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const std::size_t split = bits * (mid - lo);
  Integer low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), value.get_mpz_t(), split);
  if (mpz_sizeinbase(low.get_mpz_t(), 2) == split && low != 0) {
    Integer wrap;
    mpz_setbit(wrap.get_mpz_t(), split);
    low -= wrap;
  }
  value -= low;
  mpz_fdiv_q_2exp(value.get_mpz_t(), value.get_mpz_t(), split);
  unpack(std::move(low), out, lo, mid, bits);
  unpack(std::move(value), out, mid, hi, bits);
}

std::vector<Integer> kronecker_product(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  const std::size_t shorter = std::min(a.size(), b.size());
  // Each output digit is bounded by shorter * max|a| * max|b|; one extra bit for the sign.
  const std::size_t bits = max_bits(a) + max_bits(b) + mpz_sizeinbase(Integer(shorter).get_mpz_t(), 2) + 2;
  const Integer product = pack(a, 0, a.size(), bits) * pack(b, 0, b.size(), bits);
  std::vector<Integer> out(a.size() + b.size() - 1);
  unpack(product, out, 0, out.size(), bits);
  return out;
}

}  // namespace

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  lhs.require_power(rhs, "mul");
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (std::min(lhs.coeffs_.size(), rhs.coeffs_.size()) >= kKroneckerThreshold) {
    return IntPoly(kronecker_product(lhs.coeffs_, rhs.coeffs_));
  }
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly({}, basis_);
  if (basis_ != Basis::power) throw DomainError("derivative needs power basis");
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Integer> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out), basis_);
}

namespace {

std::string basis_symbol(Basis basis, const std::string& var, std::size_t i) {
  switch (basis) {
    case Basis::power:
      return i == 1 ? var : var + "^" + std::to_string(i);
    case Basis::falling_factorial:
      return var + "_(" + std::to_string(i) + ")";
    case Basis::binomial:
      return "C(" + var + "," + std::to_string(i) + ")";
  }
  return var;
}

template <typename Coeff, typename Symbol>
std::string format_terms(const std::vector<Coeff>& coeffs, Symbol symbol) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Coeff& c = coeffs[k];
    if (c == 0) continue;
    Coeff mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << symbol(k);
    }
  }
  return os.str();
}

}  // namespace

std::string IntPoly::to_string(const std::string& var) const {
  return format_terms(coeffs_, [&](std::size_t i) { return basis_symbol(basis_, var, i); });
}

IntPoly arith(const IntPoly& a, const IntPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  return {};
}

IntPoly substitute(const IntPoly& p, const IntPoly& inner) {
  if (p.basis() != Basis::power || inner.basis() != Basis::power) {
    throw DomainError("substitute needs power basis");
  }
  IntPoly result;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    result = result * inner + IntPoly::constant(p.coeffs()[k]);
  }
  return result;
}

namespace {

// Falling factorial X(X-1)...(X-k+1) in the power basis, for k = 0..d.
std::vector<IntPoly> falling_factorials(std::size_t d) {
  std::vector<IntPoly> out;
  out.reserve(d + 1);
  out.push_back(IntPoly::constant(1));
  for (std::size_t k = 1; k <= d; ++k) {
    out.push_back(out.back() * IntPoly({-static_cast<long>(k - 1), 1}));
  }
  return out;
}

IntPoly to_power(const IntPoly& p) {
  if (p.basis() == Basis::power) return p;
  if (p.is_zero()) return IntPoly();
  const std::size_t d = static_cast<std::size_t>(p.degree());
  auto ff = falling_factorials(d);
  std::vector<Rational> acc(d + 1);
  Integer factorial = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    Rational scale = p.basis() == Basis::binomial ? Rational(p.coeffs()[k], factorial)
                                                   : Rational(p.coeffs()[k]);
    scale.canonicalize();
    for (std::size_t j = 0; j < ff[k].coeffs().size(); ++j) acc[j] += scale * Rational(ff[k].coeffs()[j]);
  }
  std::vector<Integer> out(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    acc[j].canonicalize();
    if (acc[j].get_den() != 1) {
      throw DomainError("non-integral coefficient converting from binomial basis");
    }
    out[j] = acc[j].get_num();
  }
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly convert_basis(const IntPoly& p, Basis target) {
  IntPoly power = to_power(p);
  if (target == Basis::power || power.is_zero()) {
    return IntPoly(power.coeffs(), target);
  }
  const std::size_t d = static_cast<std::size_t>(power.degree());
  // Stirling numbers of the second kind: X^j = sum_k S(j,k) X_(k).
  std::vector<std::vector<Integer>> stirling(d + 1, std::vector<Integer>(d + 1));
  stirling[0][0] = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t k = 1; k <= j; ++k) {
      stirling[j][k] = stirling[j - 1][k - 1] + stirling[j - 1][k] * static_cast<unsigned long>(k);
    }
  }
  std::vector<Integer> falling(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    for (std::size_t k = 0; k <= j; ++k) falling[k] += power.coeffs()[j] * stirling[j][k];
  }
  if (target == Basis::falling_factorial) return IntPoly(std::move(falling), Basis::falling_factorial);
  Integer factorial = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    falling[k] *= factorial;
  }
  return IntPoly(std::move(falling), Basis::binomial);
}

namespace {

// (den X - num)^m from the binomial theorem.
IntPoly linear_power(const Integer& num, const Integer& den, std::size_t m) {
  std::vector<Integer> c(m + 1);
  // c[j] = C(m, j) den^j (-num)^(m-j), built from the top down.
  Integer neg = -num;
  Integer binom = 1;
  Integer den_pow;
  mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), m);
  std::vector<Integer> neg_pows(m + 1);
  neg_pows[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) neg_pows[i] = neg_pows[i - 1] * neg;
  for (std::size_t j = m + 1; j-- > 0;) {
    c[j] = binom * den_pow * neg_pows[m - j];
    if (j == 0) break;
    // C(m, j-1) = C(m, j) * j / (m - j + 1)
    binom *= static_cast<unsigned long>(j);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(m - j + 1));
    if (den != 1) mpz_divexact(den_pow.get_mpz_t(), den_pow.get_mpz_t(), den.get_mpz_t());
  }
  return IntPoly(std::move(c));
}

IntPoly product_tree(std::vector<IntPoly>& factors, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return std::move(factors[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  return product_tree(factors, lo, mid) * product_tree(factors, mid, hi);
}

}  // namespace

IntPoly from_roots(std::span<const RootMultiplicity> roots) {
  std::vector<IntPoly> factors;
  for (const auto& r : roots) {
    if (r.multiplicity == 0) continue;
    Rational q = r.root;
    q.canonicalize();
    factors.push_back(linear_power(q.get_num(), q.get_den(), r.multiplicity));
  }
  if (factors.empty()) return IntPoly::constant(1);
  return product_tree(factors, 0, factors.size());
}

namespace {
const IntPoly& as_power(const IntPoly& p, IntPoly& storage) {
  if (p.basis() == Basis::power) return p;
  storage = convert_basis(p, Basis::power);
  return storage;
}
}  // namespace

Integer evaluate(const IntPoly& p, const Integer& x) {
  IntPoly tmp;
  const IntPoly& q = as_power(p, tmp);
  Integer acc = 0;
  for (std::size_t k = q.coeffs().size(); k-- > 0;) acc = acc * x + q.coeffs()[k];
  return acc;
}

Rational evaluate(const IntPoly& p, const Rational& x) {
  IntPoly tmp;
  const IntPoly& q = as_power(p, tmp);
  Rational acc = 0;
  for (std::size_t k = q.coeffs().size(); k-- > 0;) {
    acc = acc * x + Rational(q.coeffs()[k]);
  }
  acc.canonicalize();
  return acc;
}

template <typename T>
static std::complex<T> evaluate_complex(const IntPoly& p, std::complex<T> z) {
  IntPoly tmp;
  const IntPoly& q = as_power(p, tmp);
  std::complex<T> acc = 0;
  for (std::size_t k = q.coeffs().size(); k-- > 0;) {
    acc = acc * z + static_cast<T>(q.coeffs()[k].get_d());
  }
  return acc;
}

std::complex<double> evaluate(const IntPoly& p, std::complex<double> z) { return evaluate_complex(p, z); }
std::complex<long double> evaluate(const IntPoly& p, std::complex<long double> z) {
  return evaluate_complex(p, z);
}

IntPoly reverse_coefficients(const IntPoly& p, std::size_t d) {
  if (p.degree() > static_cast<int>(d)) {
    throw DomainError("reverse_coefficients: degree bound " + std::to_string(d) + " below degree " +
                      std::to_string(p.degree()));
  }
  std::vector<Integer> out(d + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[d - i] = p.coeffs()[i];
  return IntPoly(std::move(out), p.basis());
}

Integer max_lower_abs(const IntPoly& p) {
  Integer best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer a = abs(p.coeffs()[static_cast<std::size_t>(i)]);
    if (a > best) best = a;
  }
  return best;
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const IntPoly& p) {
  IntPoly tmp;
  const IntPoly& q = as_power(p, tmp);
  coeffs_.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly operator*(RatPoly a, const Rational& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.normalize();
  return a;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < divisor.degree()) return {RatPoly(), *this};
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<Rational> quot(rem.size() - dd);
  const Rational& lead = divisor.coeffs_.back();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] / lead;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(out));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  acc.canonicalize();
  return acc;
}

IntPoly RatPoly::to_primitive_int() const {
  if (is_zero()) return {};
  Integer lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out(coeffs_.size());
  Integer content = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i].get_num() * (lcm / coeffs_[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return IntPoly(std::move(out));
}

std::string RatPoly::to_string(const std::string& var) const {
  return format_terms(coeffs_, [&](std::size_t i) { return basis_symbol(Basis::power, var, i); });
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPoly substitute(const RatPoly& p, const RatPoly& inner) {
  RatPoly result;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    result = result * inner + RatPoly(std::vector<Rational>{p.coeffs()[k]});
  }
  return result;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(std::size_t arity, const Integer& c) {
  MultiPoly out(arity);
  out.add_term(Exponents(arity, 0), c);
  return out;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw DomainError("variable index out of range");
  MultiPoly out(arity);
  Exponents e(arity, 0);
  e[index] = 1;
  out.add_term(e, 1);
  return out;
}

MultiPoly MultiPoly::from_univariate(std::size_t arity, std::size_t index, const IntPoly& p) {
  if (index >= arity) throw DomainError("variable index out of range");
  IntPoly tmp;
  const IntPoly& q = as_power(p, tmp);
  MultiPoly out(arity);
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
    Exponents e(arity, 0);
    e[index] = static_cast<int>(i);
    out.add_term(e, q.coeffs()[i]);
  }
  return out;
}

Integer MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != arity_) throw DomainError("exponent vector arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_arity(const MultiPoly& other) const {
  if (arity_ != other.arity_) throw DomainError("MultiPoly arity mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly out(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.arity_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<Rational> MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw DomainError("evaluation point arity mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational term(c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == 0) return std::nullopt;
      Rational base = e[i] < 0 ? Rational(1) / point[i] : point[i];
      Rational power = 1;
      for (int k = 0; k < std::abs(e[i]); ++k) power *= base;
      term *= power;
    }
    acc += term;
  }
  acc.canonicalize();
  return acc;
}

int MultiPoly::total_degree() const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    best = std::max(best, s);
  }
  return best;
}

bool MultiPoly::is_laurent() const {
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) return true;
  }
  return false;
}

IntPoly MultiPoly::to_univariate(std::size_t index) const {
  std::vector<Integer> out;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (i != index && e[i] != 0) throw DomainError("MultiPoly is not univariate");
    }
    if (e[index] < 0) throw DomainError("negative exponent in univariate view");
    auto k = static_cast<std::size_t>(e[index]);
    if (out.size() <= k) out.resize(k + 1);
    out[k] += c;
  }
  return IntPoly(std::move(out));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (!has_var || mag != 1) os << mag.get_str();
    bool need_star = !has_var || mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "X" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace grpoly
