#include "grpoly/roots.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

namespace grpoly {

namespace {

void require_nonzero(const IntPoly& p, const char* who) {
  if (p.is_zero()) throw DomainError(std::string(who) + ": zero polynomial");
}

IntPoly power_basis(const IntPoly& p) {
  return p.basis() == Basis::power ? p : convert_basis(p, Basis::power);
}

// Scales a nonzero rational polynomial to a primitive integer one, keeping signs.
RatPoly primitive_same_sign(const RatPoly& p) {
  if (p.is_zero()) return p;
  IntPoly q = p.to_primitive_int();
  if (p.leading() < 0) q = -q;
  return RatPoly(q);
}

RatPoly primitive_gcd(RatPoly a, RatPoly b) {
  a = primitive_same_sign(a);
  b = primitive_same_sign(b);
  while (!b.is_zero()) {
    RatPoly r = primitive_same_sign(a.divmod(b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw Error("internal: inexact polynomial division");
  return q;
}

int sign_of(const Rational& x) { return sgn(x); }

std::vector<RatPoly> sturm_chain(const RatPoly& squarefree) {
  std::vector<RatPoly> chain;
  chain.push_back(primitive_same_sign(squarefree));
  if (squarefree.degree() <= 0) return chain;
  chain.push_back(primitive_same_sign(squarefree.derivative()));
  for (;;) {
    const RatPoly& a = chain[chain.size() - 2];
    const RatPoly& b = chain.back();
    RatPoly r = a.divmod(b).second;
    if (r.is_zero()) break;
    chain.push_back(primitive_same_sign(-r));
  }
  return chain;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_of(p.evaluate(x)));
  return sign_changes(signs);
}

std::size_t variations_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    int s = sign_of(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

std::size_t distinct_in(const RatPoly& squarefree, const Interval& iv) {
  if (squarefree.degree() <= 0) return 0;
  if (iv.lo && iv.hi && *iv.hi <= *iv.lo) return 0;
  const auto chain = sturm_chain(squarefree);
  const std::size_t va = iv.lo ? variations_at(chain, *iv.lo) : variations_at_infinity(chain, false);
  const std::size_t vb = iv.hi ? variations_at(chain, *iv.hi) : variations_at_infinity(chain, true);
  return va - vb;
}

}  // namespace

std::vector<std::pair<RatPoly, std::size_t>> squarefree_decomposition(const IntPoly& p0) {
  const IntPoly p = power_basis(p0);
  require_nonzero(p, "squarefree_decomposition");
  std::vector<std::pair<RatPoly, std::size_t>> out;
  if (p.degree() == 0) return out;
  const RatPoly f(p);
  const RatPoly fp = f.derivative();
  RatPoly a = primitive_gcd(f, fp);
  RatPoly b = exact_quotient(f, a);
  RatPoly c = exact_quotient(fp, a);
  RatPoly d = c - b.derivative();
  for (std::size_t i = 1; b.degree() > 0; ++i) {
    RatPoly ai = primitive_gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
    b = exact_quotient(b, ai);
    c = exact_quotient(d, ai);
    d = c - b.derivative();
  }
  return out;
}

RatPoly squarefree_part(const IntPoly& p0) {
  const IntPoly p = power_basis(p0);
  require_nonzero(p, "squarefree_part");
  const RatPoly f(p);
  if (f.degree() <= 0) return f.monic();
  return exact_quotient(f, primitive_gcd(f, f.derivative())).monic();
}

std::size_t sturm_count(const IntPoly& p, const Interval& interval) {
  require_nonzero(p, "sturm_count");
  return distinct_in(squarefree_part(p), interval);
}

std::size_t sturm_count_with_multiplicity(const IntPoly& p, const Interval& interval) {
  require_nonzero(p, "sturm_count_with_multiplicity");
  std::size_t total = 0;
  for (const auto& [f, mult] : squarefree_decomposition(p)) total += mult * distinct_in(f, interval);
  return total;
}

bool is_real_rooted(const IntPoly& p) {
  require_nonzero(p, "is_real_rooted");
  const RatPoly s = squarefree_part(p);
  return distinct_in(s, {}) == static_cast<std::size_t>(std::max(0, s.degree()));
}

SignProfile sign_profile(const IntPoly& p0) {
  const IntPoly p = power_basis(p0);
  require_nonzero(p, "sign_profile");
  const RatPoly s = squarefree_part(p);
  SignProfile out;
  out.zero = p.coefficient(0) == 0 ? 1 : 0;
  out.negative = distinct_in(s, {std::nullopt, Rational(0)}) - out.zero;
  out.positive = distinct_in(s, {Rational(0), std::nullopt});
  return out;
}

SignProfile sign_profile_with_multiplicity(const IntPoly& p0) {
  const IntPoly p = power_basis(p0);
  require_nonzero(p, "sign_profile_with_multiplicity");
  SignProfile out;
  out.zero = p.valuation();
  out.negative = sturm_count_with_multiplicity(p, {std::nullopt, Rational(0)}) - out.zero;
  out.positive = sturm_count_with_multiplicity(p, {Rational(0), std::nullopt});
  return out;
}

Rational rouche_bound(const IntPoly& p0) {
  const IntPoly p = power_basis(p0);
  require_nonzero(p, "rouche_bound");
  Rational r(max_lower_abs(p), abs(p.leading()));
  r.canonicalize();
  return r + 1;
}

// ---------------------------------------------------------------------------
// Integer roots

namespace {

// Every root z satisfies |z| <= 2 max_i (|a_{d-i}| / |a_d|)^(1/i); returns an
// integer upper bound of that quantity.
Integer fujiwara_bound(const IntPoly& p) {
  const int d = p.degree();
  const Integer lead = abs(p.leading());
  Integer best = 0;
  for (int i = 1; i <= d; ++i) {
    Integer c = abs(p.coefficient(static_cast<std::size_t>(d - i)));
    if (c == 0) continue;
    // ceil(c / lead)^(1/i) rounded up
    Integer q = (c + lead - 1) / lead;
    Integer r;
    mpz_root(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i));
    Integer check;
    mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    if (check < q) r += 1;
    if (r > best) best = r;
  }
  return 2 * best;
}

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kPrimes[] = {4294967291ULL, 4294967279ULL};

bool vanishes_mod(const std::vector<std::uint64_t>& residues, std::uint64_t prime, const Integer& r) {
  Integer rr = r % static_cast<unsigned long>(prime);
  if (rr < 0) rr += static_cast<unsigned long>(prime);
  const std::uint64_t x = rr.get_ui();
  u128 acc = 0;
  for (std::size_t k = residues.size(); k-- > 0;) acc = (acc * x + residues[k]) % prime;
  return acc == 0;
}

// When p equals lead * prod (X - r)^m_r over the given candidates, reads the
// multiplicities from the power sums of the roots (Newton's identities and a
// Vandermonde solve) and confirms them by rebuilding the product exactly.
std::optional<std::vector<std::size_t>> split_multiplicities(const IntPoly& p, const std::vector<Integer>& roots) {
  const std::size_t k = roots.size();
  const std::size_t d = static_cast<std::size_t>(p.degree());
  if (k == 0 || k > 64 || k > d) return std::nullopt;
  const Rational lead(p.leading());
  // e[j] is the j-th elementary symmetric function of the roots.
  std::vector<Rational> e(k);
  for (std::size_t j = 1; j < k; ++j) {
    e[j] = Rational(p.coefficient(d - j)) / lead;
    if (j % 2 == 1) e[j] = -e[j];
  }
  std::vector<Rational> power(k);
  power[0] = Rational(static_cast<unsigned long>(d));
  for (std::size_t j = 1; j < k; ++j) {
    Rational acc = Rational(static_cast<unsigned long>(j)) * e[j];
    if (j % 2 == 0) acc = -acc;
    for (std::size_t i = 1; i < j; ++i) acc += (i % 2 == 1 ? e[i] : Rational(-e[i])) * power[j - i];
    power[j] = acc;
  }
  // Row j of the system: sum_i m_i r_i^j = power[j].
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    Rational x = 1;
    for (std::size_t j = 0; j < k; ++j) {
      a[j][i] = x;
      x *= Rational(roots[i]);
    }
  }
  for (std::size_t j = 0; j < k; ++j) a[j][k] = power[j];
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    std::swap(a[pivot], a[col]);
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t c = col; c <= k; ++c) a[row][c] -= f * a[col][c];
    }
  }
  std::vector<std::size_t> mult(k);
  std::vector<RootMultiplicity> factors;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational m = a[i][k] / a[i][i];
    if (m.get_den() != 1 || m < 0 || !m.get_num().fits_ulong_p()) return std::nullopt;
    mult[i] = m.get_num().get_ui();
    factors.push_back({Rational(roots[i]), mult[i]});
  }
  if (from_roots(factors) * p.leading() != p) return std::nullopt;
  return mult;
}

// Divides cur by (X - r) for as long as the remainder vanishes and returns the
// number of divisions. Buffers are swapped rather than reallocated.
std::size_t deflate(std::vector<Integer>& cur, const Integer& r, std::vector<Integer>& scratch) {
  const bool small = r.fits_slong_p();
  const long rs = small ? r.get_si() : 0;
  std::size_t mult = 0;
  Integer acc;
  while (cur.size() >= 2) {
    scratch.resize(cur.size() - 1);
    acc = 0;
    for (std::size_t k = cur.size(); k-- > 1;) {
      if (small) {
        mpz_mul_si(acc.get_mpz_t(), acc.get_mpz_t(), rs);
      } else {
        mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), r.get_mpz_t());
      }
      mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), cur[k].get_mpz_t());
      mpz_set(scratch[k - 1].get_mpz_t(), acc.get_mpz_t());
    }
    if (acc * r + cur[0] != 0) break;
    ++mult;
    std::swap(cur, scratch);
  }
  return mult;
}

}  // namespace

std::map<Integer, std::size_t> integer_roots(const IntPoly& p0) {
  const IntPoly p = power_basis(p0);
  require_nonzero(p, "integer_roots");
  std::map<Integer, std::size_t> out;
  const std::size_t v = p.valuation();
  if (v > 0) out[Integer(0)] = v;
  std::vector<Integer> c(p.coeffs().begin() + static_cast<std::ptrdiff_t>(v), p.coeffs().end());
  IntPoly q(c);
  if (q.degree() <= 0) return out;

  std::vector<std::vector<std::uint64_t>> residues;
  for (std::uint64_t prime : kPrimes) {
    std::vector<std::uint64_t> r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = mpz_fdiv_ui(c[i].get_mpz_t(), static_cast<unsigned long>(prime));
    residues.push_back(std::move(r));
  }

  const Integer trailing = abs(q.coefficient(0));
  const Integer bound = fujiwara_bound(q);
  std::vector<Integer> candidates;
  if (bound <= Integer(1) << 22) {
    for (Integer a = 1; a <= bound && a <= trailing; ++a) {
      if (!mpz_divisible_p(trailing.get_mpz_t(), a.get_mpz_t())) continue;
      candidates.push_back(-a);
      candidates.push_back(a);
    }
  } else {
    // Isolate real roots by exact bisection down to unit intervals (lo, lo+1].
    const RatPoly s = squarefree_part(q);
    std::vector<std::pair<Integer, Integer>> stack{{-bound - 1, bound}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      if (distinct_in(s, {Rational(lo), Rational(hi)}) == 0) continue;
      if (hi - lo == 1) {
        if (hi != 0 && mpz_divisible_p(trailing.get_mpz_t(), hi.get_mpz_t())) candidates.push_back(hi);
        continue;
      }
      Integer mid = lo + (hi - lo) / 2;
      stack.emplace_back(mid, hi);
      stack.emplace_back(lo, mid);
    }
  }
  std::vector<Integer> hits;
  for (const Integer& r : candidates) {
    bool maybe = true;
    for (std::size_t k = 0; k < residues.size() && maybe; ++k) maybe = vanishes_mod(residues[k], kPrimes[k], r);
    if (maybe) hits.push_back(r);
  }
  if (const auto mult = split_multiplicities(q, hits)) {
    for (std::size_t i = 0; i < hits.size(); ++i) {
      if ((*mult)[i] > 0) out[hits[i]] = (*mult)[i];
    }
    return out;
  }
  std::vector<Integer> cur = c;
  std::vector<Integer> scratch;
  for (const Integer& r : hits) {
    const std::size_t mult = deflate(cur, r, scratch);
    if (mult > 0) out[r] = mult;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complex roots

namespace {

using cld = std::complex<long double>;

std::vector<cld> aberth(const std::vector<long double>& a) {
  const std::size_t d = a.size() - 1;
  std::vector<cld> z(d);
  if (d == 1) {
    z[0] = cld(-a[0] / a[1], 0.0L);
    return z;
  }
  // Start on a circle whose radius is the geometric mean root modulus, rotated
  // off the real axis so conjugate pairs separate.
  long double radius = std::pow(std::abs(a[0] / a[d]), 1.0L / static_cast<long double>(d));
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1.0L;
  const long double two_pi = 6.283185307179586476925286766559L;
  for (std::size_t k = 0; k < d; ++k) {
    const long double theta = two_pi * static_cast<long double>(k) / static_cast<long double>(d) + 0.4L;
    z[k] = std::polar(radius, theta);
  }

  auto eval = [&](const cld& x, cld& value, cld& deriv) {
    value = cld(a[d], 0.0L);
    deriv = cld(0.0L, 0.0L);
    for (std::size_t k = d; k-- > 0;) {
      deriv = deriv * x + value;
      value = value * x + a[k];
    }
  };

  constexpr int kMaxIterations = 1000;
  const long double eps = 4.0L * std::numeric_limits<long double>::epsilon();
  int quiet_sweeps = 0;
  for (int it = 0; it < kMaxIterations && quiet_sweeps < 2; ++it) {
    bool moved = false;
    for (std::size_t k = 0; k < d; ++k) {
      cld value;
      cld deriv;
      eval(z[k], value, deriv);
      if (value == cld(0.0L, 0.0L)) continue;
      const cld ratio = value / deriv;
      cld sum(0.0L, 0.0L);
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      const cld w = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      if (std::abs(w) > eps * std::max(1.0L, std::abs(z[k]))) moved = true;
    }
    quiet_sweeps = moved ? 0 : quiet_sweeps + 1;
  }
  return z;
}

double relative_residual(const IntPoly& p, std::complex<long double> z) {
  const std::complex<long double> v = evaluate(p, z);
  const long double r = std::abs(z);
  long double norm = 0.0L;
  long double pw = 1.0L;
  for (const auto& c : p.coeffs()) {
    norm += std::abs(static_cast<long double>(c.get_d())) * pw;
    pw *= r;
  }
  if (norm == 0.0L) return 0.0;
  return static_cast<double>(std::abs(v) / norm);
}

}  // namespace

std::vector<NumericRoot> complex_roots(const IntPoly& p0, double tol) {
  const IntPoly p = power_basis(p0);
  require_nonzero(p, "complex_roots");
  if (p.degree() < 1) throw DomainError("complex_roots: constant polynomial has no roots");
  std::vector<NumericRoot> out;
  const std::size_t v = p.valuation();
  for (std::size_t i = 0; i < v; ++i) out.push_back({{0.0, 0.0}, 0.0});

  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    IntPoly f = factor.to_primitive_int();
    if (f.coefficient(0) == 0) {
      // The zero root was already emitted exactly; drop the X factor.
      std::vector<Integer> c(f.coeffs().begin() + 1, f.coeffs().end());
      f = IntPoly(std::move(c));
    }
    if (f.degree() < 1) continue;
    // Scale by a power of two to keep long double in range.
    std::vector<long double> a(f.coeffs().size());
    long exp_max = LONG_MIN;
    for (const auto& c : f.coeffs()) {
      if (c == 0) continue;
      long e = 0;
      mpz_get_d_2exp(&e, c.get_mpz_t());
      exp_max = std::max(exp_max, e);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      long e = 0;
      const double mant = mpz_get_d_2exp(&e, f.coeffs()[i].get_mpz_t());
      a[i] = std::ldexp(static_cast<long double>(mant), static_cast<int>(e - exp_max));
    }
    const auto zs = aberth(a);
    for (const auto& z : zs) {
      const double res = std::min(relative_residual(f, z), relative_residual(p, z));
      if (!(res <= tol)) {
        throw ConvergenceError("complex_roots: residual " + std::to_string(res) + " above tolerance after iteration cap");
      }
      for (std::size_t k = 0; k < mult; ++k) {
        out.push_back({{static_cast<double>(z.real()), static_cast<double>(z.imag())}, res});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NumericRoot& x, const NumericRoot& y) {
    if (x.z.real() != y.z.real()) return x.z.real() < y.z.real();
    return x.z.imag() < y.z.imag();
  });
  return out;
}

RootReport root_report(const IntPoly& p0, double tol) {
  const IntPoly p = power_basis(p0);
  require_nonzero(p, "root_report");
  RootReport r;
  r.degree = p.degree();
  r.distinct = sign_profile(p);
  r.with_multiplicity = sign_profile_with_multiplicity(p);
  r.real_rooted = is_real_rooted(p);
  r.integer_roots = integer_roots(p);
  if (r.degree >= 1) r.roots = complex_roots(p, tol);
  r.rouche_bound = rouche_bound(p);
  for (const auto& z : r.roots) r.max_modulus = std::max(r.max_modulus, z.modulus());
  return r;
}

std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s(buf);
  if (s.size() > 1 && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string scatter_csv_header() { return "re,im,modulus,graph6,family"; }

void write_scatter_rows(std::ostream& out, const std::vector<NumericRoot>& roots, const std::string& graph6,
                        const std::string& family) {
  for (const auto& r : roots) {
    out << format_fixed(r.z.real()) << ',' << format_fixed(r.z.imag()) << ',' << format_fixed(r.modulus()) << ','
        << graph6 << ',' << family << '\n';
  }
}

}  // namespace grpoly
