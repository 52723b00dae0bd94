#include "grpoly/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "grpoly/roots.hpp"

namespace grpoly {

namespace {

IntPoly as_power(const IntPoly& p) { return p.basis() == Basis::power ? p : convert_basis(p, Basis::power); }

Integer to_integer(std::size_t x) { return Integer(static_cast<unsigned long>(x)); }

}  // namespace

IntPoly negate_variable(const IntPoly& p0) {
  std::vector<Integer> c = as_power(p0).coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

IntPoly square_variable(const IntPoly& p0) {
  const IntPoly p = as_power(p0);
  if (p.is_zero()) return p;
  std::vector<Integer> c(2 * p.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[2 * i] = p.coeffs()[i];
  return IntPoly(std::move(c));
}

IntPoly unsquare_variable(const IntPoly& p) {
  std::vector<Integer> c;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i % 2 == 1) {
      if (p.coeffs()[i] != 0) throw DomainError("unsquare_variable: odd coefficient " + std::to_string(i) + " is nonzero");
    } else {
      c.push_back(p.coeffs()[i]);
    }
  }
  return IntPoly(std::move(c));
}

IntPoly interleave_nonneg(const IntPoly& p0) {
  const IntPoly p = as_power(p0);
  std::vector<Integer> g(2 * p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Integer& h = p.coeffs()[i];
    if (h >= 0) {
      g[2 * i] = h;
    } else {
      g[2 * i + 1] = -h;
    }
  }
  return IntPoly(std::move(g));
}

IntPoly deinterleave(const IntPoly& g) {
  const auto& c = g.coeffs();
  std::vector<Integer> h((c.size() + 1) / 2);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Integer even = g.coefficient(2 * i);
    const Integer odd = g.coefficient(2 * i + 1);
    if (even < 0 || odd < 0) throw DomainError("deinterleave: negative entry at slot pair " + std::to_string(i));
    if (even != 0 && odd != 0) throw DomainError("deinterleave: both slots of pair " + std::to_string(i) + " are nonzero");
    h[i] = even - odd;
  }
  return IntPoly(std::move(h));
}

IntPoly realify(const IntPoly& p0, std::size_t s) {
  const IntPoly p = as_power(p0);
  if (p.degree() > static_cast<int>(s)) {
    throw DomainError("realify: degree bound s = " + std::to_string(s) + " is below the degree " +
                      std::to_string(p.degree()));
  }
  std::vector<RootMultiplicity> roots;
  for (std::size_t i = 0; i <= s; ++i) {
    const Integer h = p.coefficient(i);
    if (h < 0) throw DomainError("realify: negative coefficient at X^" + std::to_string(i));
    if (!h.fits_ulong_p()) throw SizeCapError("realify: coefficient too large to use as a multiplicity");
    roots.push_back({Rational(to_integer(i)), static_cast<std::size_t>(h.get_ui()) + 1});
  }
  return from_roots(roots);
}

IntPoly recover_coefficients(const IntPoly& q0, std::size_t s) {
  const IntPoly q = as_power(q0);
  if (q.is_zero()) throw DomainError("recover_coefficients: zero polynomial");
  if (q.leading() != 1) throw DomainError("recover_coefficients: not monic");
  const auto roots = integer_roots(q);
  std::size_t total = 0;
  std::vector<Integer> h(s + 1);
  for (std::size_t i = 0; i <= s; ++i) {
    auto it = roots.find(to_integer(i));
    if (it == roots.end()) throw DomainError("recover_coefficients: " + std::to_string(i) + " is not a root");
    h[i] = to_integer(it->second - 1);
    total += it->second;
  }
  if (roots.size() != s + 1 || total != static_cast<std::size_t>(q.degree())) {
    throw DomainError("recover_coefficients: polynomial has roots outside 0..s");
  }
  return IntPoly(std::move(h));
}

IntPoly realify_rootencode(const IntPoly& p0) {
  const IntPoly p = as_power(p0);
  std::vector<RootMultiplicity> roots;
  for (const auto& h : p.coeffs()) roots.push_back({Rational(h), 1});
  return from_roots(roots);
}

IntPoly dense_real_prefactor(const SimilarityTriple& t, PrefactorSign sign) {
  if (t.n == 0 || t.k == 0) throw DomainError("dense_real_prefactor: n and k must be positive");
  const Integer n = to_integer(t.n);
  const Integer k = to_integer(t.k);
  const Integer s = sign == PrefactorSign::plus ? Integer(-1) : Integer(1);
  return IntPoly({s * n, k}) * IntPoly({s * k, n});
}

IntPoly quadrant_factor(const Integer& a, const Integer& b, const Integer& c, QuadrantHalf half) {
  const Integer mid = 2 * a * c;
  return IntPoly({a * a + b * b, half == QuadrantHalf::right ? Integer(-mid) : mid, c * c});
}

IntPoly quadrant_prefactor(const SimilarityTriple& t, QuadrantHalf half) {
  if (t.n == 0 || t.m == 0 || t.k == 0) {
    throw DomainError("quadrant_prefactor: every component of the triple must be positive, got " + to_string(t));
  }
  std::array<Integer, 3> v = {to_integer(t.n), to_integer(t.m), to_integer(t.k)};
  std::array<int, 3> idx = {0, 1, 2};
  IntPoly out = IntPoly::constant(1);
  do {
    out *= quadrant_factor(v[idx[0]], v[idx[1]], v[idx[2]], half);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

IntPoly complex_density_prefactor(const SimilarityTriple& t) {
  // Edgeless graphs have no quadrant factor; they contribute nothing to the density limit.
  if (t.n == 0 || t.m == 0 || t.k == 0) return IntPoly::constant(1);
  return quadrant_prefactor(t, QuadrantHalf::right) * quadrant_prefactor(t, QuadrantHalf::left);
}

IntPoly densify(const IntPoly& p0, const SimilarityTriple& t, DensifyMode mode) {
  const IntPoly p = as_power(p0);
  if (mode == DensifyMode::complex) return complex_density_prefactor(t) * p;
  if (p.is_zero() || !is_real_rooted(p)) throw DomainError("densify: real mode needs a real-rooted input");
  return dense_real_prefactor(t, PrefactorSign::plus) * p;
}

std::pair<Rational, Rational> evaluate_gaussian(const IntPoly& p0, const Rational& re, const Rational& im) {
  const IntPoly p = as_power(p0);
  Rational vr = 0;
  Rational vi = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    Rational nr = vr * re - vi * im + Rational(p.coeffs()[k]);
    Rational ni = vr * im + vi * re;
    vr = std::move(nr);
    vi = std::move(ni);
  }
  return {vr, vi};
}

DensityWitness density_witness(const Rational& re, const Rational& im, const Rational& eps) {
  if (re <= 0 || im <= 0) throw DomainError("density_witness: target must lie in the open first quadrant");
  if (eps <= 0) throw DomainError("density_witness: eps must be positive");
  const Rational eps2 = eps * eps;
  constexpr long kMaxDenominator = 10000000;

  DensityWitness w;
  bool found = false;
  for (long c = 1; c <= kMaxDenominator && !found; ++c) {
    const Rational rc = re * c;
    const Rational ic = im * c;
    Integer ra = (rc.get_num() * 2 + rc.get_den()) / (2 * rc.get_den());
    Integer ib = (ic.get_num() * 2 + ic.get_den()) / (2 * ic.get_den());
    for (long da = -2; da <= 2; ++da) {
      for (long db = -2; db <= 2; ++db) {
        const Integer a = ra + da;
        const Integer b = ib + db;
        if (a <= 0 || b <= 0 || a == b || a == c || b == c) continue;
        Rational ac(a, c);
        Rational bc(b, c);
        ac.canonicalize();
        bc.canonicalize();
        const Rational dr = ac - re;
        const Rational di = bc - im;
        const Rational d2 = dr * dr + di * di;
        if (d2 >= eps2) continue;
        const bool better = !found || d2 < w.distance_squared ||
                            (d2 == w.distance_squared && (a < w.a || (a == w.a && b < w.b)));
        if (better) {
          found = true;
          w.a = a;
          w.b = b;
          w.c = c;
          w.distance_squared = d2;
        }
      }
    }
  }
  if (!found) throw SizeCapError("density_witness: no admissible denominator up to " + std::to_string(kMaxDenominator));

  std::array<Integer, 3> sorted = {w.a, w.b, w.c};
  std::sort(sorted.begin(), sorted.end());
  const Integer& lo = sorted[0];
  const Integer& mid = sorted[1];
  const Integer& hi = sorted[2];
  auto to_size = [](const Integer& x) {
    if (x > Integer(static_cast<unsigned long>(kDensityMaxVertices)) * kDensityMaxVertices) {
      throw SizeCapError("density_witness: triple component exceeds the size cap");
    }
    return static_cast<std::size_t>(x.get_ui());
  };
  w.unscaled = {to_size(mid), to_size(hi), to_size(lo)};
  w.scale = 1;
  if (!parameters_realizable(w.unscaled.n, w.unscaled.m, w.unscaled.k)) w.scale = 2 * hi;
  const Integer v = mid * w.scale;
  const Integer e = hi * w.scale;
  const Integer k = lo * w.scale;
  if (v > Integer(static_cast<unsigned long>(kDensityMaxVertices))) {
    throw SizeCapError("density_witness: witness needs " + v.get_str() + " vertices, cap is " +
                       std::to_string(kDensityMaxVertices));
  }
  w.triple = {to_size(v), to_size(e), to_size(k)};
  if (!parameters_realizable(w.triple.n, w.triple.m, w.triple.k)) {
    throw Error("density_witness: scaled triple " + to_string(w.triple) + " is not realizable");
  }
  w.graph = build_graph_with_parameters(w.triple.n, w.triple.m, w.triple.k);

  const IntPoly q = quadrant_prefactor(w.triple, QuadrantHalf::right);
  Rational zr(w.a, w.c);
  Rational zi(w.b, w.c);
  zr.canonicalize();
  zi.canonicalize();
  const auto [vr, vi] = evaluate_gaussian(q, zr, zi);
  w.exact_zero = vr == 0 && vi == 0;
  const std::complex<long double> z(static_cast<long double>(zr.get_d()), static_cast<long double>(zi.get_d()));
  const std::complex<long double> val = evaluate(q, z);
  long double norm = 0.0L;
  long double pw = 1.0L;
  for (const auto& coef : q.coeffs()) {
    norm += std::abs(static_cast<long double>(coef.get_d())) * pw;
    pw *= std::abs(z);
  }
  w.residual = static_cast<double>(std::abs(val) / norm);
  return w;
}

IntPoly rouche_scale(const IntPoly& p0, const Integer& a) {
  const IntPoly p = as_power(p0);
  if (p.is_zero()) throw DomainError("rouche_scale: zero polynomial");
  if (a < 1) throw DomainError("rouche_scale: A must be at least 1");
  if (p.leading() < 1) throw DomainError("rouche_scale: leading coefficient must be positive");
  const Integer need = max_lower_abs(p);
  if (a < need) throw DomainError("rouche_scale: A = " + a.get_str() + " is below max |h_i| = " + need.get_str());
  return substitute(p, IntPoly({Integer(0), a}));
}

IntPoly rouche_unscale(const IntPoly& q, const Integer& a) {
  if (a == 0) throw DomainError("rouche_unscale: A must be nonzero");
  std::vector<Integer> c = q.coeffs();
  Integer pw = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!mpz_divisible_p(c[i].get_mpz_t(), pw.get_mpz_t())) {
      throw DomainError("rouche_unscale: coefficient " + std::to_string(i) + " is not divisible by A^" + std::to_string(i));
    }
    mpz_divexact(c[i].get_mpz_t(), c[i].get_mpz_t(), pw.get_mpz_t());
    pw *= a;
  }
  return IntPoly(std::move(c));
}

IntPoly scale_for_graph(const IntPoly& p0, const SimilarityTriple& t, unsigned r) {
  const IntPoly p = as_power(p0);
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(t.n), r);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (abs(p.coeffs()[i]) > bound) {
      throw DomainError("scale_for_graph: |h_" + std::to_string(i) + "| = " + Integer(abs(p.coeffs()[i])).get_str() +
                        " exceeds n^r = " + bound.get_str());
    }
  }
  return rouche_scale(p, bound);
}

RatPoly remap_roots(const IntPoly& p, const Rational& alpha, const Rational& beta) {
  if (alpha == 0) throw DomainError("remap_roots: alpha must be nonzero");
  const Rational inv = 1 / alpha;
  const RatPoly inner(std::vector<Rational>{Rational(-beta * inv), inv});
  const RatPoly out = substitute(RatPoly(as_power(p)), inner);
  if (out.is_zero()) return out;
  return RatPoly(out.to_primitive_int());
}

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inv(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || inv[perm[i]] != perm.size()) {
      throw DomainError("permutation is not a bijection on 0.." + std::to_string(perm.size() - 1));
    }
    inv[perm[i]] = i;
  }
  return inv;
}

IntPoly permute_coefficients(const IntPoly& p0, const std::vector<std::size_t>& perm) {
  const IntPoly p = as_power(p0);
  inverse_permutation(perm);
  if (p.degree() >= static_cast<int>(perm.size())) throw DomainError("permute_coefficients: permutation shorter than the degree");
  std::vector<Integer> c(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) c[i] = p.coefficient(perm[i]);
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Pipelines

std::vector<std::string> transform_names() {
  return {"negate", "square", "interleave", "deinterleave", "realify", "recover",
          "rootencode", "densify", "rouche", "scale", "remap", "permute"};
}

std::vector<TransformStep> parse_transform_chain(const std::string& text) {
  std::vector<TransformStep> steps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    TransformStep step;
    std::stringstream parts(item);
    std::string part;
    bool first = true;
    while (std::getline(parts, part, ':')) {
      if (first) {
        step.name = part;
        first = false;
        continue;
      }
      auto eq = part.find('=');
      if (eq == std::string::npos) throw DomainError("transform parameter '" + part + "' needs key=value");
      step.params[part.substr(0, eq)] = part.substr(eq + 1);
    }
    const auto names = transform_names();
    if (std::find(names.begin(), names.end(), step.name) == names.end()) {
      throw DomainError("unknown transform '" + step.name + "'");
    }
    steps.push_back(std::move(step));
  }
  if (steps.empty()) throw DomainError("empty transform chain");
  return steps;
}

namespace {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw DomainError("not a rational number: '" + s + "'");
  r.canonicalize();
  return r;
}

std::size_t parse_size(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') throw DomainError("not a non-negative integer: '" + s + "'");
  return v;
}

std::vector<std::size_t> parse_perm(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '/')) out.push_back(parse_size(item));
  return out;
}

std::string join_perm(const std::vector<std::size_t>& perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i > 0) out += '/';
    out += std::to_string(i < perm.size() ? perm[i] : 0);
  }
  return out;
}

std::string param_or(const TransformStep& step, const std::string& key, const std::string& fallback) {
  auto it = step.params.find(key);
  return it == step.params.end() ? fallback : it->second;
}

std::size_t degree_or_zero(const IntPoly& p) { return p.degree() < 0 ? 0 : static_cast<std::size_t>(p.degree()); }

}  // namespace

TransformRecord apply_transform(const IntPoly& p0, const TransformStep& step, const SimilarityTriple& t) {
  TransformRecord rec;
  rec.transform = step.name;
  rec.input = as_power(p0);
  const IntPoly& p = rec.input;
  const std::string& name = step.name;
  if (name == "negate") {
    rec.output = negate_variable(p);
  } else if (name == "square") {
    rec.output = square_variable(p);
  } else if (name == "interleave") {
    rec.output = interleave_nonneg(p);
  } else if (name == "deinterleave") {
    rec.output = deinterleave(p);
  } else if (name == "realify") {
    const std::size_t s = parse_size(param_or(step, "s", std::to_string(degree_or_zero(p))));
    rec.params["s"] = std::to_string(s);
    rec.output = realify(p, s);
    rec.inverse_data["s"] = std::to_string(s);
  } else if (name == "recover") {
    std::string fallback = "0";
    if (!p.is_zero()) {
      const auto roots = integer_roots(p);
      if (!roots.empty() && roots.rbegin()->first > 0) fallback = roots.rbegin()->first.get_str();
    }
    const std::size_t s = parse_size(param_or(step, "s", fallback));
    rec.params["s"] = std::to_string(s);
    rec.output = recover_coefficients(p, s);
    rec.inverse_data["s"] = std::to_string(s);
  } else if (name == "rootencode") {
    rec.output = realify_rootencode(p);
  } else if (name == "densify") {
    const std::string mode = param_or(step, "mode", "complex");
    if (mode != "complex" && mode != "real") throw DomainError("densify mode must be complex or real");
    rec.params["mode"] = mode;
    rec.output = densify(p, t, mode == "complex" ? DensifyMode::complex : DensifyMode::real_positive);
    rec.inverse_data["triple"] = to_string(t);
  } else if (name == "rouche") {
    Integer a = max_lower_abs(p);
    if (a < 1) a = 1;
    if (auto it = step.params.find("A"); it != step.params.end()) a = Integer(parse_size(it->second));
    rec.params["A"] = a.get_str();
    rec.output = rouche_scale(p, a);
    rec.inverse_data["A"] = a.get_str();
  } else if (name == "scale") {
    const auto r = static_cast<unsigned>(parse_size(param_or(step, "r", "1")));
    rec.params["r"] = std::to_string(r);
    rec.output = scale_for_graph(p, t, r);
    Integer a;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(t.n), r);
    rec.inverse_data["A"] = a.get_str();
  } else if (name == "remap") {
    const Rational alpha = parse_rational(param_or(step, "alpha", "1"));
    const Rational beta = parse_rational(param_or(step, "beta", "0"));
    rec.params["alpha"] = alpha.get_str();
    rec.params["beta"] = beta.get_str();
    rec.output = remap_roots(p, alpha, beta).to_primitive_int();
    rec.inverse_data["alpha"] = Rational(1 / alpha).get_str();
    rec.inverse_data["beta"] = Rational(-beta / alpha).get_str();
    rec.inverse_data["leading"] = p.is_zero() ? "0" : p.leading().get_str();
  } else if (name == "permute") {
    std::vector<std::size_t> perm;
    if (auto it = step.params.find("perm"); it != step.params.end()) {
      perm = parse_perm(it->second);
    } else {
      for (std::size_t i = degree_or_zero(p) + 1; i-- > 0;) perm.push_back(i);
    }
    rec.params["perm"] = join_perm(perm);
    rec.output = permute_coefficients(p, perm);
    rec.inverse_data["perm"] = join_perm(inverse_permutation(perm));
  } else {
    throw DomainError("unknown transform '" + name + "'");
  }
  return rec;
}

std::optional<IntPoly> invert_transform(const TransformRecord& rec, const SimilarityTriple& t) {
  const std::string& name = rec.transform;
  const IntPoly& q = rec.output;
  if (name == "negate") return negate_variable(q);
  if (name == "square") return unsquare_variable(q);
  if (name == "interleave") return deinterleave(q);
  if (name == "deinterleave") return interleave_nonneg(q);
  if (name == "realify") return recover_coefficients(q, parse_size(rec.inverse_data.at("s")));
  if (name == "recover") return realify(q, parse_size(rec.inverse_data.at("s")));
  if (name == "densify") {
    const IntPoly pre = rec.params.at("mode") == "complex" ? complex_density_prefactor(t)
                                                           : dense_real_prefactor(t, PrefactorSign::plus);
    auto [quot, rem] = RatPoly(q).divmod(RatPoly(pre));
    if (!rem.is_zero()) return std::nullopt;
    std::vector<Integer> c;
    for (const auto& x : quot.coeffs()) {
      if (x.get_den() != 1) return std::nullopt;
      c.push_back(x.get_num());
    }
    return IntPoly(std::move(c));
  }
  if (name == "rouche" || name == "scale") return rouche_unscale(q, Integer(rec.inverse_data.at("A")));
  if (name == "remap") {
    // The inverse map recovers the input up to a constant; the recorded
    // leading coefficient fixes it.
    RatPoly back = remap_roots(q, parse_rational(rec.inverse_data.at("alpha")), parse_rational(rec.inverse_data.at("beta")));
    const Rational lead = parse_rational(rec.inverse_data.at("leading"));
    if (back.is_zero() || lead == 0) return IntPoly(back.to_primitive_int());
    RatPoly scaled = back * Rational(lead / back.leading());
    std::vector<Integer> c;
    for (const auto& x : scaled.coeffs()) {
      if (x.get_den() != 1) return std::nullopt;
      c.push_back(x.get_num());
    }
    return IntPoly(std::move(c));
  }
  if (name == "permute") return permute_coefficients(q, parse_perm(rec.inverse_data.at("perm")));
  return std::nullopt;
}

}  // namespace grpoly
