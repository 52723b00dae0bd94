#include "grpoly/simfun.hpp"

#include <cctype>
#include <nlohmann/json.hpp>

#include "grpoly/graph6.hpp"
#include "grpoly/parallel.hpp"

namespace grpoly {

using Node = SimExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

const Node& SimExpr::root() const {
  if (!root_) throw DomainError("empty similarity expression");
  return *root_;
}

namespace {

std::size_t max_index(const Node& n) {
  std::size_t out = n.kind == SimExpr::Kind::indeterminate ? n.index : 0;
  if (n.lhs) out = std::max(out, max_index(*n.lhs));
  if (n.rhs) out = std::max(out, max_index(*n.rhs));
  return out;
}

NodePtr make(SimExpr::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(SimExpr::Kind::add, lhs, term());
      } else if (accept('-')) {
        lhs = make(SimExpr::Kind::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(SimExpr::Kind::mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make(SimExpr::Kind::div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(SimExpr::Kind::neg, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom(false);
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    NodePtr exponent;
    if (accept('-')) {
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        throw ParseError("expected integer after '-' in exponent", pos_);
      }
      exponent = integer();
      auto neg = std::make_shared<Node>(*exponent);
      neg->value = -neg->value;
      exponent = neg;
    } else {
      exponent = atom(true);
    }
    if (max_index(*exponent) != 0) throw ParseError("indeterminate in exponent", at);
    return make(SimExpr::Kind::pow, base, exponent);
  }

  NodePtr integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    auto n = std::make_shared<Node>();
    n->kind = SimExpr::Kind::integer;
    n->value = Integer(std::string(s_.substr(start, pos_ - start)), 10);
    return n;
  }

  NodePtr atom(bool in_exponent) {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return make(SimExpr::Kind::group, inner);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view id = s_.substr(start, pos_ - start);
      auto n = std::make_shared<Node>();
      n->kind = SimExpr::Kind::symbol;
      if (id == "n") {
        n->symbol = SimExpr::Symbol::n;
      } else if (id == "m") {
        n->symbol = SimExpr::Symbol::m;
      } else if (id == "k") {
        n->symbol = SimExpr::Symbol::k;
      } else if (id == "nu") {
        n->symbol = SimExpr::Symbol::nu;
      } else if (id == "rho") {
        n->symbol = SimExpr::Symbol::rho;
      } else if (id.size() == 2 && id[0] == 'X' && id[1] >= '1' && id[1] <= '5') {
        if (in_exponent) throw ParseError("indeterminate in exponent", start);
        n->kind = SimExpr::Kind::indeterminate;
        n->index = static_cast<std::size_t>(id[1] - '0');
      } else {
        throw ParseError("unknown identifier '" + std::string(id) + "'", start);
      }
      return n;
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print(const Node& n, std::string& out) {
  using K = SimExpr::Kind;
  switch (n.kind) {
    case K::integer:
      out += n.value.get_str();
      return;
    case K::symbol: {
      static constexpr const char* names[] = {"n", "m", "k", "nu", "rho"};
      out += names[static_cast<int>(n.symbol)];
      return;
    }
    case K::indeterminate:
      out += "X" + std::to_string(n.index);
      return;
    case K::group:
      out += '(';
      print(*n.lhs, out);
      out += ')';
      return;
    case K::neg:
      out += '-';
      print(*n.lhs, out);
      return;
    case K::pow:
      print(*n.lhs, out);
      out += '^';
      print(*n.rhs, out);
      return;
    case K::add:
    case K::sub:
    case K::mul:
    case K::div: {
      static constexpr char ops[] = {'+', '-', '*', '/'};
      print(*n.lhs, out);
      out += ops[static_cast<int>(n.kind) - static_cast<int>(K::add)];
      print(*n.rhs, out);
      return;
    }
  }
}

long exponent_value(const Node& e, const SimilarityTriple& t) {
  Rational v = eval_constant(SimExpr(std::make_shared<Node>(e)), t);
  if (v.get_den() != 1) throw DomainError("exponent evaluates to a non-integer " + v.get_str());
  if (!v.get_num().fits_slong_p()) throw DomainError("exponent out of range");
  return v.get_num().get_si();
}

Rational rational_pow(const Rational& base, unsigned long e) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational constant_rec(const Node& n, const SimilarityTriple& t) {
  using K = SimExpr::Kind;
  switch (n.kind) {
    case K::integer:
      return Rational(n.value);
    case K::symbol:
      return Rational(symbol_value(n.symbol, t));
    case K::indeterminate:
      throw DomainError("indeterminate in a constant expression");
    case K::group:
      return constant_rec(*n.lhs, t);
    case K::neg:
      return -constant_rec(*n.lhs, t);
    case K::add:
      return constant_rec(*n.lhs, t) + constant_rec(*n.rhs, t);
    case K::sub:
      return constant_rec(*n.lhs, t) - constant_rec(*n.rhs, t);
    case K::mul:
      return constant_rec(*n.lhs, t) * constant_rec(*n.rhs, t);
    case K::div: {
      Rational d = constant_rec(*n.rhs, t);
      if (d == 0) throw DomainError("division by zero");
      return constant_rec(*n.lhs, t) / d;
    }
    case K::pow: {
      Rational b = constant_rec(*n.lhs, t);
      long e = exponent_value(*n.rhs, t);
      if (e >= 0) return rational_pow(b, static_cast<unsigned long>(e));
      if (b == 0) throw DomainError("zero raised to a negative power");
      return rational_pow(Rational(1) / b, static_cast<unsigned long>(-e));
    }
  }
  throw DomainError("bad expression node");
}

// Single-term view: coefficient and exponents, or nullopt.
std::optional<std::pair<Integer, Exponents>> as_monomial(const MultiPoly& p) {
  if (p.terms().size() != 1) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  return std::make_pair(c, e);
}

MultiPoly poly_rec(const Node& n, const SimilarityTriple& t, std::size_t arity) {
  using K = SimExpr::Kind;
  switch (n.kind) {
    case K::integer:
      return MultiPoly::constant(arity, n.value);
    case K::symbol:
      return MultiPoly::constant(arity, symbol_value(n.symbol, t));
    case K::indeterminate:
      if (n.index > arity) {
        throw DomainError("X" + std::to_string(n.index) + " exceeds arity " + std::to_string(arity));
      }
      return MultiPoly::variable(arity, n.index - 1);
    case K::group:
      return poly_rec(*n.lhs, t, arity);
    case K::neg:
      return MultiPoly(arity) - poly_rec(*n.lhs, t, arity);
    case K::add:
      return poly_rec(*n.lhs, t, arity) + poly_rec(*n.rhs, t, arity);
    case K::sub:
      return poly_rec(*n.lhs, t, arity) - poly_rec(*n.rhs, t, arity);
    case K::mul:
      return poly_rec(*n.lhs, t, arity) * poly_rec(*n.rhs, t, arity);
    case K::div: {
      MultiPoly num = poly_rec(*n.lhs, t, arity);
      auto mono = as_monomial(poly_rec(*n.rhs, t, arity));
      if (!mono) throw DomainError("division by a non-monomial has no polynomial value");
      MultiPoly out(arity);
      for (const auto& [e, c] : num.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), mono->first.get_mpz_t())) {
          throw DomainError("division leaves non-integer coefficients");
        }
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), mono->first.get_mpz_t());
        Exponents shifted = e;
        for (std::size_t i = 0; i < arity; ++i) shifted[i] -= mono->second[i];
        out.add_term(shifted, q);
      }
      return out;
    }
    case K::pow: {
      MultiPoly base = poly_rec(*n.lhs, t, arity);
      long e = exponent_value(*n.rhs, t);
      if (e >= 0) return base.pow(static_cast<unsigned>(e));
      auto mono = as_monomial(base);
      if (!mono || abs(mono->first) != 1) {
        throw DomainError("negative power of a non-unit-monomial has no polynomial value");
      }
      Exponents inv = mono->second;
      for (auto& x : inv) x = static_cast<int>(x * e);
      Integer c = (mono->first < 0 && (-e) % 2 == 1) ? Integer(-1) : Integer(1);
      MultiPoly out(arity);
      out.add_term(inv, c);
      return out;
    }
  }
  throw DomainError("bad expression node");
}

std::optional<Rational> point_rec(const Node& n, const SimilarityTriple& t, std::span<const Rational> x) {
  using K = SimExpr::Kind;
  switch (n.kind) {
    case K::integer:
      return Rational(n.value);
    case K::symbol:
      return Rational(symbol_value(n.symbol, t));
    case K::indeterminate:
      if (n.index > x.size()) throw DomainError("point has no coordinate for X" + std::to_string(n.index));
      return x[n.index - 1];
    case K::group:
      return point_rec(*n.lhs, t, x);
    case K::neg: {
      auto v = point_rec(*n.lhs, t, x);
      if (!v) return v;
      return Rational(-*v);
    }
    case K::add:
    case K::sub:
    case K::mul:
    case K::div: {
      auto a = point_rec(*n.lhs, t, x);
      if (!a) return a;
      auto b = point_rec(*n.rhs, t, x);
      if (!b) return b;
      switch (n.kind) {
        case K::add:
          return Rational(*a + *b);
        case K::sub:
          return Rational(*a - *b);
        case K::mul:
          return Rational(*a * *b);
        default:
          if (*b == 0) return std::nullopt;
          return Rational(*a / *b);
      }
    }
    case K::pow: {
      auto b = point_rec(*n.lhs, t, x);
      if (!b) return b;
      long e = exponent_value(*n.rhs, t);
      if (e >= 0) return rational_pow(*b, static_cast<unsigned long>(e));
      if (*b == 0) return std::nullopt;
      return rational_pow(Rational(1) / *b, static_cast<unsigned long>(-e));
    }
  }
  throw DomainError("bad expression node");
}

std::size_t height_rec(const Node& n, const SimilarityTriple& t) {
  using K = SimExpr::Kind;
  switch (n.kind) {
    case K::integer:
    case K::symbol:
      return 0;
    case K::indeterminate:
      return 1;
    case K::group:
    case K::neg:
      return height_rec(*n.lhs, t);
    case K::add:
    case K::sub:
    case K::mul:
    case K::div:
      return height_rec(*n.lhs, t) + height_rec(*n.rhs, t);
    case K::pow: {
      long e = exponent_value(*n.rhs, t);
      return height_rec(*n.lhs, t) * static_cast<std::size_t>(e < 0 ? -e : e);
    }
  }
  return 0;
}

}  // namespace

std::size_t SimExpr::max_indeterminate() const { return root_ ? max_index(*root_) : 0; }

SimExpr parse_simexpr(std::string_view text) { return SimExpr(Parser(text).parse()); }

std::string to_string(const SimExpr& e) {
  std::string out;
  print(e.root(), out);
  return out;
}

Integer symbol_value(SimExpr::Symbol s, const SimilarityTriple& t) {
  switch (s) {
    case SimExpr::Symbol::n:
      return Integer(static_cast<unsigned long>(t.n));
    case SimExpr::Symbol::m:
      return Integer(static_cast<unsigned long>(t.m));
    case SimExpr::Symbol::k:
      return Integer(static_cast<unsigned long>(t.k));
    case SimExpr::Symbol::nu:
      return Integer(static_cast<long>(t.nu()));
    case SimExpr::Symbol::rho:
      return Integer(static_cast<long>(t.rho()));
  }
  throw DomainError("unknown symbol");
}

Rational eval_constant(const SimExpr& e, const SimilarityTriple& t) { return constant_rec(e.root(), t); }

MultiPoly eval_simexpr(const SimExpr& e, const SimilarityTriple& t, std::size_t arity) {
  if (arity == 0 || arity > kMaxIndeterminates) throw DomainError("arity must be in 1..5");
  return poly_rec(e.root(), t, arity);
}

IntPoly eval_simexpr_univariate(const SimExpr& e, const SimilarityTriple& t) {
  MultiPoly p = eval_simexpr(e, t, 1);
  if (p.is_laurent()) throw DomainError("expression has negative powers of X1");
  return p.to_univariate(0);
}

std::optional<Rational> eval_at(const SimExpr& e, const SimilarityTriple& t, std::span<const Rational> point) {
  return point_rec(e.root(), t, point);
}

std::size_t height(const SimExpr& e, const SimilarityTriple& t) { return height_rec(e.root(), t); }

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass:
      return "PASS";
    case VerdictStatus::fail:
      return "FAIL";
    case VerdictStatus::inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::optional<Rational> reduction_rhs(const PolyValue& q_value, const SimilarityTriple& t, const SimExpr& prefactor,
                                      std::span<const SimExpr> subs, std::span<const Rational> point) {
  auto f = eval_at(prefactor, t, point);
  if (!f) return std::nullopt;
  std::vector<Rational> inner;
  inner.reserve(subs.size());
  for (const auto& g : subs) {
    auto v = eval_at(g, t, point);
    if (!v) return std::nullopt;
    inner.push_back(*v);
  }
  auto q = evaluate(q_value, inner);
  if (!q) return std::nullopt;
  return Rational(*f * *q);
}

namespace {

std::size_t poly_degree(const PolyValue& v) {
  if (const auto* p = std::get_if<IntPoly>(&v)) return p->degree() < 0 ? 0 : static_cast<std::size_t>(p->degree());
  const auto& mp = std::get<MultiPoly>(v);
  std::size_t best = 0;
  for (const auto& [e, c] : mp.terms()) {
    std::size_t s = 0;
    for (int x : e) s += static_cast<std::size_t>(x < 0 ? -x : x);
    best = std::max(best, s);
  }
  return best;
}

// max over monomials of Q of sum_v |e_v| * h_v
std::size_t q_substituted_height(const PolyValue& q, const std::vector<std::size_t>& h) {
  std::size_t best = 0;
  if (const auto* p = std::get_if<IntPoly>(&q)) {
    return p->degree() < 0 ? 0 : static_cast<std::size_t>(p->degree()) * h.at(0);
  }
  for (const auto& [e, c] : std::get<MultiPoly>(q).terms()) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<std::size_t>(e[i] < 0 ? -e[i] : e[i]) * h.at(i);
    best = std::max(best, s);
  }
  return best;
}

// Deterministic sample sequence: 1, -1, 2, -2, ... per coordinate, with the
// coordinates of a multivariate point offset so they differ from each other.
std::vector<Rational> sample_point(std::size_t index, std::size_t arity) {
  std::vector<Rational> out(arity);
  const long base = static_cast<long>(index / 2) + 1;
  const long sign = index % 2 == 0 ? 1 : -1;
  for (std::size_t j = 0; j < arity; ++j) {
    out[j] = Rational(sign * (base * static_cast<long>(j + 1) + static_cast<long>(j)), static_cast<long>(j + 1));
    out[j].canonicalize();
  }
  return out;
}

struct GraphOutcome {
  VerdictStatus status = VerdictStatus::pass;
  bool certified = false;
  std::size_t points = 0;
  std::optional<ReductionCounterexample> counterexample;
};

}  // namespace

std::size_t required_points(const PolyValue& p_value, const PolyValue& q_value, const SimilarityTriple& t,
                            const SimExpr& prefactor, std::span<const SimExpr> subs) {
  std::vector<std::size_t> h;
  h.reserve(subs.size());
  for (const auto& g : subs) h.push_back(height(g, t));
  return poly_degree(p_value) + height(prefactor, t) + q_substituted_height(q_value, h) + 1;
}

ReductionVerdict verify_prefactor_reduction(const ReductionSpec& spec, std::span<const Graph> corpus,
                                            std::span<const std::vector<Rational>> points,
                                            const FamilyEvaluator& evaluator, std::size_t threads) {
  const SimExpr prefactor = parse_simexpr(spec.prefactor);
  std::vector<SimExpr> subs;
  for (const auto& s : spec.subs) subs.push_back(parse_simexpr(s));
  const std::size_t p_arity = family_arity(spec.family_p);
  if (subs.size() != family_arity(spec.family_q)) {
    throw DomainError("reduction needs " + std::to_string(family_arity(spec.family_q)) + " substitutions for " +
                      std::string(family_name(spec.family_q)));
  }
  std::size_t used = prefactor.max_indeterminate();
  for (const auto& g : subs) used = std::max(used, g.max_indeterminate());
  if (used > p_arity) {
    throw DomainError("X" + std::to_string(used) + " is not a variable of " + std::string(family_name(spec.family_p)));
  }
  for (const auto& pt : points) {
    if (pt.size() != p_arity) throw DomainError("sample point arity does not match the source family");
  }

  ChromaticCache cache;
  FamilyEvaluator eval = evaluator;
  if (!eval) eval = [&cache](FamilyId id, const Graph& g) { return compute_family(id, g, &cache); };

  auto check = [&](std::size_t gi) {
    const Graph& g = corpus[gi];
    const auto t = similarity_triple(g);
    const PolyValue p = eval(spec.family_p, g);
    const PolyValue q = eval(spec.family_q, g);
    const std::size_t need = required_points(p, q, t, prefactor, subs);
    const std::size_t attempts = points.empty() ? need + 64 : points.size();
    GraphOutcome out;
    for (std::size_t i = 0; i < attempts && out.points < need; ++i) {
      std::vector<Rational> pt = points.empty() ? sample_point(i, p_arity) : points[i];
      auto rhs = reduction_rhs(q, t, prefactor, subs, pt);
      auto lhs = evaluate(p, pt);
      if (!rhs || !lhs) continue;
      ++out.points;
      if (*lhs != *rhs) {
        out.status = VerdictStatus::fail;
        out.counterexample = ReductionCounterexample{to_graph6(g), pt, *lhs, *rhs};
        return out;
      }
    }
    // A multivariate P is never certified, so agreement on fewer points than
    // the bound still counts as an (uncertified) pass there.
    if (out.points == 0 || (p_arity == 1 && out.points < need)) out.status = VerdictStatus::inconclusive;
    out.certified = p_arity == 1 && out.points >= need;
    return out;
  };

  auto outcomes = parallel_map(corpus.size(), check, threads);
  ReductionVerdict verdict;
  verdict.certified = p_arity == 1;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    ++verdict.graphs_checked;
    verdict.points_checked += o.points;
    verdict.certified = verdict.certified && o.certified;
    if (o.status == VerdictStatus::fail) {
      verdict.status = VerdictStatus::fail;
      verdict.counterexample = std::move(o.counterexample);
      verdict.certified = false;
      return verdict;
    }
    if (o.status == VerdictStatus::inconclusive && verdict.status == VerdictStatus::pass) {
      verdict.status = VerdictStatus::inconclusive;
      verdict.inconclusive_graph = to_graph6(corpus[i]);
    }
  }
  if (verdict.status != VerdictStatus::pass) verdict.certified = false;
  return verdict;
}

std::string to_json(const ReductionSpec& spec) {
  nlohmann::ordered_json j;
  j["family_p"] = std::string(family_name(spec.family_p));
  j["family_q"] = std::string(family_name(spec.family_q));
  j["prefactor"] = spec.prefactor;
  j["subs"] = spec.subs;
  return j.dump();
}

ReductionSpec reduction_spec_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid reduction spec JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  ReductionSpec spec;
  try {
    spec.family_p = family_from_name(j.at("family_p").get<std::string>());
    spec.family_q = family_from_name(j.at("family_q").get<std::string>());
    spec.prefactor = j.value("prefactor", std::string("1"));
    spec.subs = j.at("subs").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("reduction spec: ") + e.what());
  }
  return spec;
}

}  // namespace grpoly
