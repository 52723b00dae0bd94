#include <map>
#include <queue>

#include "grpoly/canonical.hpp"
#include "grpoly/catalog.hpp"
#include "grpoly/simfun.hpp"

namespace grpoly {

namespace {

using TutteMemo = std::map<std::vector<std::uint8_t>, MultiPoly>;

MultiPoly one2() { return MultiPoly::constant(2, 1); }

// 1 + Y + ... + Y^(p-1)
MultiPoly y_geometric(unsigned p) {
  MultiPoly out(2);
  for (unsigned i = 0; i < p; ++i) out.add_term({0, static_cast<int>(i)}, 1);
  return out;
}

std::vector<std::vector<std::size_t>> weighted_components(const WeightMatrix& w) {
  std::vector<std::size_t> label(w.n, w.n);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < w.n; ++s) {
    if (label[s] != w.n) continue;
    std::vector<std::size_t> members{s};
    label[s] = out.size();
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::size_t u = members[head];
      for (std::size_t v = 0; v < w.n; ++v) {
        if (w(u, v) != 0 && label[v] == w.n) {
          label[v] = out.size();
          members.push_back(v);
        }
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

WeightMatrix restrict(const WeightMatrix& w, const std::vector<std::size_t>& keep) {
  WeightMatrix out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = w(keep[i], keep[j]);
  }
  return out;
}

bool connected_without(const WeightMatrix& w, std::size_t u, std::size_t v) {
  std::vector<bool> seen(w.n, false);
  std::queue<std::size_t> q;
  q.push(u);
  seen[u] = true;
  while (!q.empty()) {
    const std::size_t a = q.front();
    q.pop();
    for (std::size_t b = 0; b < w.n; ++b) {
      if (seen[b] || w(a, b) == 0) continue;
      if ((a == u && b == v) || (a == v && b == u)) continue;
      if (b == v) return true;
      seen[b] = true;
      q.push(b);
    }
  }
  return false;
}

// Merges v into u; the u-v bundle disappears (its loops are accounted for by the caller).
WeightMatrix contract_pair(const WeightMatrix& w, std::size_t u, std::size_t v) {
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < w.n; ++x) {
    if (x != v) keep.push_back(x);
  }
  WeightMatrix out = restrict(w, keep);
  const std::size_t uu = u < v ? u : u - 1;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const std::size_t x = keep[i];
    if (x == u) continue;
    const unsigned merged = static_cast<unsigned>(out(uu, i)) + w(v, x);
    if (merged > 255) throw SizeCapError("tutte_poly: edge multiplicity overflow");
    out.at(uu, i) = static_cast<std::uint8_t>(merged);
    out.at(i, uu) = static_cast<std::uint8_t>(merged);
  }
  out.at(uu, uu) = 0;
  return out;
}

MultiPoly tutte_any(const WeightMatrix& w, TutteMemo& memo);

MultiPoly tutte_connected(const WeightMatrix& w, TutteMemo& memo) {
  if (w.n == 1) return one2();
  if (w.n == 2) return MultiPoly::variable(2, 0) + y_geometric(w(0, 1)) - one2();

  auto labeling = canonical_labeling(w);
  std::vector<std::uint8_t> key;
  key.reserve(labeling.code.size() + 1);
  key.push_back(static_cast<std::uint8_t>(w.n));
  key.insert(key.end(), labeling.code.begin(), labeling.code.end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Vertex with the fewest distinct neighbours, paired with its heaviest neighbour.
  std::size_t u = 0;
  std::size_t fewest = w.n + 1;
  for (std::size_t a = 0; a < w.n; ++a) {
    std::size_t nb = 0;
    for (std::size_t b = 0; b < w.n; ++b) nb += w(a, b) != 0 ? 1 : 0;
    if (nb < fewest) {
      fewest = nb;
      u = a;
    }
  }
  std::size_t v = w.n;
  for (std::size_t b = 0; b < w.n; ++b) {
    if (w(u, b) != 0 && (v == w.n || w(u, b) > w(u, v))) v = b;
  }
  const unsigned p = w(u, v);

  MultiPoly contracted = tutte_any(contract_pair(w, u, v), memo);
  MultiPoly result(2);
  if (!connected_without(w, u, v)) {
    result = (MultiPoly::variable(2, 0) + y_geometric(p) - one2()) * contracted;
  } else {
    WeightMatrix deleted = w;
    deleted.at(u, v) = 0;
    deleted.at(v, u) = 0;
    result = tutte_any(deleted, memo) + y_geometric(p) * contracted;
  }
  memo.emplace(std::move(key), result);
  return result;
}

MultiPoly tutte_any(const WeightMatrix& w, TutteMemo& memo) {
  auto comps = weighted_components(w);
  if (comps.size() == 1) return tutte_connected(w, memo);
  MultiPoly out = one2();
  for (const auto& c : comps) {
    if (c.size() > 1) out = out * tutte_connected(restrict(w, c), memo);
  }
  return out;
}

}  // namespace

MultiPoly tutte_poly(const Graph& g) {
  if (g.n() > kTutteMaxVertices) {
    throw SizeCapError("tutte_poly supports n <= " + std::to_string(kTutteMaxVertices));
  }
  TutteMemo memo;
  return tutte_any(weight_matrix(g), memo);
}

MultiPoly universal_tutte_poly(const Graph& g) {
  const auto t = similarity_triple(g);
  const auto k = static_cast<int>(t.k);
  const auto nu = static_cast<int>(t.nu());
  const auto rho = static_cast<int>(t.rho());
  const MultiPoly base = tutte_poly(g);
  MultiPoly out(5);
  for (const auto& [e, c] : base.terms()) {
    const int i = e[0];
    const int j = e[1];
    out.add_term({i, j, k + i - j, nu, rho - i}, c);
  }
  return out;
}

UniversalTutteCheck universal_tutte_check(const Graph& g, std::span<const Rational> point) {
  if (point.size() != 5) throw DomainError("universal_tutte_check needs a point (X, Y, U, V, W)");
  if (point[2] == 0) throw DomainError("universal_tutte_check: U must be nonzero");
  if (point[4] == 0) throw DomainError("universal_tutte_check: W must be nonzero");

  static const SimExpr prefactor = parse_simexpr("X3^k*X4^nu*X5^rho");
  static const std::vector<SimExpr> subs = {parse_simexpr("X3*X1/X5"), parse_simexpr("X2/X3")};

  UniversalTutteCheck out;
  const auto stored = universal_tutte_poly(g).evaluate(point);
  const auto via_prefactor = reduction_rhs(PolyValue(tutte_poly(g)), similarity_triple(g), prefactor, subs, point);
  if (!stored || !via_prefactor) throw DomainError("universal_tutte_check: evaluation hit a pole");
  out.stored_value = *stored;
  out.prefactor_value = *via_prefactor;
  out.holds = out.stored_value == out.prefactor_value;
  return out;
}

}  // namespace grpoly
