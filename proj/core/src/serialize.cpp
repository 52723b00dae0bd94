#include "grpoly/serialize.hpp"

#include <nlohmann/json.hpp>

#include "grpoly/graph6.hpp"

namespace grpoly {

using Json = nlohmann::ordered_json;

namespace {

Json poly_json(const IntPoly& p) {
  Json j;
  j["basis"] = to_string(p.basis());
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json value_json(const PolyValue& v) {
  if (const auto* p = std::get_if<IntPoly>(&v)) return poly_json(*p);
  const auto& mp = std::get<MultiPoly>(v);
  Json j;
  j["arity"] = mp.arity();
  Json terms = Json::array();
  for (const auto& [e, c] : mp.terms()) {
    Json t;
    t["exponents"] = e;
    t["coeff"] = c.get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json triple_json(const SimilarityTriple& t) {
  Json j;
  j["n"] = t.n;
  j["m"] = t.m;
  j["k"] = t.k;
  return j;
}

Json sign_json(const SignProfile& s) {
  Json j;
  j["negative"] = s.negative;
  j["zero"] = s.zero;
  j["positive"] = s.positive;
  return j;
}

Json string_map(const std::map<std::string, std::string>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

}  // namespace

std::string to_json(const IntPoly& p) { return poly_json(p).dump(); }

IntPoly int_poly_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  try {
    const Basis basis = basis_from_string(j.value("basis", std::string("power")));
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) {
      const std::string s = c.is_string() ? c.get<std::string>() : c.dump();
      Integer v;
      if (v.set_str(s, 10) != 0) throw DomainError("bad coefficient '" + s + "'");
      coeffs.push_back(v);
    }
    return IntPoly(std::move(coeffs), basis);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("polynomial JSON: ") + e.what());
  }
}

std::string to_json(const PolyValue& v) { return value_json(v).dump(); }

std::string to_json(const RootReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["real_rooted"] = r.real_rooted;
  j["distinct"] = sign_json(r.distinct);
  j["with_multiplicity"] = sign_json(r.with_multiplicity);
  Json ints = Json::array();
  for (const auto& [root, mult] : r.integer_roots) {
    Json e;
    e["root"] = root.get_str();
    e["multiplicity"] = mult;
    ints.push_back(std::move(e));
  }
  j["integer_roots"] = std::move(ints);
  Json roots = Json::array();
  for (const auto& z : r.roots) {
    Json e;
    e["re"] = format_fixed(z.z.real());
    e["im"] = format_fixed(z.z.imag());
    e["modulus"] = format_fixed(z.modulus());
    roots.push_back(std::move(e));
  }
  j["roots"] = std::move(roots);
  j["rouche_bound"] = r.rouche_bound.get_str();
  j["max_modulus"] = format_fixed(r.max_modulus);
  return j.dump();
}

std::string to_json(const TransformRecord& r) {
  Json j;
  j["transform"] = r.transform;
  j["params"] = string_map(r.params);
  j["input"] = poly_json(r.input);
  j["output"] = poly_json(r.output);
  j["inverse_data"] = string_map(r.inverse_data);
  return j.dump();
}

std::string to_json(const EquivalenceVerdict& v) {
  Json j;
  j["left"] = v.left;
  j["right"] = v.right;
  j["relation"] = to_string(v.relation);
  Json ws = Json::array();
  for (const auto& w : v.witnesses) {
    Json e;
    e["direction"] = w.direction;
    e["class"] = triple_json(w.triple);
    e["g1"] = to_graph6(w.g1);
    e["g2"] = to_graph6(w.g2);
    e["val1_left"] = value_json(w.left1);
    e["val2_left"] = value_json(w.left2);
    e["val1_right"] = value_json(w.right1);
    e["val2_right"] = value_json(w.right2);
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  return j.dump();
}

std::string to_json(const ReductionVerdict& v, const ReductionSpec& spec) {
  Json j;
  j["family_p"] = std::string(family_name(spec.family_p));
  j["family_q"] = std::string(family_name(spec.family_q));
  j["prefactor"] = spec.prefactor;
  j["subs"] = spec.subs;
  j["status"] = std::string(to_string(v.status));
  j["certified"] = v.certified;
  j["graphs_checked"] = v.graphs_checked;
  j["points_checked"] = v.points_checked;
  if (v.counterexample) {
    Json c;
    c["graph6"] = v.counterexample->graph6;
    Json pt = Json::array();
    for (const auto& x : v.counterexample->point) pt.push_back(x.get_str());
    c["point"] = std::move(pt);
    c["lhs"] = v.counterexample->lhs.get_str();
    c["rhs"] = v.counterexample->rhs.get_str();
    j["counterexample"] = std::move(c);
  }
  if (!v.inconclusive_graph.empty()) j["inconclusive_graph"] = v.inconclusive_graph;
  return j.dump();
}

std::string to_json(const DensityWitness& w, bool include_graph) {
  Json j;
  j["a"] = w.a.get_str();
  j["b"] = w.b.get_str();
  j["c"] = w.c.get_str();
  j["unscaled"] = triple_json(w.unscaled);
  j["scale"] = w.scale.get_str();
  j["triple"] = triple_json(w.triple);
  j["distance_squared"] = w.distance_squared.get_str();
  j["exact_zero"] = w.exact_zero;
  j["residual"] = format_fixed(w.residual);
  if (include_graph) j["graph6"] = to_graph6(w.graph);
  return j.dump();
}

std::string to_json(const Collision& c) {
  Json j;
  j["class"] = triple_json(c.triple);
  Json members = Json::array();
  for (const auto& g : c.block) members.push_back(to_graph6(g));
  j["graphs"] = std::move(members);
  j["value"] = value_json(c.value);
  return j.dump();
}

}  // namespace grpoly
