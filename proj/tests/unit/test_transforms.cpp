#include <gtest/gtest.h>

#include "grpoly/catalog.hpp"
#include "grpoly/enumerate.hpp"
#include "grpoly/equivalence.hpp"
#include "grpoly/error.hpp"
#include "grpoly/graph6.hpp"
#include "grpoly/roots.hpp"
#include "grpoly/transforms.hpp"

using namespace grpoly;

namespace {

const std::vector<FamilyId> kNonNegative = {FamilyId::matchingGen, FamilyId::independence, FamilyId::clique,
                                            FamilyId::domination,  FamilyId::edgeCover,    FamilyId::vertexCover};

std::vector<Graph> corpus(std::size_t nmax) { return enumerate_graphs_up_to(nmax); }

IntPoly uni(FamilyId id, const Graph& g) { return as_univariate(compute_family(id, g)); }

std::size_t total_multiplicity(const std::map<Integer, std::size_t>& roots) {
  std::size_t total = 0;
  for (const auto& [r, m] : roots) total += m;
  return total;
}

}  // namespace

TEST(Transforms, NegateAndSquareRelocateRoots) {
  for (const auto& g : corpus(6)) {
    for (FamilyId id : kNonNegative) {
      const IntPoly p = uni(id, g);
      if (p.degree() < 1) continue;
      EXPECT_EQ(sign_profile(negate_variable(p)).negative, 0u) << to_graph6(g);
      const auto sq = sign_profile(square_variable(p));
      EXPECT_EQ(sq.negative + sq.positive, 0u) << to_graph6(g);
      EXPECT_EQ(unsquare_variable(square_variable(p)), p);
      EXPECT_EQ(negate_variable(negate_variable(p)), p);
    }
  }
  EXPECT_THROW(unsquare_variable(IntPoly({0, 1})), DomainError);
}

TEST(Transforms, InterleaveIsABijection) {
  for (const auto& g : corpus(6)) {
    for (FamilyId id : univariate_families()) {
      const IntPoly p = uni(id, g);
      const IntPoly e = interleave_nonneg(p);
      for (const auto& c : e.coeffs()) EXPECT_GE(c, 0);
      EXPECT_EQ(deinterleave(e), p) << family_name(id) << " " << to_graph6(g);
    }
  }
  EXPECT_EQ(interleave_nonneg(IntPoly({-2, 3})), IntPoly({0, 2, 3}));
  EXPECT_THROW(deinterleave(IntPoly({1, 1})), DomainError);
  EXPECT_THROW(deinterleave(IntPoly({-1})), DomainError);
}

TEST(Transforms, RealifyEncodesCoefficientsAsIntegerRoots) {
  for (const auto& g : corpus(5)) {
    for (FamilyId id : univariate_families()) {
      const IntPoly p = uni(id, g);
      const IntPoly e = interleave_nonneg(p);
      const std::size_t s = static_cast<std::size_t>(std::max(0, e.degree()));
      const IntPoly q = realify(e, s);
      const auto roots = integer_roots(q);
      EXPECT_EQ(total_multiplicity(roots), static_cast<std::size_t>(q.degree()));
      for (const auto& [r, m] : roots) {
        EXPECT_GE(r, 0);
        EXPECT_LE(r, static_cast<long>(s));
      }
      EXPECT_EQ(recover_coefficients(q, s), e);
      EXPECT_EQ(deinterleave(recover_coefficients(q, s)), p);
    }
  }
  EXPECT_EQ(realify(IntPoly({1, 0, 2}), 2), from_roots(std::vector<RootMultiplicity>{
                                                 {Rational(0), 2}, {Rational(1), 1}, {Rational(2), 3}}));
  EXPECT_THROW(realify(IntPoly({-1, 1}), 1), DomainError);
  EXPECT_THROW(realify(IntPoly({1, 1, 1}), 1), DomainError);
}

TEST(Transforms, RootEncodeKeepsTheCoefficientMultiset) {
  const IntPoly q = realify_rootencode(IntPoly({3, 1, 3}));
  const auto roots = integer_roots(q);
  EXPECT_EQ(roots.at(Integer(3)), 2u);
  EXPECT_EQ(roots.at(Integer(1)), 1u);
  EXPECT_EQ(q.degree(), 3);
}

TEST(Transforms, DensePrefactors) {
  EXPECT_EQ(dense_real_prefactor(SimilarityTriple{5, 7, 2}, PrefactorSign::plus), IntPoly({10, -29, 10}));
  EXPECT_EQ(dense_real_prefactor(SimilarityTriple{5, 7, 2}, PrefactorSign::minus), IntPoly({10, 29, 10}));
  EXPECT_EQ(quadrant_factor(1, 2, 3, QuadrantHalf::right), IntPoly({5, -6, 9}));
  EXPECT_EQ(quadrant_factor(1, 2, 3, QuadrantHalf::left), IntPoly({5, 6, 9}));
  EXPECT_EQ(quadrant_prefactor(SimilarityTriple{4, 3, 1}, QuadrantHalf::right).degree(), 12);
}

TEST(Transforms, DensifyModes) {
  for (const auto& g : corpus(5)) {
    const auto t = similarity_triple(g);
    const IntPoly mu = uni(FamilyId::matchingDefect, g);
    EXPECT_TRUE(is_real_rooted(densify(mu, t, DensifyMode::real_positive))) << to_graph6(g);
    const IntPoly c = densify(mu, t, DensifyMode::complex);
    const Integer vals[] = {Integer(t.n), Integer(t.m), Integer(t.k)};
    if (t.m == 0) {
      EXPECT_EQ(c, mu);
      continue;
    }
    // Every prefactor root (a + bi)/c over the six assignments is a root of the output.
    const int order[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& o : order) {
      Rational re_c(vals[o[0]], vals[o[2]]);
      Rational im_c(vals[o[1]], vals[o[2]]);
      re_c.canonicalize();
      im_c.canonicalize();
      const auto [vr, vi] = evaluate_gaussian(c, re_c, im_c);
      EXPECT_EQ(vr, 0);
      EXPECT_EQ(vi, 0);
      const std::complex<double> z(re_c.get_d(), im_c.get_d());
      const auto v = evaluate(c, z);
      double scale = 0;
      double pw = 1;
      for (const auto& coef : c.coeffs()) {
        scale += std::abs(coef.get_d()) * pw;
        pw *= std::abs(z);
      }
      EXPECT_LE(std::abs(v) / scale, 1e-9);
    }
  }
}

TEST(Transforms, DensityWitnessWorkedCase) {
  const DensityWitness w = density_witness(Rational(1, 3), Rational(2, 3), Rational(1, 100));
  EXPECT_EQ(w.a, 1);
  EXPECT_EQ(w.b, 2);
  EXPECT_EQ(w.c, 3);
  EXPECT_EQ(w.triple, (SimilarityTriple{12, 18, 6}));
  EXPECT_EQ(similarity_triple(w.graph), w.triple);
  EXPECT_TRUE(w.exact_zero);
  EXPECT_EQ(w.distance_squared, 0);
  EXPECT_THROW(density_witness(Rational(-1, 3), Rational(1, 2), Rational(1, 100)), DomainError);
  EXPECT_THROW(density_witness(Rational(1, 3), Rational(1, 2), Rational(0)), DomainError);
}

TEST(Transforms, DensityWitnessIsWithinEps) {
  for (long a = 1; a < 10; ++a) {
    for (long b = 1; b < 10; ++b) {
      const Rational re(a, 10);
      const Rational im(b, 10);
      const Rational eps(1, 20);
      const DensityWitness w = density_witness(re, im, eps);
      EXPECT_NE(w.a, w.b);
      EXPECT_NE(w.b, w.c);
      EXPECT_NE(w.a, w.c);
      EXPECT_LE(w.distance_squared, eps * eps);
      EXPECT_TRUE(w.exact_zero);
      EXPECT_LE(w.residual, 1e-9);
      EXPECT_EQ(similarity_triple(w.graph), w.triple);
    }
  }
}

TEST(Transforms, RoucheScalingPutsRootsInDiskOfRadiusTwo) {
  for (const auto& g : corpus(6)) {
    for (FamilyId id : univariate_families()) {
      const IntPoly p = uni(id, g);
      if (p.degree() < 1) continue;
      Integer a = max_lower_abs(p);
      if (a < 1) a = 1;
      const IntPoly q = rouche_scale(p, a);
      for (const auto& r : complex_roots(q)) EXPECT_LE(r.modulus(), 2.0 + 1e-6) << to_graph6(g);
      EXPECT_EQ(rouche_unscale(q, a), p);
    }
  }
  EXPECT_THROW(rouche_scale(IntPoly({5, 1}), 2), DomainError);
  EXPECT_THROW(rouche_scale(IntPoly({1, -1}), 1), DomainError);
}

TEST(Transforms, ScaleForGraphChecksHeights) {
  const Graph k4 = complete_graph(4);
  const IntPoly chi = uni(FamilyId::chromatic, k4);  // coefficients up to 11
  EXPECT_THROW(scale_for_graph(chi, similarity_triple(k4), 1), DomainError);
  const IntPoly q = scale_for_graph(chi, similarity_triple(k4), 2);
  EXPECT_EQ(rouche_unscale(q, 16), chi);
}

TEST(Transforms, RemapMovesRoots) {
  const IntPoly p = IntPoly({-2, 1}) * IntPoly({3, 1});  // roots 2, -3
  const RatPoly q = remap_roots(p, Rational(1, 2), Rational(1));
  EXPECT_EQ(q.evaluate(Rational(2)), 0);
  EXPECT_EQ(q.evaluate(Rational(-1, 2)), 0);
  EXPECT_GT(q.leading(), 0);
  EXPECT_THROW(remap_roots(p, Rational(0), Rational(1)), DomainError);
}

TEST(Transforms, PermutationsInvert) {
  const std::vector<std::size_t> perm = {2, 0, 3, 1};
  const IntPoly p({5, 6, 7, 8});
  const IntPoly q = permute_coefficients(p, perm);
  EXPECT_EQ(q, IntPoly({7, 5, 8, 6}));
  EXPECT_EQ(permute_coefficients(q, inverse_permutation(perm)), p);
  EXPECT_THROW(permute_coefficients(p, {0, 0, 1, 2}), DomainError);
}

TEST(Transforms, ChainParsing) {
  const auto steps = parse_transform_chain("interleave,realify:s=9,permute:perm=1/0");
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[1].params.at("s"), "9");
  EXPECT_EQ(steps[2].params.at("perm"), "1/0");
  EXPECT_THROW(parse_transform_chain("spin"), DomainError);
  EXPECT_THROW(parse_transform_chain("realify:s"), DomainError);
  EXPECT_EQ(transform_names().size(), 12u);
}

TEST(Transforms, RemapParametersAreDecimal) {
  const IntPoly p({-2, 1});
  const TransformStep leading_zero{"remap", {{"alpha", "010"}, {"beta", "0"}}};
  EXPECT_EQ(apply_transform(p, leading_zero, SimilarityTriple{2, 1, 1}).params.at("alpha"), "10");
  for (const char* bad : {"1/0", "0x10", "abc"}) {
    const TransformStep step{"remap", {{"alpha", bad}}};
    EXPECT_THROW(apply_transform(p, step, SimilarityTriple{2, 1, 1}), DomainError) << bad;
  }
}

TEST(Transforms, RecordsInvert) {
  const Graph g = named_graph("prufer:1,1,2");
  const auto t = similarity_triple(g);
  const IntPoly mu = uni(FamilyId::matchingDefect, g);
  const IntPoly in = uni(FamilyId::independence, g);
  struct Case {
    IntPoly input;
    std::string chain;
  };
  const std::vector<Case> cases = {
      {mu, "negate"},          {in, "square"},       {mu, "interleave"},    {in, "realify"},
      {in, "densify"},         {in, "densify:mode=real"}, {mu, "rouche"},  {in, "scale:r=2"},
      {mu, "remap:alpha=2:beta=-1/3"}, {in, "permute"}, {mu, "interleave,realify,recover,deinterleave"},
  };
  for (const auto& c : cases) {
    IntPoly cur = c.input;
    std::vector<TransformRecord> records;
    for (const auto& step : parse_transform_chain(c.chain)) {
      records.push_back(apply_transform(cur, step, t));
      cur = records.back().output;
    }
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
      const auto back = invert_transform(*it, t);
      ASSERT_TRUE(back.has_value()) << c.chain;
      EXPECT_EQ(*back, it->input) << c.chain;
    }
  }
  const auto rec = apply_transform(in, TransformStep{"rootencode", {}}, t);
  EXPECT_FALSE(invert_transform(rec, t).has_value());
}

TEST(Transforms, InvertibleTransformsPreserveValuePartitions) {
  const auto classes = similarity_classes(5);
  const std::vector<std::string> chains = {"interleave", "interleave,realify", "densify", "negate", "square",
                                           "remap:alpha=3:beta=2", "permute"};
  for (FamilyId id : {FamilyId::chromatic, FamilyId::independence, FamilyId::charA}) {
    const FamilyFunction base = family_function(id);
    for (const auto& chain : chains) {
      const auto steps = parse_transform_chain(chain);
      const FamilyFunction transformed = [&, steps](const Graph& g) -> PolyValue {
        IntPoly cur = as_univariate(base(g));
        for (const auto& s : steps) cur = apply_transform(cur, s, similarity_triple(g)).output;
        return cur;
      };
      for (const auto& cls : classes) {
        EXPECT_EQ(value_partition(base, cls), value_partition(transformed, cls)) << chain;
      }
    }
  }
}
