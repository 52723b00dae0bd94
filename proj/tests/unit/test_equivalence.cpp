#include <gtest/gtest.h>

#include "grpoly/catalog.hpp"
#include "grpoly/enumerate.hpp"
#include "grpoly/equivalence.hpp"
#include "grpoly/error.hpp"
#include "grpoly/simfun.hpp"

using namespace grpoly;

namespace {

Relation mirrored(Relation r) {
  switch (r) {
    case Relation::left_refines_right:
      return Relation::right_refines_left;
    case Relation::right_refines_left:
      return Relation::left_refines_right;
    default:
      return r;
  }
}

}  // namespace

TEST(SimilarityClasses, CoverEveryGraphOnce) {
  const auto classes = similarity_classes(6);
  std::size_t members = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const auto& g : classes[i].members) EXPECT_EQ(similarity_triple(g), classes[i].triple);
    if (i > 0) EXPECT_LT(classes[i - 1].triple, classes[i].triple);
    members += classes[i].members.size();
  }
  EXPECT_EQ(members, 1u + 2 + 4 + 11 + 34 + 156);
  EXPECT_THROW(similarity_classes(kEquivalenceMaxVertices + 1), SizeCapError);
}

TEST(ValuePartition, GroupsEqualValuesInFirstSeenOrder) {
  const std::vector<PolyValue> values = {IntPoly({1}), IntPoly({2}), IntPoly({1}), IntPoly({3}), IntPoly({2})};
  const std::vector<std::vector<std::size_t>> expected = {{0, 2}, {1, 4}, {3}};
  EXPECT_EQ(value_partition(values), expected);
}

TEST(DpCompare, Reflexive) {
  for (FamilyId id : kAllFamilies) {
    const auto v = dp_compare(id, id, 5);
    EXPECT_EQ(v.relation, Relation::equivalent) << family_name(id);
    EXPECT_TRUE(v.witnesses.empty());
  }
}

TEST(DpCompare, SwappingMirrorsTheVerdict) {
  const std::vector<std::pair<FamilyId, FamilyId>> pairs = {{FamilyId::charA, FamilyId::charL},
                                                            {FamilyId::chromatic, FamilyId::tutte},
                                                            {FamilyId::independence, FamilyId::clique},
                                                            {FamilyId::matchingGen, FamilyId::charA}};
  for (auto [a, b] : pairs) {
    const auto ab = dp_compare(a, b, 6);
    const auto ba = dp_compare(b, a, 6);
    EXPECT_EQ(ba.relation, mirrored(ab.relation));
    EXPECT_EQ(ab.witnesses.size(), ba.witnesses.size());
  }
}

TEST(DpCompare, CliqueAndIndependenceDiffer) {
  const auto v = dp_compare(FamilyId::clique, FamilyId::independence, 6);
  EXPECT_NE(v.relation, Relation::equivalent);
  EXPECT_FALSE(v.witnesses.empty());
}

TEST(DpCompare, TutteRefinesChromatic) {
  const auto v = dp_compare(FamilyId::chromatic, FamilyId::tutte, 6);
  EXPECT_EQ(v.relation, Relation::right_refines_left);
  ASSERT_EQ(v.witnesses.size(), 1u);
  const auto& w = v.witnesses.front();
  EXPECT_EQ(w.direction, "left-not-forced");
  EXPECT_EQ(w.left1, w.left2);
  EXPECT_NE(w.right1, w.right2);
  EXPECT_EQ(similarity_triple(w.g1), w.triple);
  EXPECT_EQ(similarity_triple(w.g2), w.triple);
}

TEST(DpCompare, MatchingVariantsAreEquivalent) {
  // The matching counts determine each form, and each form determines the counts given n.
  EXPECT_EQ(dp_compare(FamilyId::matchingDefect, FamilyId::matchingGen, 7).relation, Relation::equivalent);
  EXPECT_EQ(dp_compare(FamilyId::matchingBiv, FamilyId::matchingGen, 6).relation, Relation::equivalent);
  EXPECT_EQ(dp_compare(FamilyId::vertexCover, FamilyId::independence, 6).relation, Relation::equivalent);
}

TEST(DpCompare, AdjacencyAndLaplacianAreIncomparable) {
  const auto v = dp_compare(FamilyId::charA, FamilyId::charL, 6);
  EXPECT_EQ(v.relation, Relation::incomparable);
  ASSERT_EQ(v.witnesses.size(), 2u);
  for (const auto& w : v.witnesses) {
    if (w.direction == "left-not-forced") {
      EXPECT_EQ(w.left1, w.left2);
      EXPECT_NE(w.right1, w.right2);
    } else {
      EXPECT_EQ(w.direction, "right-not-forced");
      EXPECT_EQ(w.right1, w.right2);
      EXPECT_NE(w.left1, w.left2);
    }
  }
}

TEST(DpCompare, ThreadCountDoesNotChangeWitnesses) {
  const auto a = dp_compare(FamilyId::charA, FamilyId::charL, 6, 1);
  const auto b = dp_compare(FamilyId::charA, FamilyId::charL, 6, 3);
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    EXPECT_EQ(a.witnesses[i].g1, b.witnesses[i].g1);
    EXPECT_EQ(a.witnesses[i].g2, b.witnesses[i].g2);
  }
}

TEST(DpTransfer, DirectionIsExplicit) {
  // Tutte-equality forces chromatic-equality on every class, not the other way round.
  bool some_class_fails = false;
  for (const auto& cls : similarity_classes(6)) {
    EXPECT_TRUE(dp_transfer(FamilyId::chromatic, FamilyId::tutte, cls).holds);
    const auto r = dp_transfer(FamilyId::tutte, FamilyId::chromatic, cls);
    if (!r.holds) {
      some_class_fails = true;
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_EQ(r.witness->q1, r.witness->q2);
      EXPECT_NE(r.witness->p1, r.witness->p2);
    }
  }
  EXPECT_TRUE(some_class_fails);
}

TEST(DpCompare, SquaredFamiliesAreEquivalent) {
  // P and P^2 separate the same graphs, for the univariate matching polynomials.
  for (FamilyId id : {FamilyId::matchingDefect, FamilyId::matchingGen}) {
    const FamilyFunction base = family_function(id);
    const FamilyFunction squared = [base](const Graph& g) -> PolyValue {
      const IntPoly p = as_univariate(base(g));
      return p * p;
    };
    EXPECT_EQ(dp_compare(base, squared, 6).relation, Relation::equivalent);
  }
}

TEST(DpCompare, PrefactorPassesBothWaysImpliesEquivalent) {
  const auto corpus = enumerate_graphs_up_to(6);
  const ReductionSpec forward{FamilyId::vertexCover, FamilyId::independence, "X1^n", {"X1^(-1)"}};
  const ReductionSpec backward{FamilyId::independence, FamilyId::vertexCover, "X1^n", {"X1^(-1)"}};
  ASSERT_EQ(verify_prefactor_reduction(forward, corpus).status, VerdictStatus::pass);
  ASSERT_EQ(verify_prefactor_reduction(backward, corpus).status, VerdictStatus::pass);
  EXPECT_EQ(dp_compare(FamilyId::vertexCover, FamilyId::independence, 6).relation, Relation::equivalent);
}

TEST(Collisions, ChromaticCollisionsExist) {
  const auto cols = find_collisions(FamilyId::chromatic, 5);
  ASSERT_FALSE(cols.empty());
  for (const auto& c : cols) {
    ASSERT_GE(c.block.size(), 2u);
    for (const auto& g : c.block) EXPECT_EQ(compute_family(FamilyId::chromatic, g), c.value);
  }
  // Every tree on n vertices has chromatic polynomial X(X-1)^(n-1).
  const auto five = find_collisions(FamilyId::chromatic, 5);
  bool found_trees = false;
  for (const auto& c : five) found_trees |= c.triple == SimilarityTriple{5, 4, 1} && c.block.size() == 3;
  EXPECT_TRUE(found_trees);
}
