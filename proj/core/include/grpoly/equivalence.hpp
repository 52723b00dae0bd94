#pragma once

/// \file equivalence.hpp
/// \brief Empirical comparison of distinctive power on similarity classes.
///
/// Two graphs are similar when they share (n, m, k). A family P "transfers"
/// from Q on a class when Q-equality of two members forces P-equality. The
/// comparison of two families runs the transfer check in both directions over
/// every similarity class of the enumerated graphs up to some order.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grpoly/catalog.hpp"
#include "grpoly/graph.hpp"

namespace grpoly {

inline constexpr std::size_t kEquivalenceMaxVertices = 7;

struct SimilarityClass {
  SimilarityTriple triple;
  /// Pairwise non-isomorphic, in enumeration order.
  std::vector<Graph> members;
};

/// Classes of all graphs on 1..nmax vertices ordered by triple.
std::vector<SimilarityClass> similarity_classes(std::size_t nmax);

using FamilyFunction = std::function<PolyValue(const Graph&)>;

/// Wraps a catalog family; chromatic results share one concurrency-safe cache.
FamilyFunction family_function(FamilyId id);

/// Fibers of the family on the class as member-index blocks, ordered by first member.
std::vector<std::vector<std::size_t>> value_partition(const FamilyFunction& family, const SimilarityClass& cls);
std::vector<std::vector<std::size_t>> value_partition(const std::vector<PolyValue>& values);

struct WitnessPair {
  SimilarityTriple triple;
  Graph g1;
  Graph g2;
  PolyValue p1;
  PolyValue p2;
  PolyValue q1;
  PolyValue q2;
};

struct TransferResult {
  bool holds = true;
  /// First pair (in member order) with Q(g1) = Q(g2) but P(g1) != P(g2).
  std::optional<WitnessPair> witness;
};

/// True iff on this class Q-equality forces P-equality.
TransferResult dp_transfer(const FamilyFunction& p, const FamilyFunction& q, const SimilarityClass& cls);
TransferResult dp_transfer(FamilyId p, FamilyId q, const SimilarityClass& cls);

enum class Relation { equivalent, left_refines_right, right_refines_left, incomparable };
std::string to_string(Relation r);

struct VerdictWitness {
  /// "left-not-forced" when left-equal members differ on the right family,
  /// "right-not-forced" for the mirror case.
  std::string direction;
  SimilarityTriple triple;
  Graph g1;
  Graph g2;
  PolyValue left1;
  PolyValue left2;
  PolyValue right1;
  PolyValue right2;
};

struct EquivalenceVerdict {
  std::string left;
  std::string right;
  Relation relation = Relation::equivalent;
  /// At most one witness per failed direction, minimal in enumeration order.
  std::vector<VerdictWitness> witnesses;
  std::size_t classes_checked = 0;
};

/// left-refines-right: equal left values force equal right values on every
/// class (left separates at least as much). `threads` = 0 uses the default.
EquivalenceVerdict dp_compare(const FamilyFunction& left, const FamilyFunction& right, std::size_t nmax,
                              const std::string& left_name = "left", const std::string& right_name = "right",
                              std::size_t threads = 0);
EquivalenceVerdict dp_compare(FamilyId left, FamilyId right, std::size_t nmax, std::size_t threads = 0);
/// Same comparison on an explicit list of classes.
EquivalenceVerdict dp_compare(const FamilyFunction& left, const FamilyFunction& right,
                              const std::vector<SimilarityClass>& classes, const std::string& left_name,
                              const std::string& right_name, std::size_t threads = 0);

struct Collision {
  SimilarityTriple triple;
  std::vector<Graph> block;
  PolyValue value;
};

/// Every fiber of size >= 2 on every class up to nmax, in class order.
std::vector<Collision> find_collisions(const FamilyFunction& family, std::size_t nmax, std::size_t threads = 0);
std::vector<Collision> find_collisions(FamilyId family, std::size_t nmax, std::size_t threads = 0);

}  // namespace grpoly
