#include "grpoly/equivalence.hpp"

#include <map>
#include <memory>

#include "grpoly/enumerate.hpp"
#include "grpoly/parallel.hpp"

namespace grpoly {

std::vector<SimilarityClass> similarity_classes(std::size_t nmax) {
  if (nmax == 0 || nmax > kEquivalenceMaxVertices) {
    throw SizeCapError("similarity_classes supports 1 <= nmax <= " + std::to_string(kEquivalenceMaxVertices));
  }
  std::map<SimilarityTriple, std::vector<Graph>> classes;
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (auto& g : enumerate_graphs(n)) classes[similarity_triple(g)].push_back(std::move(g));
  }
  std::vector<SimilarityClass> out;
  out.reserve(classes.size());
  for (auto& [t, members] : classes) out.push_back({t, std::move(members)});
  return out;
}

FamilyFunction family_function(FamilyId id) {
  auto cache = std::make_shared<ChromaticCache>();
  return [id, cache](const Graph& g) { return compute_family(id, g, cache.get()); };
}

std::vector<std::vector<std::size_t>> value_partition(const std::vector<PolyValue>& values) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool placed = false;
    for (std::size_t b = 0; b < blocks.size() && !placed; ++b) {
      if (values[blocks[b].front()] == values[i]) {
        blocks[b].push_back(i);
        placed = true;
      }
    }
    if (!placed) blocks.push_back({i});
  }
  return blocks;
}

std::vector<std::vector<std::size_t>> value_partition(const FamilyFunction& family, const SimilarityClass& cls) {
  std::vector<PolyValue> values;
  values.reserve(cls.members.size());
  for (const auto& g : cls.members) values.push_back(family(g));
  return value_partition(values);
}

namespace {

struct ClassValues {
  std::vector<PolyValue> a;
  std::vector<PolyValue> b;
};

ClassValues evaluate_class(const FamilyFunction& fa, const FamilyFunction& fb, const SimilarityClass& cls) {
  ClassValues v;
  v.a.reserve(cls.members.size());
  v.b.reserve(cls.members.size());
  for (const auto& g : cls.members) {
    v.a.push_back(fa(g));
    v.b.push_back(fb(g));
  }
  return v;
}

// First (i, j), i < j, with q[i] == q[j] and p[i] != p[j].
std::optional<std::pair<std::size_t, std::size_t>> first_violation(const std::vector<PolyValue>& p,
                                                                   const std::vector<PolyValue>& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (q[i] == q[j] && !(p[i] == p[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace

TransferResult dp_transfer(const FamilyFunction& p, const FamilyFunction& q, const SimilarityClass& cls) {
  const ClassValues v = evaluate_class(p, q, cls);
  TransferResult r;
  if (auto bad = first_violation(v.a, v.b)) {
    r.holds = false;
    const auto [i, j] = *bad;
    r.witness = WitnessPair{cls.triple, cls.members[i], cls.members[j], v.a[i], v.a[j], v.b[i], v.b[j]};
  }
  return r;
}

TransferResult dp_transfer(FamilyId p, FamilyId q, const SimilarityClass& cls) {
  return dp_transfer(family_function(p), family_function(q), cls);
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::equivalent:
      return "equivalent";
    case Relation::left_refines_right:
      return "left-refines-right";
    case Relation::right_refines_left:
      return "right-refines-left";
    case Relation::incomparable:
      return "incomparable";
  }
  return "?";
}

EquivalenceVerdict dp_compare(const FamilyFunction& left, const FamilyFunction& right,
                              const std::vector<SimilarityClass>& classes, const std::string& left_name,
                              const std::string& right_name, std::size_t threads) {
  struct ClassOutcome {
    std::optional<VerdictWitness> left_not_forced;
    std::optional<VerdictWitness> right_not_forced;
  };
  auto outcomes = parallel_map(
      classes.size(),
      [&](std::size_t c) {
        const auto& cls = classes[c];
        ClassOutcome o;
        if (cls.members.size() < 2) return o;
        const ClassValues v = evaluate_class(left, right, cls);
        auto make = [&](const char* dir, std::size_t i, std::size_t j) {
          return VerdictWitness{dir, cls.triple, cls.members[i], cls.members[j], v.a[i], v.a[j], v.b[i], v.b[j]};
        };
        // Equal left values but different right values.
        if (auto bad = first_violation(v.b, v.a)) o.left_not_forced = make("left-not-forced", bad->first, bad->second);
        if (auto bad = first_violation(v.a, v.b)) o.right_not_forced = make("right-not-forced", bad->first, bad->second);
        return o;
      },
      threads);

  EquivalenceVerdict verdict;
  verdict.left = left_name;
  verdict.right = right_name;
  verdict.classes_checked = classes.size();
  std::optional<VerdictWitness> lnf;
  std::optional<VerdictWitness> rnf;
  for (auto& o : outcomes) {
    if (!lnf && o.left_not_forced) lnf = std::move(o.left_not_forced);
    if (!rnf && o.right_not_forced) rnf = std::move(o.right_not_forced);
  }
  const bool left_refines = !lnf;
  const bool right_refines = !rnf;
  if (left_refines && right_refines) {
    verdict.relation = Relation::equivalent;
  } else if (left_refines) {
    verdict.relation = Relation::left_refines_right;
  } else if (right_refines) {
    verdict.relation = Relation::right_refines_left;
  } else {
    verdict.relation = Relation::incomparable;
  }
  if (lnf) verdict.witnesses.push_back(std::move(*lnf));
  if (rnf) verdict.witnesses.push_back(std::move(*rnf));
  return verdict;
}

EquivalenceVerdict dp_compare(const FamilyFunction& left, const FamilyFunction& right, std::size_t nmax,
                              const std::string& left_name, const std::string& right_name, std::size_t threads) {
  return dp_compare(left, right, similarity_classes(nmax), left_name, right_name, threads);
}

EquivalenceVerdict dp_compare(FamilyId left, FamilyId right, std::size_t nmax, std::size_t threads) {
  return dp_compare(family_function(left), family_function(right), nmax, std::string(family_name(left)),
                    std::string(family_name(right)), threads);
}

std::vector<Collision> find_collisions(const FamilyFunction& family, std::size_t nmax, std::size_t threads) {
  const auto classes = similarity_classes(nmax);
  auto per_class = parallel_map(
      classes.size(),
      [&](std::size_t c) {
        std::vector<Collision> found;
        const auto& cls = classes[c];
        if (cls.members.size() < 2) return found;
        std::vector<PolyValue> values;
        values.reserve(cls.members.size());
        for (const auto& g : cls.members) values.push_back(family(g));
        for (const auto& block : value_partition(values)) {
          if (block.size() < 2) continue;
          Collision col{cls.triple, {}, values[block.front()]};
          for (std::size_t i : block) col.block.push_back(cls.members[i]);
          found.push_back(std::move(col));
        }
        return found;
      },
      threads);
  std::vector<Collision> out;
  for (auto& v : per_class) {
    for (auto& c : v) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Collision> find_collisions(FamilyId family, std::size_t nmax, std::size_t threads) {
  return find_collisions(family_function(family), nmax, threads);
}

}  // namespace grpoly
