// Acceptance run: one PASS/FAIL line per criterion on stdout, exit status 1
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "grpoly/catalog.hpp"
#include "grpoly/enumerate.hpp"
#include "grpoly/equivalence.hpp"
#include "grpoly/graph6.hpp"
#include "grpoly/roots.hpp"
#include "grpoly/simfun.hpp"
#include "grpoly/transforms.hpp"
#include "oracles.hpp"

using namespace grpoly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > budget_seconds) {
    o.pass = false;
    o.detail += " (over time budget of " + std::to_string(static_cast<int>(budget_seconds)) + "s)";
  }
  if (!o.pass) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

IntPoly uni(FamilyId id, const Graph& g, ChromaticCache* cache = nullptr) {
  return as_univariate(compute_family(id, g, cache));
}

std::string note_failure(std::size_t& count, const std::string& what) {
  ++count;
  return count == 1 ? what : std::string();
}

// FNV-1a, enough to compare outputs byte for byte.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string run_tool(const std::string& env, const std::string& args) {
  const std::string cmd = env + " \"" GRPOLY_TOOL_PATH "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  if (status != 0) throw std::runtime_error("non-zero exit from: " + cmd);
  return out;
}

}  // namespace

int main() {
  criterion(1, "enumeration counts n=1..7", 120, [] {
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
    Outcome o;
    std::ostringstream d;
    for (std::size_t n = 1; n <= 7; ++n) {
      const std::size_t got = enumerate_graphs(n).size();
      d << got << (n < 7 ? "," : "");
      if (got != expected[n - 1]) o.pass = false;
      if (n <= 6 && got != oracle::labeled_dedup_count(n)) {
        o.pass = false;
        d << "(oracle mismatch)";
      }
    }
    o.detail = "counts " + d.str();
    return o;
  });

  criterion(2, "matching polynomials real-rooted for all graphs n<=7", 300, [] {
    Outcome o;
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (const auto& g : enumerate_graphs_up_to(7)) {
      for (FamilyId id : {FamilyId::matchingDefect, FamilyId::matchingGen}) {
        ++checked;
        if (!is_real_rooted(uni(id, g))) {
          o.detail += note_failure(bad, "not real-rooted: " + std::string(family_name(id)) + " " + to_graph6(g) + " ");
        }
      }
    }
    o.pass = bad == 0;
    o.detail += std::to_string(checked) + " polynomials, " + std::to_string(bad) + " failures";
    return o;
  });

  criterion(3, "characteristic polynomial equals matching defect polynomial on trees n<=9", 120, [] {
    Outcome o;
    std::size_t trees = 0;
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= 9; ++n) {
      for (const auto& t : enumerate_trees(n)) {
        ++trees;
        if (uni(FamilyId::charA, t) != uni(FamilyId::matchingDefect, t)) {
          o.detail += note_failure(bad, "mismatch on " + to_graph6(t) + " ");
        }
      }
    }
    o.pass = bad == 0 && trees == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47;
    o.detail += std::to_string(trees) + " trees, " + std::to_string(bad) + " mismatches";
    return o;
  });

  criterion(4, "Laplacian zero multiplicity and spanning-tree counts", 300, [] {
    Outcome o;
    std::size_t bad = 0;
    std::size_t connected = 0;
    for (const auto& g : enumerate_graphs_up_to(7)) {
      const IntPoly l = uni(FamilyId::charL, g);
      if (l.valuation() != component_count(g)) o.detail += note_failure(bad, "zero multiplicity on " + to_graph6(g) + " ");
      if (g.n() <= 6 && component_count(g) == 1) {
        ++connected;
        if (spanning_trees_from_laplacian(l, g.n()) != oracle::brute_spanning_trees(g)) {
          o.detail += note_failure(bad, "tree count on " + to_graph6(g) + " ");
        }
      }
    }
    o.pass = bad == 0;
    o.detail += std::to_string(connected) + " connected graphs checked against brute force, " + std::to_string(bad) +
                " failures";
    return o;
  });

  criterion(5, "charA and charL incomparable up to n=7", 600, [] {
    Outcome o;
    const auto classes = similarity_classes(7);
    const auto verdict = dp_compare(family_function(FamilyId::charA), family_function(FamilyId::charL), classes,
                                    "charA", "charL");
    bool left = false;
    bool right = false;
    for (const auto& w : verdict.witnesses) {
      left |= w.direction == "left-not-forced";
      right |= w.direction == "right-not-forced";
    }
    o.pass = verdict.relation == Relation::incomparable && left && right;
    o.detail = "relation " + to_string(verdict.relation);
    for (const auto& w : verdict.witnesses) o.detail += "; " + w.direction + " " + to_graph6(w.g1) + "/" + to_graph6(w.g2);

    // Cospectral pairs whose adjacency polynomial is (X-1)(X+1)^2(X^3-X^2-5X+1).
    const IntPoly target = IntPoly({-1, 1}) * IntPoly({1, 1}) * IntPoly({1, 1}) * IntPoly({1, -5, -1, 1});
    // Cospectral graphs share n and m but not necessarily k, so search across classes.
    std::vector<const Graph*> hits;
    for (const auto& cls : classes) {
      for (const auto& g : cls.members) {
        if (uni(FamilyId::charA, g) == target) hits.push_back(&g);
      }
    }
    std::size_t pairs = 0;
    std::string found;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      for (std::size_t j = i + 1; j < hits.size(); ++j) {
        ++pairs;
        found += (found.empty() ? "" : ", ") + to_graph6(*hits[i]) + "/" + to_graph6(*hits[j]) + " spanning trees " +
                 spanning_forest_count(*hits[i]).get_str() + " and " + spanning_forest_count(*hits[j]).get_str();
      }
    }
    o.detail += "; cospectral pairs with the quoted polynomial: " + std::to_string(pairs);
    if (!found.empty()) o.detail += " (" + found + ")";
    return o;
  });

  criterion(6, "interleave -> realify -> recover is the identity, n<=5", 300, [] {
    Outcome o;
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (const auto& g : enumerate_graphs_up_to(5)) {
      for (FamilyId id : univariate_families()) {
        ++checked;
        const IntPoly p = uni(id, g);
        const IntPoly e = interleave_nonneg(p);
        const std::size_t s = static_cast<std::size_t>(std::max(0, e.degree()));
        const IntPoly q = realify(e, s);
        std::size_t integral = 0;
        for (const auto& [root, mult] : integer_roots(q)) integral += mult;
        if (integral != static_cast<std::size_t>(q.degree())) {
          o.detail += note_failure(bad, "non-integer roots " + std::string(family_name(id)) + " " + to_graph6(g) + " ");
        }
        if (deinterleave(recover_coefficients(q, s)) != p) {
          o.detail += note_failure(bad, "round trip " + std::string(family_name(id)) + " " + to_graph6(g) + " ");
        }
      }
    }
    o.pass = bad == 0;
    o.detail += std::to_string(checked) + " polynomials, " + std::to_string(bad) + " failures";
    return o;
  });

  criterion(7, "scaled catalog polynomials have roots in |z|<=2, n<=6", 300, [] {
    Outcome o;
    std::size_t bad = 0;
    double worst = 0;
    for (const auto& g : enumerate_graphs_up_to(6)) {
      for (FamilyId id : univariate_families()) {
        const IntPoly p = uni(id, g);
        if (p.degree() < 1) continue;
        Integer a = max_lower_abs(p);
        if (a < 1) a = 1;
        for (const auto& r : complex_roots(rouche_scale(p, a))) {
          worst = std::max(worst, r.modulus());
          if (r.modulus() > 2.0 + 1e-6) {
            o.detail += note_failure(bad, std::string(family_name(id)) + " " + to_graph6(g) + " ");
          }
        }
      }
    }
    o.pass = bad == 0;
    o.detail += "max modulus " + format_fixed(worst) + ", " + std::to_string(bad) + " failures";
    return o;
  });

  criterion(8, "edge-cover roots within (1+sqrt 3)^3/4, n<=6", 120, [] {
    Outcome o;
    const double bound = std::pow(1.0 + std::sqrt(3.0), 3) / 4.0;
    double worst = 0;
    std::string worst_graph;
    std::size_t bad = 0;
    for (const auto& g : enumerate_graphs_up_to(6)) {
      const IntPoly p = uni(FamilyId::edgeCover, g);
      if (p.degree() < 1) continue;
      for (const auto& r : complex_roots(p)) {
        if (r.modulus() > worst) {
          worst = r.modulus();
          worst_graph = to_graph6(g);
        }
        if (r.modulus() > bound + 1e-6) ++bad;
      }
    }
    o.pass = bad == 0;
    o.detail = "max modulus " + format_fixed(worst) + " on " + worst_graph + " vs bound " + format_fixed(bound) + ", " +
               std::to_string(bad) + " roots outside";
    return o;
  });

  criterion(9, "density witnesses for 100 targets in the unit square", 60, [] {
    Outcome o;
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> num(1, 999);
    const Rational eps(1, 100);
    std::size_t bad = 0;
    std::size_t max_vertices = 0;
    for (int i = 0; i < 100; ++i) {
      Rational re(num(rng), 1000);
      Rational im(num(rng), 1000);
      re.canonicalize();
      im.canonicalize();
      const DensityWitness w = density_witness(re, im, eps);
      // Root (a+bi)/c of the witness graph's prefactor, checked exactly and numerically.
      Rational zr(w.a, w.c);
      Rational zi(w.b, w.c);
      zr.canonicalize();
      zi.canonicalize();
      const IntPoly q = quadrant_prefactor(similarity_triple(w.graph), QuadrantHalf::right);
      const auto [vr, vi] = evaluate_gaussian(q, zr, zi);
      const Rational dr = zr - re;
      const Rational di = zi - im;
      const bool ok = vr == 0 && vi == 0 && dr * dr + di * di <= eps * eps && w.residual <= 1e-9;
      if (!ok) o.detail += note_failure(bad, "target " + re.get_str() + "+" + im.get_str() + "i ");
      max_vertices = std::max(max_vertices, w.graph.n());
    }
    const DensityWitness worked = density_witness(Rational(1, 3), Rational(2, 3), eps);
    const bool worked_ok = worked.triple == SimilarityTriple{12, 18, 6} && worked.exact_zero;
    if (!worked_ok) o.detail += "worked case gave " + to_string(worked.triple) + " ";
    o.pass = bad == 0 && worked_ok;
    o.detail += std::to_string(bad) + " failures, largest witness " + std::to_string(max_vertices) +
                " vertices, worked case " + to_string(worked.triple);
    return o;
  });

  criterion(10, "catalog identities and prefactor reductions, n<=6", 300, [] {
    Outcome o;
    const auto corpus = enumerate_graphs_up_to(6);
    std::size_t bad = 0;
    for (const auto& g : corpus) {
      if (!catalog_identities(g).ok()) o.detail += note_failure(bad, "identity fails on " + to_graph6(g) + " ");
    }
    const ReductionSpec mu{FamilyId::matchingDefect, FamilyId::matchingGen, "X1^n", {"-X1^(-2)"}};
    const ReductionSpec vc{FamilyId::vertexCover, FamilyId::independence, "X1^n", {"X1^(-1)"}};
    const auto a = verify_prefactor_reduction(mu, corpus);
    const auto b = verify_prefactor_reduction(vc, corpus);
    o.pass = bad == 0 && a.status == VerdictStatus::pass && a.certified && b.status == VerdictStatus::pass &&
             b.certified;
    o.detail += "mu<-g " + std::string(to_string(a.status)) + (a.certified ? " certified" : "") + " (" +
                std::to_string(a.points_checked) + " points), Vc<-In " + std::string(to_string(b.status)) +
                (b.certified ? " certified" : "") + " (" + std::to_string(b.points_checked) + " points)";
    return o;
  });

  criterion(11, "independence and matching-generating polynomials have no positive roots, n<=6", 120, [] {
    Outcome o;
    std::size_t bad = 0;
    for (const auto& g : enumerate_graphs_up_to(6)) {
      for (FamilyId id : {FamilyId::independence, FamilyId::matchingGen}) {
        if (sign_profile(uni(id, g)).positive != 0) {
          o.detail += note_failure(bad, std::string(family_name(id)) + " " + to_graph6(g) + " ");
        }
      }
    }
    o.pass = bad == 0;
    o.detail += std::to_string(bad) + " failures";
    return o;
  });

  criterion(12, "chromatic polynomial matches coloring counts, n<=6, t=0..4", 120, [] {
    Outcome o;
    ChromaticCache cache;
    std::size_t bad = 0;
    std::size_t checks = 0;
    for (const auto& g : enumerate_graphs_up_to(6)) {
      const IntPoly p = chromatic_poly(g, &cache);
      for (unsigned t = 0; t <= 4; ++t) {
        ++checks;
        if (evaluate(p, Integer(t)) != oracle::brute_colorings(g, t)) {
          o.detail += note_failure(bad, to_graph6(g) + " t=" + std::to_string(t) + " ");
        }
      }
    }
    o.pass = bad == 0;
    o.detail += std::to_string(checks) + " evaluations, " + std::to_string(bad) + " mismatches";
    return o;
  });

  criterion(13, "CLI output is byte-identical across runs and thread counts", 600, [] {
    Outcome o;
    const std::vector<std::string> commands = {
        "roots --family chromatic --enum 6",
        "equiv --left charA --right charL --nmax 6",
        "scatter --family independence --enum 5",
        "transform --family matchingDefect --enum 5 --chain interleave,realify",
        "enum --n 7 | \"" GRPOLY_TOOL_PATH "\" poly --family tutte --graph6 -",
    };
    const std::vector<std::string> envs = {"GRPOLY_THREADS=1", "GRPOLY_THREADS=4", "GRPOLY_THREADS=2"};
    for (const auto& cmd : commands) {
      std::uint64_t first = 0;
      for (std::size_t i = 0; i < envs.size(); ++i) {
        // The environment prefix applies to every stage of a pipeline.
        const std::string out = run_tool("export " + envs[i] + ";", cmd);
        const std::uint64_t h = fnv1a(out);
        if (i == 0) {
          first = h;
          if (out.empty()) {
            o.pass = false;
            o.detail += "empty output for '" + cmd + "' ";
          }
        } else if (h != first) {
          o.pass = false;
          o.detail += "hash differs for '" + cmd + "' ";
        }
      }
    }
    o.detail += std::to_string(commands.size()) + " commands x " + std::to_string(envs.size()) + " runs";
    return o;
  });

  return failures == 0 ? 0 : 1;
}
