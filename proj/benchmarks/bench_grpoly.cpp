#include <benchmark/benchmark.h>

#include <random>

#include "grpoly/canonical.hpp"
#include "grpoly/catalog.hpp"
#include "grpoly/enumerate.hpp"
#include "grpoly/roots.hpp"
#include "grpoly/transforms.hpp"

using namespace grpoly;

namespace {

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, edges);
}

Graph random_graph(std::size_t n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// enumerate_graphs caches per n, so only the uncached tree enumeration is timed.
void BM_EnumerateTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 10, 2);

void BM_ChromaticPetersen(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_poly(g));
}
BENCHMARK(BM_ChromaticPetersen)->Unit(benchmark::kMillisecond);

void BM_TutteComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_poly(g));
}
BENCHMARK(BM_TutteComplete)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_SturmRealRootedMatching(benchmark::State& state) {
  const IntPoly p = as_univariate(compute_family(FamilyId::matchingDefect, petersen()));
  for (auto _ : state) benchmark::DoNotOptimize(is_real_rooted(p));
}
BENCHMARK(BM_SturmRealRootedMatching);

void BM_ComplexRootsChromatic(benchmark::State& state) {
  const IntPoly p = chromatic_poly(petersen());
  for (auto _ : state) benchmark::DoNotOptimize(complex_roots(p));
}
BENCHMARK(BM_ComplexRootsChromatic);

// Degree grows with the coefficient sum, so this is dominated by big products.
void BM_RealifyRoundTrip(benchmark::State& state) {
  const IntPoly p = interleave_nonneg(as_univariate(compute_family(FamilyId::charL, complete_graph(5))));
  const auto s = static_cast<std::size_t>(p.degree());
  for (auto _ : state) benchmark::DoNotOptimize(recover_coefficients(realify(p, s), s));
}
BENCHMARK(BM_RealifyRoundTrip)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
