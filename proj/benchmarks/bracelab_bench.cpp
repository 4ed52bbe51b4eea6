#include <benchmark/benchmark.h>

#include <vector>

#include "bracelab/enumerate.hpp"
#include "bracelab/finite_abelian.hpp"
#include "bracelab/solution.hpp"

namespace {

using namespace bracelab;

FiniteAbelianGroup group_of(benchmark::State const& state) {
  switch (state.range(0)) {
    case 0:
      return make_group({2, 2, 2});
    case 1:
      return make_group({2, 2, 2, 2});
    case 2:
      return make_group({3, 3});
    default:
      return make_group({4, 4});
  }
}

void BM_AutomorphismGroup(benchmark::State& state) {
  auto const group = group_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(automorphism_group(group).order());
  }
}
BENCHMARK(BM_AutomorphismGroup)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_Enumerate(benchmark::State& state) {
  EnumerateOptions options;
  options.slow = true;
  auto const n = static_cast<std::size_t>(state.range(0));
  std::size_t classes = 0;
  for (auto _ : state) {
    classes = enumerate_braces(n, options).classes.size();
    benchmark::DoNotOptimize(classes);
  }
  state.counters["classes"] = static_cast<double>(classes);
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(12)->Arg(16)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

void BM_CanonicalTable(benchmark::State& state) {
  EnumerateOptions options;
  auto const census = enumerate_braces(16, options);
  auto const& brace = census.classes[census.classes.size() / 2].brace;
  auto const automorphisms = automorphism_group(brace.additive());
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_circle_table(brace, automorphisms));
  }
  state.counters["automorphisms"] = static_cast<double>(automorphisms.order());
}
BENCHMARK(BM_CanonicalTable)->Unit(benchmark::kMicrosecond);

void BM_ValidateSolution(benchmark::State& state) {
  EnumerateOptions options;
  options.slow = true;
  auto const census = enumerate_braces(static_cast<std::size_t>(state.range(0)), options);
  auto const solution = solution_from_brace(census.classes.back().brace);
  std::size_t const n = solution.size();
  std::vector<Element> sigma(n * n);
  std::vector<Element> tau(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      sigma[x * n + y] = solution.sigma(x, y);
      tau[x * n + y] = solution.tau(x, y);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_solution(n, sigma, tau).size());
  }
}
BENCHMARK(BM_ValidateSolution)->Arg(8)->Arg(16)->Arg(36)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
