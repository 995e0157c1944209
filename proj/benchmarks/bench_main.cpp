#include <benchmark/benchmark.h>

#include <random>

#include "homalg/analysis.hpp"
#include "homalg/search.hpp"
#include "homalg/twisting.hpp"

using namespace homalg;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar::from_int(f, static_cast<long>(rng() % 7) - 3);
  return m;
}

void BM_RrefRational(benchmark::State& state) {
  const Matrix m = random_matrix(FieldSpec::rationals(), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefPrime(benchmark::State& state) {
  const Matrix m = random_matrix(FieldSpec::prime(65521), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(16)->Arg(32);

void BM_HomAssociativeCheck(benchmark::State& state) {
  const HomAlgebra h =
      random_hom_algebra(FieldSpec::prime(7), state.range(0), Recipe::CentralMultiplication, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_hom_associative(h));
}
BENCHMARK(BM_HomAssociativeCheck)->Arg(2)->Arg(4)->Arg(8);

void BM_CodimAnalysis(benchmark::State& state) {
  const HomAlgebra h = random_hom_algebra(FieldSpec::rationals(), state.range(0), Recipe::CentralMultiplication, 5);
  const Element one = *find_two_sided_unit(h.algebra());
  for (auto _ : state) benchmark::DoNotOptimize(codim_analysis(h, one));
}
BENCHMARK(BM_CodimAnalysis)->Arg(3)->Arg(5);

SearchSpec count_spec(std::uint32_t p, std::size_t n, std::vector<std::string> constraints) {
  SearchSpec s;
  s.field = FieldSpec::prime(p);
  s.dim = n;
  for (const auto& c : constraints) s.constraints.push_back(parse_constraint(c));
  s.goal = SearchGoal::count_models();
  return s;
}

void BM_SearchCount(benchmark::State& state) {
  const SearchSpec s = count_spec(2, 2, {"hom-associative"});
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = search(s).nodes_explored;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchCount);

void BM_NaiveCount(benchmark::State& state) {
  const SearchSpec s = count_spec(2, 2, {"hom-associative"});
  for (auto _ : state) benchmark::DoNotOptimize(naive_enumerate(s));
}
BENCHMARK(BM_NaiveCount);

void BM_SearchUnitalNonassociative(benchmark::State& state) {
  const SearchSpec s = count_spec(3, 2, {"unital:0", "hom-associative", "not-associative"});
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = search(s).nodes_explored;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchUnitalNonassociative);

void BM_SearchCodim2Budget(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(explore_codim2(FieldSpec::prime(2), 4, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchCodim2Budget)->Arg(1 << 14)->Arg(1 << 16);

void BM_EnumerateTwistsMat2(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(2);
  Algebra a(f, 4);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      if (x % 2 == y / 2) a.set_sc(x, y, 2 * (x / 2) + y % 2, Scalar::one(f));
  const Element one = Vector::from_ints(f, {1, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_twists(a, one));
}
BENCHMARK(BM_EnumerateTwistsMat2);

}  // namespace
BENCHMARK_MAIN();
