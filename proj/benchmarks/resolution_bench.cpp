#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "sheafres/derived.hpp"

using namespace sheafres;

namespace {

std::shared_ptr<const Poset> skeleton_faces(std::size_t n, std::size_t k) {
  return std::make_shared<const Poset>(SimplicialComplex::skeleton_of_simplex(n, k).face_poset(false));
}

void BM_MinimalResolutionSkeleton(benchmark::State& state) {
  auto p = skeleton_faces(static_cast<std::size_t>(state.range(0)), 3);
  auto f = constant_sheaf(p, RationalField{});
  for (auto _ : state) benchmark::DoNotOptimize(minimal_resolution(f));
  state.counters["faces"] = static_cast<double>(p->size());
}
BENCHMARK(BM_MinimalResolutionSkeleton)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_MinimalResolutionModP(benchmark::State& state) {
  auto p = skeleton_faces(static_cast<std::size_t>(state.range(0)), 3);
  auto f = constant_sheaf(p, PrimeField(32003));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_resolution(f));
}
BENCHMARK(BM_MinimalResolutionModP)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_OrderComplexResolution(benchmark::State& state) {
  auto p = skeleton_faces(static_cast<std::size_t>(state.range(0)), 2);
  auto f = constant_sheaf(p, RationalField{});
  for (auto _ : state) benchmark::DoNotOptimize(order_complex_resolution(f));
}
BENCHMARK(BM_OrderComplexResolution)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Certificates(benchmark::State& state) {
  auto p = skeleton_faces(static_cast<std::size_t>(state.range(0)), 3);
  auto r = minimal_resolution(constant_sheaf(p, RationalField{}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_exactness(r));
    benchmark::DoNotOptimize(verify_minimality(r));
  }
}
BENCHMARK(BM_Certificates)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_PushforwardToPoint(benchmark::State& state) {
  auto p = skeleton_faces(static_cast<std::size_t>(state.range(0)), 2);
  auto r = minimal_resolution(constant_sheaf(p, RationalField{}));
  auto f = PosetMap::to_point(p);
  for (auto _ : state) benchmark::DoNotOptimize(pushforward_all(r, f));
}
BENCHMARK(BM_PushforwardToPoint)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_RowEchelon(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution keep(0.1);
  std::vector<std::vector<Rational>> dense(n, std::vector<Rational>(n));
  for (auto& row : dense) {
    for (auto& x : row) x = keep(rng) ? Rational(entry(rng)) : Rational(0);
  }
  auto m = SparseMatrix<RationalField>::from_dense(RationalField{}, n, n, dense);
  for (auto _ : state) benchmark::DoNotOptimize(rref_with_transform(m));
}
BENCHMARK(BM_RowEchelon)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
