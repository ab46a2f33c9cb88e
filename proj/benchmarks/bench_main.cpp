#include <benchmark/benchmark.h>

#include "prymlab/bracket.hpp"
#include "prymlab/morphism.hpp"
#include "prymlab/numerics.hpp"
#include "prymlab/painleve.hpp"
#include "prymlab/verify.hpp"

using namespace prymlab;

static void BM_Phi(benchmark::State& state) {
  Rng rng(1);
  int n = static_cast<int>(state.range(0));
  TodaPointQ p = random_toda_point(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(phi(p, n));
}
BENCHMARK(BM_Phi)->DenseRange(3, 9, 2);

static void BM_PhiInverse(benchmark::State& state) {
  Rng rng(2);
  int n = static_cast<int>(state.range(0));
  auto img = phi(random_toda_point(rng, n), n);
  for (auto _ : state) benchmark::DoNotOptimize(phi_inverse(img.u, img.v, img.w, n));
}
BENCHMARK(BM_PhiInverse)->DenseRange(3, 9, 2);

static void BM_SigmaEnum(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_enum(n));
}
BENCHMARK(BM_SigmaEnum)->Arg(8)->Arg(12)->Arg(16);

static void BM_Kowalevski(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Subset A;
  for (int i = 1; i <= 2 * (n / 3); ++i) A.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(kowalevski(n, A));
}
BENCHMARK(BM_Kowalevski)->Arg(5)->Arg(8)->Arg(10);

static void BM_LaurentBalance(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  Balance b = make_balance(5, {1, 2});
  std::map<std::string, Rational> params{{"a2_1", 1}, {"a4_1", Rational(1, 6)}, {"a3_2", 3}, {"a5_2", 2}};
  for (auto _ : state) benchmark::DoNotOptimize(laurent_balance(b, params, N));
}
BENCHMARK(BM_LaurentBalance)->Arg(4)->Arg(8)->Arg(12);

static void BM_JacobiMumford(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  auto t = mumford_bracket_table(Flavor::EvenMumford, g, UPoly<Rational>{1});
  for (auto _ : state) benchmark::DoNotOptimize(t.jacobi());
}
BENCHMARK(BM_JacobiMumford)->Arg(1)->Arg(2);

static void BM_JacobiToda(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto t = toda_table(TodaBracket::Quadratic, n);
  for (auto _ : state) benchmark::DoNotOptimize(t.jacobi());
}
BENCHMARK(BM_JacobiToda)->Arg(3)->Arg(4);

static void BM_IntegrateKM(benchmark::State& state) {
  Integration cfg{1.0, 1e-3, 1000};
  std::vector<Rational> a{2, Rational(1, 2), 1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(integrate_km(a, cfg));
}
BENCHMARK(BM_IntegrateKM);

BENCHMARK_MAIN();
