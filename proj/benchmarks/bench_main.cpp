#include <jacobi/lattice.hpp>
#include <jacobi/numeric.hpp>
#include <jacobi/operators.hpp>
#include <jacobi/projection.hpp>
#include <jacobi/random.hpp>
#include <jacobi/splitting.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace jacobi;

void BM_CommutatorTable(benchmark::State& state) {
  const std::size_t h = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const HalfIntSymMatrix m = random_index(h, rng);
  const auto family = monomial_family(10, m, 4, {FourierMode::zero(h)});
  for (auto _ : state) benchmark::DoNotOptimize(run_commutator_table(m, family));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(family.size()));
}
BENCHMARK(BM_CommutatorTable)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_NhDecompose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(11);
  const HalfIntSymMatrix m = random_index(2, rng);
  const NearlyHoloElt f = random_nearly_holomorphic(d + 3, m, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(nh_decompose(f, d));
}
BENCHMARK(BM_NhDecompose)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_VectorValuedRoundTrip(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  Rng rng(13);
  const HalfIntSymMatrix m = random_index(1, rng);
  ComponentTuple t(s + 2, s, m);
  for (auto& level : t.parts)
    for (auto& part : level) part = random_fourier_poly(m, 0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(vv_decompose(vv_assemble(t)));
}
BENCHMARK(BM_VectorValuedRoundTrip)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ThetaE8(benchmark::State& state) {
  const LatticeSpec lattice = e8_lattice(2);
  for (auto _ : state) benchmark::DoNotOptimize(theta_series(lattice, state.range(0)));
}
BENCHMARK(BM_ThetaE8)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SlashS(benchmark::State& state) {
  const NearlyHoloElt phi = theta_series(e8_lattice(2), 10).as_function();
  const auto points = default_points(2);
  const GroupElement s = GroupElement::S(2);
  for (auto _ : state) benchmark::DoNotOptimize(slash_check(phi, s, points, 1e-6));
}
BENCHMARK(BM_SlashS)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
