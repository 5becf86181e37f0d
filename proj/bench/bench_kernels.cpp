// Serial reference vs OpenMP kernels. Range argument 0 selects the serial
// loop, 1 the parallel one; the problem size is the second argument.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qadsim/diophantine/parser.hpp"
#include "qadsim/hamiltonian/family.hpp"
#include "qadsim/hamiltonian/spectrum.hpp"
#include "qadsim/kernels/kernels.hpp"

namespace {

using namespace qadsim;
namespace k = qadsim::kernels;

bool use_parallel(const benchmark::State& state) { return state.range(0) != 0; }

void label(benchmark::State& state) {
  state.SetLabel(use_parallel(state) ? "parallel" : "serial");
}

void BM_DenseMatvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<k::cplx> m(n * n), x(n), y(n);
  for (auto& v : m) v = {g(rng), g(rng)};
  for (auto& v : x) v = {g(rng), g(rng)};
  const k::DenseView view{m.data(), n, n};
  for (auto _ : state) {
    if (use_parallel(state)) {
      k::parallel::dense_matvec(view, x, y);
    } else {
      k::serial::dense_matvec(view, x, y);
    }
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
  label(state);
}
BENCHMARK(BM_DenseMatvec)->ArgsProduct({{0, 1}, {256, 1024, 2048}});

// x^2+y^2+z^2+1 has no zero, so first_zero scans the whole box.
const Polynomial& box_poly() {
  static const Polynomial p = parse("x^2 + y^2 + z^2 + 1");
  return p;
}

void BM_BoxMinimum(benchmark::State& state) {
  const std::int64_t bound = state.range(1);
  for (auto _ : state) {
    auto r = use_parallel(state) ? k::parallel::box_minimum(box_poly(), bound)
                                 : k::serial::box_minimum(box_poly(), bound);
    benchmark::DoNotOptimize(r);
  }
  label(state);
}
BENCHMARK(BM_BoxMinimum)->ArgsProduct({{0, 1}, {40, 100}});

void BM_FirstZero(benchmark::State& state) {
  const std::int64_t bound = state.range(1);
  for (auto _ : state) {
    auto r = use_parallel(state) ? k::parallel::first_zero(box_poly(), bound)
                                 : k::serial::first_zero(box_poly(), bound);
    benchmark::DoNotOptimize(r);
  }
  label(state);
}
BENCHMARK(BM_FirstZero)->ArgsProduct({{0, 1}, {40, 100}});

void BM_SquaredValues(benchmark::State& state) {
  const std::int64_t cutoff = state.range(1);
  for (auto _ : state) {
    auto r = use_parallel(state) ? k::parallel::squared_values(box_poly(), cutoff)
                                 : k::serial::squared_values(box_poly(), cutoff);
    benchmark::DoNotOptimize(r.data());
  }
  label(state);
}
BENCHMARK(BM_SquaredValues)->ArgsProduct({{0, 1}, {40, 100}});

void BM_SpectralProfile(benchmark::State& state) {
  const Polynomial p = parse("x*y - 6");
  const FockBasis basis(2, state.range(1));
  const auto family = AdiabaticFamily::build(p, basis, default_alphas(2));
  SpectralOptions options;
  options.grid_size = 64;
  options.parallel = use_parallel(state);
  for (auto _ : state) {
    auto r = spectral_profile(family, options);
    benchmark::DoNotOptimize(r.min_gap);
  }
  label(state);
}
BENCHMARK(BM_SpectralProfile)->ArgsProduct({{0, 1}, {7, 11}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
