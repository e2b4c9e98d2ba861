#include <benchmark/benchmark.h>

#include <random>

#include "omn/element.hpp"
#include "omn/entropy.hpp"
#include "omn/int_matrix.hpp"
#include "omn/rieffel.hpp"

namespace {

omn::Element random_element(std::mt19937_64& g, int n, int terms) {
  std::uniform_int_distribution<int> letter(1, n), len(0, 3), k(-6, 6), c(-3, 3);
  omn::Element x;
  for (int i = 0; i < terms; ++i) {
    omn::Monomial mon;
    for (int j = len(g); j > 0; --j) mon.mu.push_back(letter(g));
    mon.k = k(g);
    for (int j = len(g); j > 0; --j) mon.nu.push_back(letter(g));
    x.add_term(mon, omn::Scalar(c(g)));
  }
  return x;
}

void BM_Mul(benchmark::State& state) {
  const omn::AlgebraParams a(2, 3);
  std::mt19937_64 g(1);
  const auto terms = static_cast<int>(state.range(0));
  const omn::Element x = random_element(g, 3, terms), y = random_element(g, 3, terms);
  for (auto _ : state) benchmark::DoNotOptimize(omn::mul(x, y, a));
}
BENCHMARK(BM_Mul)->Arg(4)->Arg(16)->Arg(64);

void BM_IsZero(benchmark::State& state) {
  const omn::AlgebraParams a(2, 3);
  std::mt19937_64 g(2);
  const omn::Element x = random_element(g, 3, static_cast<int>(state.range(0)));
  const omn::Element zero = omn::mul(x, omn::cuntz_sum(a) - omn::Element::one(), a);
  for (auto _ : state) benchmark::DoNotOptimize(omn::is_zero(zero, a));
}
BENCHMARK(BM_IsZero)->Arg(4)->Arg(16)->Arg(64);

void BM_Smith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 g(3);
  std::uniform_int_distribution<int> entry(-50, 50);
  omn::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(g);
  for (auto _ : state) benchmark::DoNotOptimize(omn::smith_normal_form(m));
}
BENCHMARK(BM_Smith)->Arg(3)->Arg(8)->Arg(16);

void BM_Entropy(benchmark::State& state) {
  const omn::AlgebraParams a(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(omn::entropy_estimate(0, static_cast<int>(state.range(0)), a));
}
BENCHMARK(BM_Entropy)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_RhoR(benchmark::State& state) {
  const omn::AlgebraParams a(1, 2);
  const omn::Monomial mon{{2}, 1, {1}};
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omn::rho_r(mon, r, 1, 1, r - 1, a));
}
BENCHMARK(BM_RhoR)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ProjectionSquare(benchmark::State& state) {
  const omn::ProjectionData d = omn::build_canonical_data();
  for (auto _ : state) benchmark::DoNotOptimize(omn::assemble_and_square(d, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ProjectionSquare)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
