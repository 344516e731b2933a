#include <benchmark/benchmark.h>

#include "qseries/kernels.hpp"
#include "qseries/partitions.hpp"
#include "qseries/qproducts.hpp"

namespace {

using qseries::Integer;

// dense operands with growing coefficients, roughly what eta quotients produce
std::vector<Integer> dense(std::size_t n) {
  const auto s = qseries::p_r(3, static_cast<std::int64_t>(n));
  return {s.coeffs().begin(), s.coeffs().end()};
}

void BM_convolve_serial(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto a = dense(n), b = dense(n);
  for (auto _ : st) benchmark::DoNotOptimize(qseries::kernels::convolve_serial(a, b, n));
}

void BM_convolve_omp(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto a = dense(n), b = dense(n);
  for (auto _ : st) benchmark::DoNotOptimize(qseries::kernels::convolve_omp(a, b, n));
}

void BM_reduce_serial(benchmark::State& st) {
  const auto x = dense(static_cast<std::size_t>(st.range(0)));
  const Integer m = 1000003;
  for (auto _ : st) benchmark::DoNotOptimize(qseries::kernels::reduce_mod_serial(x, m));
}

void BM_reduce_omp(benchmark::State& st) {
  const auto x = dense(static_cast<std::size_t>(st.range(0)));
  const Integer m = 1000003;
  for (auto _ : st) benchmark::DoNotOptimize(qseries::kernels::reduce_mod_omp(x, m));
}

void BM_eta_quotient(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(qseries::eta_quotient({{1, -5}, {2, 2}, {3, 2}, {6, 2}}, st.range(0)));
  }
}

}  // namespace

BENCHMARK(BM_convolve_serial)->Arg(250)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_convolve_omp)->Arg(250)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduce_serial)->Arg(4096)->Arg(16384)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_reduce_omp)->Arg(4096)->Arg(16384)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_eta_quotient)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
