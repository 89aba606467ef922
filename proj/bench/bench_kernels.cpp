// serial reference vs OpenMP kernels
#include <benchmark/benchmark.h>

#include <random>

#include "hml/qseries.hpp"
#include "hml/theta.hpp"

using namespace hml;

namespace {

std::vector<mpz_class> random_series(size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<mpz_class> a(n);
    for (auto& x : a) x = static_cast<long>(rng() % 2001) - 1000;
    return a;
}

void BM_series_mul_serial(benchmark::State& st) {
    const size_t P = st.range(0);
    auto a = random_series(P, 1), b = random_series(P, 2);
    for (auto _ : st) benchmark::DoNotOptimize(series_mul_serial(a, b, P));
}

void BM_series_mul_omp(benchmark::State& st) {
    const size_t P = st.range(0);
    auto a = random_series(P, 1), b = random_series(P, 2);
    for (auto _ : st) benchmark::DoNotOptimize(series_mul_omp(a, b, P));
}

void BM_theta_serial(benchmark::State& st) {
    QuadField F(st.range(0));
    SL2 s{5, 2, 17, 7};
    for (auto _ : st) benchmark::DoNotOptimize(theta_matrix_serial(F, s));
}

void BM_theta_omp(benchmark::State& st) {
    QuadField F(st.range(0));
    SL2 s{5, 2, 17, 7};
    for (auto _ : st) benchmark::DoNotOptimize(theta_matrix(F, s));
}

} // namespace

BENCHMARK(BM_series_mul_serial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_series_mul_omp)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theta_serial)->Arg(7)->Arg(19)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theta_omp)->Arg(7)->Arg(19)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
