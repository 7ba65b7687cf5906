#include <benchmark/benchmark.h>

#include <random>

#include <centro/centro.hpp>

using namespace centro;

namespace {

Matrix<Rational> random_int_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-4, 4);
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(entry(rng));
    return m;
}

// Random alternating centrosymmetric matrix of order 2k with integer entries.
Matrix<Rational> random_alt_centro(std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    const std::size_t n = 2 * k;
    Matrix<Rational> a(n, n, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(entry(rng));
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& mirror = a.at(n - 1 - i, n - 1 - j);
            a(i, j) = (i + j) % 2 == 0 ? mirror : -mirror;
        }
    return a;
}

void BM_det_bareiss(benchmark::State& state) {
    Matrix<Rational> m = random_int_matrix(static_cast<std::size_t>(state.range(0)), 42);
    auto rows = to_integer_rows(m);
    for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(rows));
}
BENCHMARK(BM_det_bareiss)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_det_gauss_rational(benchmark::State& state) {
    Matrix<Rational> m = random_int_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(det_gauss(m));
}
BENCHMARK(BM_det_gauss_rational)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

// Full-size determinant vs the half-size route of the structure theorem.
void BM_det_full_order(benchmark::State& state) {
    Matrix<Rational> a = random_alt_centro(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(det_exact(a));
}
BENCHMARK(BM_det_full_order)->Arg(8)->Arg(16)->Arg(32);

void BM_det_via_half(benchmark::State& state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    Matrix<Rational> a = random_alt_centro(k, 7);
    Matrix<Rational> kmat = alternating_exchange_matrix(2 * k, Rational(0));
    SimpleFormK<Rational> simple(block(kmat, 0, k, k, 2 * k));
    for (auto _ : state) {
        auto [b, c] = extract_bc(a, simple);
        benchmark::DoNotOptimize(det_via_half(b, c, CommutationKind::PseudoCentro));
    }
}
BENCHMARK(BM_det_via_half)->Arg(8)->Arg(16)->Arg(32);

void BM_complementary_formula(benchmark::State& state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    Matrix<Rational> a = random_alt_centro(k, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(det_via_complementary(a, false, 16));
}
BENCHMARK(BM_complementary_formula)->Arg(4)->Arg(8)->Arg(12);

void BM_aztec_diamond_count(benchmark::State& state) {
    Region r = aztec_diamond(state.range(0));
    LatticeGraph g = dual_graph(r);
    for (auto _ : state) benchmark::DoNotOptimize(count_matchings(g));
}
BENCHMARK(BM_aztec_diamond_count)->Arg(2)->Arg(4)->Arg(8);

void BM_matching_certificate(benchmark::State& state) {
    Region r = aztec_diamond(state.range(0));
    LatticeGraph g = dual_graph(r);
    for (auto _ : state) benchmark::DoNotOptimize(matching_certificate(g));
}
BENCHMARK(BM_matching_certificate)->Arg(2)->Arg(4)->Arg(8);

void BM_decompose_two_squares(benchmark::State& state) {
    Integer n = Integer(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_two_squares(n * n + 1));
}
BENCHMARK(BM_decompose_two_squares)->Arg(100)->Arg(10000)->Arg(1000000);

} // namespace

BENCHMARK_MAIN();
