#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include <rknot/rknot.hpp>

using namespace rknot;

namespace {

std::vector<Fraction> reduced_fractions(long bound) {
    std::vector<Fraction> out;
    for (long a = 2; a <= bound; ++a)
        for (long b = 1; b < a; ++b)
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    return out;
}

void BM_ExpandPm(benchmark::State& state) {
    auto fractions = reduced_fractions(state.range(0));
    for (auto _ : state) {
        for (const Fraction& r : fractions)
            benchmark::DoNotOptimize(expand_pm(r));
    }
    state.SetItemsProcessed(state.iterations() * fractions.size());
}
BENCHMARK(BM_ExpandPm)->Arg(50)->Arg(200);

void BM_ExpandAbs(benchmark::State& state) {
    std::vector<Fraction> fractions;
    for (long b = 2; b <= state.range(0); b += 2)
        for (long a = 1; a < 2 * b; a += 2)
            if (std::gcd(a, b) == 1) fractions.emplace_back(a, b);
    for (auto _ : state) {
        for (const Fraction& r : fractions)
            benchmark::DoNotOptimize(expand_abs(r));
    }
    state.SetItemsProcessed(state.iterations() * fractions.size());
}
BENCHMARK(BM_ExpandAbs)->Arg(50)->Arg(200);

void BM_Canonicalize(benchmark::State& state) {
    auto fractions = reduced_fractions(200);
    for (auto _ : state) {
        for (const Fraction& r : fractions)
            benchmark::DoNotOptimize(canonicalize(r));
    }
    state.SetItemsProcessed(state.iterations() * fractions.size());
}
BENCHMARK(BM_Canonicalize);

void BM_Parametrize(benchmark::State& state) {
    TwoBridgeKnot k = canonicalize(Fraction(9, 2));
    int a = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(parametrize(k, a));
}
BENCHMARK(BM_Parametrize)->Arg(3)->Arg(4);

void BM_Identify(benchmark::State& state) {
    Parametrization p = parametrize(canonicalize(Fraction(9, 2)), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(identify(p));
}
BENCHMARK(BM_Identify)->Arg(3)->Arg(4);

void BM_CertifiedSign(benchmark::State& state) {
    Parametrization p = parametrize(canonicalize(Fraction(9, 2)), 3);
    auto cps = enumerate_crossings(p.a, p.b);
    const long long denom = 1LL * p.a * p.b;
    for (auto _ : state) {
        for (const CrossingPoint& cp : cps)
            benchmark::DoNotOptimize(
                certified_sign_diff(p.z, {cp.m_plus, denom}, {cp.m_minus, denom}));
    }
    state.SetItemsProcessed(state.iterations() * cps.size());
}
BENCHMARK(BM_CertifiedSign);

void BM_IsHarmonic3(benchmark::State& state) {
    TwoBridgeKnot fig8 = canonicalize(Fraction(5, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_harmonic3(fig8));
}
BENCHMARK(BM_IsHarmonic3);

} // namespace

BENCHMARK_MAIN();
