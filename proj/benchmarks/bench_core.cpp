/*
   Copyright 2026 The riocomb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "riocomb/families.hpp"
#include "riocomb/homology.hpp"
#include "riocomb/poset.hpp"
#include "riocomb/riordan.hpp"

using namespace riocomb;

namespace {

void BM_SeriesInverse(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const PowerSeries s = binomial_series(Rational(-3, 2), n);
    for (auto _ : state)
        benchmark::DoNotOptimize(s.inverse());
}
BENCHMARK(BM_SeriesInverse)->Arg(16)->Arg(32)->Arg(64);

void BM_SeriesCompose(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const PowerSeries a = binomial_series(Rational(1, 2), n);
    const PowerSeries b = PowerSeries::polynomial({0, 1, 1}, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(a.compose(b));
}
BENCHMARK(BM_SeriesCompose)->Arg(16)->Arg(32);

void BM_RiordanFinite(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const RiordanPair f = matrix_F(3, 2, n + 1);
        benchmark::DoNotOptimize(f.finite(n));
    }
}
BENCHMARK(BM_RiordanFinite)->Arg(8)->Arg(16)->Arg(32);

void BM_RiordanProductInverse(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const RiordanPair f = matrix_F(3, 2, n);
    for (auto _ : state)
        benchmark::DoNotOptimize((f * f.inverse()).finite(n - 1));
}
BENCHMARK(BM_RiordanProductInverse)->Arg(8)->Arg(16);

void BM_FaceEnumeration(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const SimplicialComplex k = delta_complex(4, 4, n);
        benchmark::DoNotOptimize(f_vector(k));
    }
}
BENCHMARK(BM_FaceEnumeration)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ReducedBetti(benchmark::State& state)
{
    const SimplicialComplex k = delta_complex(3, 3, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reduced_betti(k));
}
BENCHMARK(BM_ReducedBetti)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state)
{
    const FinitePoset x = delta_poset(3, 3, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(automorphism_count(x));
}
BENCHMARK(BM_Automorphisms)->DenseRange(1, 3);

void BM_FamilyReport(benchmark::State& state)
{
    const FamilyConfig cfg{static_cast<std::size_t>(state.range(0)), 16, 50000, 12};
    for (auto _ : state)
        benchmark::DoNotOptimize(build_family_report(3, 3, cfg));
}
BENCHMARK(BM_FamilyReport)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
