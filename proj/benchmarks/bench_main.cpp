/*
   Copyright 2026 The polcert authors

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

#include "polcert/pipelines.hpp"
#include "polcert/todd_coxeter.hpp"

using namespace polcert;

static void BM_ToddCoxeterPol2(benchmark::State& state) {
    fpgroup::Presentation p = fpgroup::pol2_presentation();
    for (auto _ : state) {
        fpgroup::CosetTable t = fpgroup::todd_coxeter(p, {}, 100000);
        benchmark::DoNotOptimize(t.index());
    }
}
BENCHMARK(BM_ToddCoxeterPol2);

static void BM_TowerMultiply(benchmark::State& state) {
    using fields::Eisen;
    using fields::TowerElement;
    TowerElement x(Eisen(Rat(2, 3), Rat(-1, 7)), Eisen(Rat(5), Rat(4, 9)), Eisen(Rat(-3, 2), Rat(1)));
    TowerElement y(Eisen(Rat(1, 5), Rat(2)), Eisen(Rat(-7, 4), Rat(3)), Eisen(Rat(2), Rat(-2, 3)));
    for (auto _ : state) {
        TowerElement z = x * y;
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_TowerMultiply);

static void BM_TowerInverse(benchmark::State& state) {
    using fields::Eisen;
    using fields::TowerElement;
    TowerElement x(Eisen(Rat(2, 3), Rat(-1, 7)), Eisen(Rat(5), Rat(4, 9)), Eisen(Rat(-3, 2), Rat(1)));
    for (auto _ : state) {
        TowerElement z = x.inverse();
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_TowerInverse);

static void BM_EvalWordChar0(benchmark::State& state) {
    auto pi = matrep::pi_generators();
    fpgroup::Word w = fpgroup::parse_word("(b*a)^2*(a*b^-1*a)^-2*a^3*b*a*b", {"a", "b"});
    for (auto _ : state) {
        auto m = pi.eval(w);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_EvalWordChar0);

static void BM_EvalWordChar3(benchmark::State& state) {
    auto rho = matrep::rho_generators();
    fpgroup::Word w = fpgroup::parse_word("(b*a)^2*(a*b^-1*a)^-2*a^3*b*a*b", {"a", "b"});
    for (auto _ : state) {
        auto m = rho.eval(w);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_EvalWordChar3);

static void BM_DescendAndNormalize(benchmark::State& state) {
    auto pi = matrep::pi_generators();
    fpgroup::Word w = fpgroup::parse_word("b*a*(a^3)*(a*b)^-1*a^-1*b*a^-1", {"a", "b"});
    for (auto _ : state) {
        auto d = matrep::descend_and_normalize(pi, w);
        benchmark::DoNotOptimize(d.rep);
    }
}
BENCHMARK(BM_DescendAndNormalize);

static void BM_UnitriangularClosure(benchmark::State& state) {
    using fields::GF3;
    matrep::Mat3Gf3 e12 = matrep::Mat3Gf3::identity(), e23 = matrep::Mat3Gf3::identity();
    e12.at(0, 1) = GF3(1);
    e23.at(1, 2) = GF3(1);
    for (auto _ : state) {
        auto g = matrep::group_closure({e12, e23});
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_UnitriangularClosure);

BENCHMARK_MAIN();
