// Copyright 2026 The flbessel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "flbessel/hypergeom.h"
#include "flbessel/legendre.h"
#include "flbessel/powerprime.h"
#include "flbessel/series.h"
#include "flbessel/sumverify.h"

namespace flbessel {
namespace {

void BM_CoeffA(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CoeffA(L, 0, 1, 50));
  }
}
BENCHMARK(BM_CoeffA)->Arg(0)->Arg(20)->Arg(42)->Arg(80);

void BM_CoeffGeneral(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CoeffGeneral(Kind::kJ, L, 2, 1, 50));
  }
}
BENCHMARK(BM_CoeffGeneral)->Arg(2)->Arg(20)->Arg(42);

void BM_CoeffOracle(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CoeffOracle(Kind::kJ, L, 0, 1, L / 2 + 60, 50));
  }
}
BENCHMARK(BM_CoeffOracle)->Arg(0)->Arg(20);

void BM_BuildSeries(benchmark::State& state) {
  const int lmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildSeries(Kind::kJ, 0, 1, LMax{lmax}, 50));
  }
}
BENCHMARK(BM_BuildSeries)->Arg(42)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_EvalSeries(benchmark::State& state) {
  const FLSeries s = BuildSeries(Kind::kJ, 0, 1, LMax{42}, 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EvalSeries(s, 3, 50));
  }
}
BENCHMARK(BM_EvalSeries);

void BM_MonomialTable(benchmark::State& state) {
  const int lmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(MonomialTable(lmax));
  }
}
BENCHMARK(BM_MonomialTable)->Arg(42)->Arg(146);

void BM_ToPowerSeriesAndCertify(benchmark::State& state) {
  const FLSeries s = BuildSeries(Kind::kJ, 0, 1, LMax{146}, 90);
  for (auto _ : state) {
    const PowerSeries p = ToPowerSeries(s, 42);
    benchmark::DoNotOptimize(CertifyPrimeStructure(p));
  }
  state.SetLabel("74 entries, x^42, 90 digits");
}
BENCHMARK(BM_ToPowerSeriesAndCertify)->Unit(benchmark::kMillisecond);

void BM_VerifyIdentitySweep(benchmark::State& state) {
  const int h_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SummedSeries series(Family::kJ0, 1, 50);
    for (int h = 0; h <= h_max; ++h) {
      SumSpec spec;
      spec.h = h;
      spec.l_terms = h + 74;
      spec.digits = 50;
      benchmark::DoNotOptimize(VerifyIdentity(series, spec, BigReal(1L, 20)));
    }
  }
}
BENCHMARK(BM_VerifyIdentitySweep)->Arg(10)->Arg(42)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace flbessel

BENCHMARK_MAIN();
