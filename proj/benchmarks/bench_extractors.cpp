// Copyright 2026 The extractorlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <extractorlab/classical.hpp>
#include <extractorlab/quantum.hpp>

using namespace extractorlab;

static void BM_HashCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FunctionFamily fam = hash_family(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_certificate(fam));
  }
}
BENCHMARK(BM_HashCertificate)->Arg(4)->Arg(6)->Arg(8);

static void BM_TwoUniversalCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FunctionFamily fam = hash_family(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_universal_check(fam));
  }
}
BENCHMARK(BM_TwoUniversalCheck)->Arg(4)->Arg(6)->Arg(8);

static void BM_CliffordGram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UnitaryFamily fam = clifford_family(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_gram_q(fam));
  }
}
BENCHMARK(BM_CliffordGram)->Arg(1)->Arg(2);

static void BM_TwoDesignCheck(benchmark::State& state) {
  const UnitaryFamily fam = clifford_family(1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_design_check(fam));
  }
}
BENCHMARK(BM_TwoDesignCheck);

static void BM_DecouplingError(benchmark::State& state) {
  Rng rng(7);
  UnitaryFamily fam;
  fam.n = 2;
  fam.m = 1;
  for (int i = 0; i < 16; ++i) fam.unitaries.push_back(haar_unitary(4, rng));
  const Mat rho = random_density(16, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoupling_error(fam, rho, 4, Mode::Strong));
  }
}
BENCHMARK(BM_DecouplingError);

BENCHMARK_MAIN();
