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

#include <extractorlab/entropy.hpp>
#include <extractorlab/matrix.hpp>
#include <extractorlab/random.hpp>
#include <extractorlab/sdp.hpp>

using namespace extractorlab;

static void BM_HermitianEigs(benchmark::State& state) {
  Rng rng(1);
  const Index dim = state.range(0);
  const Mat h = hermitian_part(ginibre(dim, dim, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigs(h));
  }
}
BENCHMARK(BM_HermitianEigs)->Arg(16)->Arg(64)->Arg(256);

static void BM_TraceNorm(benchmark::State& state) {
  Rng rng(2);
  const Index dim = state.range(0);
  const Mat diff = random_density(dim, rng) - random_density(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_norm(diff));
  }
}
BENCHMARK(BM_TraceNorm)->Arg(8)->Arg(32)->Arg(128);

static void BM_PartialTrace(benchmark::State& state) {
  Rng rng(3);
  const Index half = state.range(0);
  const Mat rho = random_density(half * half, rng);
  const std::array<Index, 2> dims{half, half};
  const std::array<int, 1> keep{0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(rho, dims, keep));
  }
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(8)->Arg(16);

static void BM_HaarUnitary(benchmark::State& state) {
  Rng rng(4);
  const Index dim = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_unitary(dim, rng));
  }
}
BENCHMARK(BM_HaarUnitary)->Arg(4)->Arg(16)->Arg(64);

static void BM_GuessingSdp(benchmark::State& state) {
  Rng rng(5);
  const Index dn = state.range(0);
  const Index dr = 4;
  const BipartiteState st =
      random_bipartite(dn, dr, StateKind::ClassicalQuantum, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_guessing_sdp(st.rho, dn, dr));
  }
}
BENCHMARK(BM_GuessingSdp)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
