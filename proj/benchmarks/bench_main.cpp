// Copyright 2026 The wilc Authors
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

#include "wilc/invariants.hpp"
#include "wilc/random.hpp"
#include "wilc/reparam.hpp"
#include "wilc/siegel.hpp"

using namespace wilc;

static void BM_RatFuncArithmetic(benchmark::State& state) {
  Sampler s(1);
  auto a = s.ratfunc(static_cast<int>(state.range(0))), b = s.ratfunc(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_RatFuncArithmetic)->Arg(2)->Arg(4)->Arg(8);

static void BM_ClosedInvariants(benchmark::State& state) {
  Sampler s(2);
  auto l = s.matrix_operator(2, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(closed_I_all(l));
}
BENCHMARK(BM_ClosedInvariants)->DenseRange(2, 6);

static void BM_MiuraExtraction(benchmark::State& state) {
  Sampler s(2);
  auto l = s.matrix_operator(2, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(miura_extract(l));
}
BENCHMARK(BM_MiuraExtraction)->DenseRange(2, 6);

static void BM_Pullback(benchmark::State& state) {
  Sampler s(3);
  auto l = s.scalar_operator(static_cast<int>(state.range(0)), 1);
  RatFunc z = z_var();
  ReparamJet jet(z * z * z + RatFunc(1));
  for (auto _ : state) benchmark::DoNotOptimize(reparam_Ik_pullback(l, jet));
}
BENCHMARK(BM_Pullback)->DenseRange(3, 6);

static void BM_SiegelChainRule(benchmark::State& state) {
  Sampler s(4);
  auto f = s.mv_poly(2);
  auto g = random_symplectic(s.engine());
  for (auto _ : state) benchmark::DoNotOptimize(chain_rule_check(f, g));
}
BENCHMARK(BM_SiegelChainRule);

BENCHMARK_MAIN();
