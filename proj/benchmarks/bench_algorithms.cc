// Copyright 2023 The Authors.
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

#include <numeric>

#include "submax/algorithms.h"
#include "submax/bench.h"
#include "submax/instances.h"

namespace {

submax::Instance er_instance() {
  submax::InstanceSpec spec;
  spec.kind = submax::InstanceKind::kErdosRenyi;
  spec.n = 500;
  spec.p = 1.0 / 250;
  spec.num_parts = 20;
  spec.seed = 7;
  return spec.build();
}

void BM_QuickSwap(benchmark::State& state) {
  submax::Instance inst = er_instance();
  auto matroid = inst.matroid_with_cap(static_cast<int>(state.range(0)));
  std::vector<int> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  for (auto _ : state) {
    submax::CountingOracle oracle(inst.objective, inst.n);
    auto run = submax::quickswap(oracle, *matroid, order);
    benchmark::DoNotOptimize(run.result.value);
  }
}
BENCHMARK(BM_QuickSwap)->Arg(1)->Arg(5)->Arg(15);

void BM_Ck(benchmark::State& state) {
  submax::Instance inst = er_instance();
  auto matroid = inst.matroid_with_cap(static_cast<int>(state.range(0)));
  std::vector<int> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  for (auto _ : state) {
    submax::CountingOracle oracle(inst.objective, inst.n);
    auto result = submax::ck(oracle, *matroid, order);
    benchmark::DoNotOptimize(result.value);
  }
}
BENCHMARK(BM_Ck)->Arg(1)->Arg(5)->Arg(15);

void BM_LazyGreedy(benchmark::State& state) {
  submax::Instance inst = er_instance();
  auto matroid = inst.matroid_with_cap(static_cast<int>(state.range(0)));
  std::vector<int> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  for (auto _ : state) {
    submax::CountingOracle oracle(inst.objective, inst.n);
    auto result = submax::lazy_greedy(oracle, *matroid, order);
    benchmark::DoNotOptimize(result.value);
  }
}
BENCHMARK(BM_LazyGreedy)->Arg(1)->Arg(5)->Arg(15);

}  // namespace

BENCHMARK_MAIN();
