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

#ifndef SUBMAX_BENCH_H_
#define SUBMAX_BENCH_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "submax/algorithms.h"
#include "submax/instances.h"

namespace submax {

// One CSV row. Raw rows have ordering_index in 0..orderings-1; summary rows
// (mean and std per cap and algorithm) carry ordering_index = -1 and an
// ":mean" / ":std" suffix on the algorithm name.
struct BenchRecord {
  std::string instance;
  std::string algorithm;
  int rank = 0;
  int ordering_index = 0;
  std::uint64_t seed = 0;
  double queries = 0;
  double objective = 0;
  long wall_ms = 0;
};

// Uniform per-part caps swept over the instance's partition.
struct RankSweep {
  std::vector<int> caps;
};

struct BenchConfig {
  std::vector<std::string> algorithms;
  RankSweep sweep;
  int orderings = 5;
  std::uint64_t seed = 0;
  bool timing = false;  // wall_ms stays 0 unless enabled, keeping CSV bytes stable
};

// Runs algorithm `name` on a fresh oracle. Known names: quickswap,
// quickswap_nm, ck, lazy_greedy, threshold_greedy.
AlgoResult run_algorithm(const std::string& name, CountingOracle& oracle,
                         const Matroid& m, std::span<const int> order);

// Fisher-Yates permutation from a stream keyed by (instance name, index),
// so adding algorithms or caps never changes the orderings.
std::vector<int> ordering_for(const Instance& instance, std::uint64_t seed,
                              int ordering_index);

std::vector<BenchRecord> run_bench(const Instance& instance,
                                   const BenchConfig& config);

void write_csv(std::ostream& out, const std::string& provenance,
               const std::vector<BenchRecord>& records);

}  // namespace submax

#endif  // SUBMAX_BENCH_H_
