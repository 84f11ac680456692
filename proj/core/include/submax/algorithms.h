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

#ifndef SUBMAX_ALGORITHMS_H_
#define SUBMAX_ALGORITHMS_H_

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "submax/counting_oracle.h"
#include "submax/element_set.h"
#include "submax/matroid.h"

namespace submax {

struct BetaParam {
  Value beta = 1.0L;
  // Ratio-optimal choices: 1 for the monotone problem, 1/sqrt(2) for the
  // general one.
  static BetaParam msm() { return {1.0L}; }
  static BetaParam gsm() { return {1.0L / std::sqrt(2.0L)}; }
};

enum class Decision { kAdded, kSwapped, kRejected };

struct TraceEntry {
  int element = -1;
  Decision decision = Decision::kRejected;
  int swapped_out = -1;   // valid when decision == kSwapped
  char copy = '-';        // 'A' or 'B' for the two-copy algorithm
  Value delta = 0;
};

// State of one swap pass: the grown (possibly infeasible) set A, the
// feasible solution A' ⊆ A, the incrementally maintained f(A), and the
// weight delta[e] fixed when e was admitted.
struct SwapState {
  explicit SwapState(int n) : grown(n), solution(n), delta(n, 0) {}
  ElementSet grown;
  ElementSet solution;
  Value grown_value = 0;
  std::vector<Value> delta;
};

// One swap step for element e with precomputed weight delta_e. Performs no
// oracle queries. On accept, grown_value advances by delta_e. swapped_out,
// when non-null, receives the displaced element on a swap.
Decision process(const Matroid& m, int e, SwapState& state, Value delta_e,
                 Value beta, int* swapped_out = nullptr);

struct AlgoResult {
  ElementSet solution;
  Value value = 0;
  long queries = 0;            // algorithmic query count
  long reporting_queries = 0;  // uncounted evaluations used for reporting
  std::vector<TraceEntry> trace;
};

struct QuickSwapRun {
  AlgoResult result;
  SwapState state;
};

struct QuickSwapNmRun {
  AlgoResult result;
  SwapState a;
  SwapState b;
  bool disjoint_throughout = true;
};

// Single-pass swap algorithm: one query per element, exactly n total.
QuickSwapRun quickswap(CountingOracle& oracle, const Matroid& m,
                       std::span<const int> order,
                       BetaParam beta = BetaParam::msm(),
                       bool capture_trace = false);

// Two concurrent swap passes over disjoint copies; two queries per element
// are charged, 2n total. Returns the better of the two solutions.
QuickSwapNmRun quickswap_nm(CountingOracle& oracle, const Matroid& m,
                            std::span<const int> order,
                            BetaParam beta = BetaParam::gsm(),
                            bool capture_trace = false);

// Single-pass swap benchmark: weight w_e = f(e | S') at arrival, swap when
// w_e is at least twice the smallest swappable weight. At most 2n queries.
AlgoResult ck(CountingOracle& oracle, const Matroid& m,
              std::span<const int> order, bool capture_trace = false);

// Max-heap greedy with stale-check: a popped element is committed only when
// it was also the most recently popped one; otherwise its marginal is
// refreshed and it is pushed back.
AlgoResult lazy_greedy(CountingOracle& oracle, const Matroid& m,
                       std::span<const int> order);

// Descending-thresholds greedy. The threshold decays geometrically by
// (1 - epsilon) from the max singleton value d down to epsilon * d / rank.
// Cached marginal upper bounds avoid requeries below the threshold.
AlgoResult threshold_greedy(CountingOracle& oracle, const Matroid& m,
                            std::span<const int> order,
                            Value epsilon = 1.0L / 6.0L);

// Exhaustive maximizer over all independent sets; n <= 20. Ties are broken
// toward the lexicographically smallest element sequence. Evaluations do
// not touch any counting oracle.
std::pair<ElementSet, Value> brute_force_opt(const CountingOracle::Fn& f,
                                             const Matroid& m, int n);

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_H_
