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

#include "submax/algorithms.h"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace submax {

namespace {

void validate_order(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order is not a permutation of the ground set");
  std::vector<char> seen(n, 0);
  for (int e : order) {
    if (e < 0 || e >= n || seen[e])
      throw std::invalid_argument("order is not a permutation of the ground set");
    seen[e] = 1;
  }
}

ElementSet singleton(int n, int e) {
  ElementSet s(n);
  s.add(e);
  return s;
}

}  // namespace

Decision process(const Matroid& m, int e, SwapState& state, Value delta_e,
                 Value beta, int* swapped_out) {
  if (state.grown.contains(e))
    throw std::logic_error("process: element already in grown set");
  assert(state.solution.subset_of(state.grown));
  if (m.is_independent(state.solution.with(e)) && delta_e >= 0) {
    state.grown.add(e);
    state.solution.add(e);
    state.delta[e] = delta_e;
    state.grown_value += delta_e;
    return Decision::kAdded;
  }
  auto a = swap_candidate(m, state.solution, e, state.delta);
  if (a && delta_e >= (1 + beta) * state.delta[*a]) {
    state.solution.remove(*a);
    state.solution.add(e);
    state.grown.add(e);
    state.delta[e] = delta_e;
    state.grown_value += delta_e;
    if (swapped_out) *swapped_out = *a;
    return Decision::kSwapped;
  }
  return Decision::kRejected;
}

QuickSwapRun quickswap(CountingOracle& oracle, const Matroid& m,
                       std::span<const int> order, BetaParam beta,
                       bool capture_trace) {
  const int n = oracle.universe_size();
  validate_order(order, n);
  SwapState state(n);
  state.grown_value = oracle.bootstrap();
  QuickSwapRun run{AlgoResult{ElementSet(n)}, std::move(state)};
  for (int e : order) {
    Value delta_e = oracle.value(run.state.grown.with(e)) - run.state.grown_value;
    int out = -1;
    Decision d = process(m, e, run.state, delta_e, beta.beta, &out);
    if (capture_trace) run.result.trace.push_back({e, d, out, '-', delta_e});
  }
  run.result.solution = run.state.solution;
  run.result.value = oracle.value_uncounted(run.state.solution);
  run.result.queries = oracle.query_count();
  run.result.reporting_queries = oracle.reporting_queries();
  assert(oracle.count_consistent());
  return run;
}

QuickSwapNmRun quickswap_nm(CountingOracle& oracle, const Matroid& m,
                            std::span<const int> order, BetaParam beta,
                            bool capture_trace) {
  const int n = oracle.universe_size();
  validate_order(order, n);
  QuickSwapNmRun run{AlgoResult{ElementSet(n)}, SwapState(n), SwapState(n)};
  Value f0 = oracle.bootstrap();
  run.a.grown_value = f0;
  run.b.grown_value = f0;
  // Two evaluations are charged per element; the counting oracle may
  // memoize a collision when both grown sets are still empty, so the
  // algorithmic count is tracked here.
  long charged = 0;
  for (int e : order) {
    Value delta_a = oracle.value(run.a.grown.with(e)) - run.a.grown_value;
    Value delta_b = oracle.value(run.b.grown.with(e)) - run.b.grown_value;
    charged += 2;
    // Strict comparison: ties are processed by the B copy.
    char copy = delta_a > delta_b ? 'A' : 'B';
    SwapState& target = copy == 'A' ? run.a : run.b;
    Value delta_e = copy == 'A' ? delta_a : delta_b;
    int out = -1;
    Decision d = process(m, e, target, delta_e, beta.beta, &out);
    if (capture_trace) run.result.trace.push_back({e, d, out, copy, delta_e});
    if (!run.a.grown.intersect(run.b.grown).empty()) run.disjoint_throughout = false;
  }
  Value va = oracle.value_uncounted(run.a.solution);
  Value vb = oracle.value_uncounted(run.b.solution);
  if (va >= vb) {
    run.result.solution = run.a.solution;
    run.result.value = va;
  } else {
    run.result.solution = run.b.solution;
    run.result.value = vb;
  }
  run.result.queries = charged;
  run.result.reporting_queries = oracle.reporting_queries();
  assert(oracle.query_count() <= charged);
  return run;
}

AlgoResult ck(CountingOracle& oracle, const Matroid& m,
              std::span<const int> order, bool capture_trace) {
  const int n = oracle.universe_size();
  validate_order(order, n);
  oracle.bootstrap();
  AlgoResult result{ElementSet(n)};
  ElementSet sol(n);
  std::vector<Value> w(n, 0);
  for (int e : order) {
    // f(sol) is memoized except right after a swap, so each element costs
    // one query plus occasionally a second one.
    Value f_sol = oracle.value(sol);
    w[e] = oracle.value(sol.with(e)) - f_sol;
    if (m.is_independent(sol.with(e))) {
      sol.add(e);
      if (capture_trace)
        result.trace.push_back({e, Decision::kAdded, -1, '-', w[e]});
      continue;
    }
    auto a = swap_candidate(m, sol, e, w);
    if (a && w[e] >= 2 * w[*a]) {
      sol.remove(*a);
      sol.add(e);
      if (capture_trace)
        result.trace.push_back({e, Decision::kSwapped, *a, '-', w[e]});
    } else if (capture_trace) {
      result.trace.push_back({e, Decision::kRejected, -1, '-', w[e]});
    }
  }
  result.solution = sol;
  result.value = oracle.value_uncounted(sol);
  result.queries = oracle.query_count();
  result.reporting_queries = oracle.reporting_queries();
  return result;
}

AlgoResult lazy_greedy(CountingOracle& oracle, const Matroid& m,
                       std::span<const int> order) {
  const int n = oracle.universe_size();
  validate_order(order, n);
  Value f0 = oracle.bootstrap();
  AlgoResult result{ElementSet(n)};
  // Max heap on (priority, earliest order position). Priorities are upper
  // bounds on the current marginal except right after a refresh.
  using Entry = std::tuple<Value, int, int>;  // (priority, -position, element)
  std::priority_queue<Entry> heap;
  for (int i = 0; i < n; ++i) {
    int e = order[i];
    heap.push({oracle.value(singleton(n, e)) - f0, -i, e});
  }
  ElementSet sol(n);
  Value f_sol = f0;
  int last = -1;
  while (!heap.empty()) {
    auto [p, pos, e] = heap.top();
    heap.pop();
    if (e == last) {
      // Popped twice in a row: the priority is a fresh marginal against
      // the current solution, so commit.
      sol.add(e);
      f_sol += p;
      last = -1;
      continue;
    }
    last = e;
    if (!m.is_independent(sol.with(e))) continue;  // dropped for good
    Value fresh = oracle.value(sol.with(e)) - f_sol;
    heap.push({fresh, pos, e});
  }
  result.solution = sol;
  result.value = oracle.value_uncounted(sol);
  result.queries = oracle.query_count();
  result.reporting_queries = oracle.reporting_queries();
  return result;
}

AlgoResult threshold_greedy(CountingOracle& oracle, const Matroid& m,
                            std::span<const int> order, Value epsilon) {
  const int n = oracle.universe_size();
  validate_order(order, n);
  if (!(epsilon > 0 && epsilon < 1))
    throw std::invalid_argument("threshold_greedy: epsilon must be in (0, 1)");
  Value f0 = oracle.bootstrap();
  AlgoResult result{ElementSet(n)};
  std::vector<Value> bound(n, 0);
  Value d = 0;
  for (int e : order) {
    bound[e] = oracle.value(singleton(n, e)) - f0;
    d = std::max(d, bound[e]);
  }
  ElementSet sol(n);
  Value f_sol = f0;
  const int r = m.rank();
  if (d > 0 && r > 0) {
    std::vector<char> dropped(n, 0);
    const Value tau_min = epsilon * d / r;
    for (Value tau = d; tau >= tau_min; tau *= (1 - epsilon)) {
      for (int e : order) {
        if (sol.contains(e) || dropped[e] || bound[e] < tau) continue;
        if (!m.is_independent(sol.with(e))) {
          dropped[e] = 1;
          continue;
        }
        Value fresh = oracle.value(sol.with(e)) - f_sol;
        bound[e] = fresh;
        if (fresh >= tau) {
          sol.add(e);
          f_sol += fresh;
        }
      }
    }
  }
  result.solution = sol;
  result.value = oracle.value_uncounted(sol);
  result.queries = oracle.query_count();
  result.reporting_queries = oracle.reporting_queries();
  return result;
}

namespace {

bool lex_less(const ElementSet& a, const ElementSet& b) {
  auto ea = a.elements(), eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace

std::pair<ElementSet, Value> brute_force_opt(const CountingOracle::Fn& f,
                                             const Matroid& m, int n) {
  if (n > 20) throw std::invalid_argument("brute_force_opt: n > 20 refused");
  if (n < 0) throw std::invalid_argument("brute_force_opt: negative n");
  ElementSet best(n);
  Value best_value = f(best);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    ElementSet s(n);
    for (int e = 0; e < n; ++e) {
      if ((mask >> e) & 1) s.add(e);
    }
    if (!m.is_independent(s)) continue;
    Value v = f(s);
    if (v > best_value || (v == best_value && lex_less(s, best))) {
      best = s;
      best_value = v;
    }
  }
  return {best, best_value};
}

}  // namespace submax
