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

#include <memory>

#include "doctest.h"
#include "submax/objectives.h"

using namespace submax;

namespace {

std::shared_ptr<DirectedGraph> graph_of(int n,
                                        std::vector<std::pair<int, int>> arcs) {
  return std::make_shared<DirectedGraph>(n, std::move(arcs));
}

ElementSet from_mask(int n, unsigned mask) {
  ElementSet s(n);
  for (int e = 0; e < n; ++e) {
    if ((mask >> e) & 1) s.add(e);
  }
  return s;
}

// Exhaustive diminishing-returns check: f(e|S) >= f(e|T) for all S ⊆ T,
// e ∉ T. The independent oracle for the submodularity claims.
void check_submodular(const CountingOracle::Fn& f, int n) {
  for (unsigned t = 0; t < (1u << n); ++t) {
    ElementSet tset = from_mask(n, t);
    // Enumerate subsets s of t.
    for (unsigned s = t;; s = (s - 1) & t) {
      ElementSet sset = from_mask(n, s);
      for (int e = 0; e < n; ++e) {
        if (tset.contains(e)) continue;
        CHECK(f(sset.with(e)) - f(sset) >= f(tset.with(e)) - f(tset));
      }
      if (s == 0) break;
    }
  }
}

bool is_monotone(const CountingOracle::Fn& f, int n) {
  for (unsigned s = 0; s < (1u << n); ++s) {
    ElementSet sset = from_mask(n, s);
    for (int e = 0; e < n; ++e) {
      if (sset.contains(e)) continue;
      if (f(sset.with(e)) < f(sset)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("coverage objective") {
  auto g = graph_of(3, {{0, 1}, {0, 2}, {1, 2}});
  CoverageObjective f(g);
  CHECK(f(ElementSet(3)) == 0);
  CHECK(f(from_mask(3, 0b001)) == 2);  // {0} covers 1, 2
  CHECK(f(from_mask(3, 0b011)) == 2);  // {0,1}: union still {1,2}
  CHECK(f(from_mask(3, 0b111)) == 2);  // nodes with in-degree >= 1

  // A self-loop covers the node itself.
  auto loop = graph_of(2, {{0, 0}, {0, 1}});
  CHECK(CoverageObjective(loop)(from_mask(2, 0b01)) == 2);

  // Parallel arcs deduplicate.
  auto par = graph_of(2, {{0, 1}, {0, 1}});
  CHECK(par->num_arcs() == 1);
}

TEST_CASE("tight instance objective") {
  TightInstanceObjective f(2);
  CHECK(f.ground_size() == 4);
  CHECK(f.g(0) == 1);
  CHECK(f.g(1) == 2);
  CHECK(f.g(2) == 4);
  CHECK(f.g(3) == 14);  // 2^4 - 2
  CHECK(f(from_mask(4, 0b0111)) == 7);   // {x0,x1,x2}
  CHECK(f(from_mask(4, 0b1000)) == 14);  // {o}
  CHECK(f(from_mask(4, 0b1100)) == 14);  // {x2,o} capped at g(o)
  CHECK_THROWS_AS(TightInstanceObjective(0), std::invalid_argument);

  // Capped on every superset of {o}.
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (mask & 0b1000) CHECK(f(from_mask(4, mask)) == 14);
  }
}

TEST_CASE("directed cut objective") {
  auto two_cycle = graph_of(2, {{0, 1}, {1, 0}});
  DirectedCutObjective f(two_cycle);
  CHECK(f(ElementSet(2)) == 0);
  CHECK(f(from_mask(2, 0b11)) == 0);
  CHECK(f(from_mask(2, 0b01)) == 1);

  auto star = graph_of(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(DirectedCutObjective(star)(from_mask(6, 0b000001)) == 5);
}

TEST_CASE("submodularity, exhaustive on small instances") {
  auto g = graph_of(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}});
  check_submodular(CoverageObjective(g).fn(), 5);
  check_submodular(DirectedCutObjective(g).fn(), 5);
  check_submodular(TightInstanceObjective(3).fn(), 5);
}

TEST_CASE("monotonicity holds for coverage and tight, fails for cut") {
  auto g = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(is_monotone(CoverageObjective(g).fn(), 4));
  CHECK(is_monotone(TightInstanceObjective(2).fn(), 4));
  CHECK_FALSE(is_monotone(DirectedCutObjective(g).fn(), 4));
}

TEST_CASE("modular objective") {
  ModularObjective f({2, 3, 5});
  CHECK(f(ElementSet(3)) == 0);
  CHECK(f(from_mask(3, 0b111)) == 10);
}
