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

#include <vector>

#include "doctest.h"
#include "submax/matroid.h"
#include "submax/rng.h"

using namespace submax;

namespace {

ElementSet from_mask(int n, unsigned mask) {
  ElementSet s(n);
  for (int e = 0; e < n; ++e) {
    if ((mask >> e) & 1) s.add(e);
  }
  return s;
}

}  // namespace

TEST_CASE("uniform matroid independence and rank") {
  UniformMatroid m(10, 2);
  ElementSet s(10);
  CHECK(m.is_independent(s));  // empty set
  s.add(0);
  s.add(5);
  CHECK(m.is_independent(s));
  s.add(7);
  CHECK_FALSE(m.is_independent(s));
  CHECK(UniformMatroid(10, 3).rank() == 3);
  CHECK(UniformMatroid(2, 5).rank() == 2);  // rank capped by ground size
}

TEST_CASE("partition matroid independence and rank") {
  // Parts {0,1}, {2,3}; caps 1,1.
  PartitionMatroid m({0, 0, 1, 1}, {1, 1});
  CHECK(m.is_independent(from_mask(4, 0b0101)));   // {0,2}
  CHECK_FALSE(m.is_independent(from_mask(4, 0b0011)));  // {0,1}
  CHECK(m.is_independent(ElementSet(4)));
  CHECK(m.rank() == 2);

  // 41 singleton-capped parts, all nonempty.
  std::vector<int> part_of(41);
  for (int i = 0; i < 41; ++i) part_of[i] = i;
  CHECK(PartitionMatroid(part_of, std::vector<int>(41, 1)).rank() == 41);

  // An empty part contributes min(cap, 0) = 0.
  PartitionMatroid sparse({0, 0}, {1, 2});
  CHECK(sparse.rank() == 1);
}

TEST_CASE("partition matroid rejects bad construction") {
  CHECK_THROWS_AS(PartitionMatroid({0, 2}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PartitionMatroid({0}, {-1}), std::invalid_argument);
  PartitionMatroid m({0, 1}, {1, 1});
  CHECK_THROWS_AS(m.is_independent(ElementSet(5)), std::invalid_argument);
}

TEST_CASE("partition independence agrees with a per-part counter") {
  RngStream rng(3, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng.below(10));
    int parts = 1 + static_cast<int>(rng.below(4));
    std::vector<int> part_of(n);
    for (int& p : part_of) p = static_cast<int>(rng.below(parts));
    std::vector<int> caps(parts);
    for (int& c : caps) c = static_cast<int>(rng.below(3));
    PartitionMatroid m(part_of, caps);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ElementSet s = from_mask(n, mask);
      std::vector<int> counts(parts, 0);
      bool expect = true;
      for (int e : s.elements()) {
        if (++counts[part_of[e]] > caps[part_of[e]]) expect = false;
      }
      CHECK(m.is_independent(s) == expect);
    }
  }
}

TEST_CASE("downward closure on sampled independent sets") {
  RngStream rng(11, 5);
  std::vector<int> part_of = {0, 0, 1, 1, 2, 2, 2};
  PartitionMatroid pm(part_of, {1, 2, 2});
  UniformMatroid um(7, 3);
  for (const Matroid* m : {static_cast<const Matroid*>(&pm),
                           static_cast<const Matroid*>(&um)}) {
    for (int trial = 0; trial < 100; ++trial) {
      ElementSet s = from_mask(7, static_cast<unsigned>(rng.below(1 << 7)));
      if (!m->is_independent(s)) continue;
      for (int e : s.elements()) {
        CHECK(m->is_independent(s.without(e)));
      }
    }
  }
}

TEST_CASE("augmentation property, exhaustive on small ground sets") {
  PartitionMatroid pm({0, 0, 1, 1, 1, 2}, {1, 2, 1});
  UniformMatroid um(6, 3);
  for (const Matroid* m : {static_cast<const Matroid*>(&pm),
                           static_cast<const Matroid*>(&um)}) {
    for (unsigned smask = 0; smask < (1u << 6); ++smask) {
      ElementSet s = from_mask(6, smask);
      if (!m->is_independent(s)) continue;
      for (unsigned tmask = 0; tmask < (1u << 6); ++tmask) {
        ElementSet t = from_mask(6, tmask);
        if (!m->is_independent(t) || t.size() <= s.size()) continue;
        bool augmented = false;
        for (int e : t.difference(s).elements()) {
          if (m->is_independent(s.with(e))) augmented = true;
        }
        CHECK(augmented);
      }
    }
  }
}
