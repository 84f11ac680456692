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

#include "submax/matroid.h"

#include <algorithm>
#include <stdexcept>

namespace submax {

UniformMatroid::UniformMatroid(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0) throw std::invalid_argument("uniform matroid: n, k >= 0");
}

bool UniformMatroid::is_independent(const ElementSet& s) const {
  if (s.universe_size() != n_) throw std::invalid_argument("set universe mismatch");
  return s.size() <= k_;
}

int UniformMatroid::rank() const { return std::min(k_, n_); }

PartitionMatroid::PartitionMatroid(std::vector<int> part_of, std::vector<int> caps)
    : part_of_(std::move(part_of)), caps_(std::move(caps)) {
  part_sizes_.assign(caps_.size(), 0);
  for (int p : part_of_) {
    if (p < 0 || p >= static_cast<int>(caps_.size()))
      throw std::invalid_argument("partition matroid: part index out of range");
    ++part_sizes_[p];
  }
  for (int c : caps_) {
    if (c < 0) throw std::invalid_argument("partition matroid: negative cap");
  }
}

bool PartitionMatroid::is_independent(const ElementSet& s) const {
  if (s.universe_size() != ground_size())
    throw std::invalid_argument("set universe mismatch");
  std::vector<int> counts(caps_.size(), 0);
  for (int e : s.elements()) {
    if (++counts[part_of_[e]] > caps_[part_of_[e]]) return false;
  }
  return true;
}

int PartitionMatroid::rank() const {
  int r = 0;
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    r += std::min(caps_[i], part_sizes_[i]);
  }
  return r;
}

std::optional<int> swap_candidate(const Matroid& m, const ElementSet& sol,
                                  int e, std::span<const Value> weights) {
  if (!m.is_independent(sol))
    throw std::logic_error("swap_candidate: solution is not independent");
  std::optional<int> best;
  Value best_w = 0;
  for (int a : sol.elements()) {
    if (a == e) continue;
    if (!m.is_independent(sol.without(a).with(e))) continue;
    if (!best || weights[a] < best_w) {
      best = a;
      best_w = weights[a];
    }
  }
  return best;
}

}  // namespace submax
