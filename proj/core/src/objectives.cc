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

#include "submax/objectives.h"

#include <stdexcept>

namespace submax {

CoverageObjective::CoverageObjective(std::shared_ptr<const DirectedGraph> graph)
    : graph_(std::move(graph)) {}

Value CoverageObjective::operator()(const ElementSet& s) const {
  std::vector<char> covered(graph_->num_nodes(), 0);
  std::int64_t count = 0;
  for (int u : s.elements()) {
    for (int v : graph_->out_neighbors(u)) {
      if (!covered[v]) {
        covered[v] = 1;
        ++count;
      }
    }
  }
  return static_cast<Value>(count);
}

CountingOracle::Fn CoverageObjective::fn() const {
  return [obj = *this](const ElementSet& s) { return obj(s); };
}

TightInstanceObjective::TightInstanceObjective(int m) : m_(m) {
  if (m < 1 || m > 60) throw std::invalid_argument("tight objective: 1 <= m <= 60");
  g_.resize(m + 2);
  for (int i = 0; i <= m; ++i) g_[i] = std::int64_t{1} << i;
  g_[m + 1] = (std::int64_t{1} << (m + 2)) - 2;
}

Value TightInstanceObjective::operator()(const ElementSet& s) const {
  std::int64_t sum = 0;
  for (int e : s.elements()) sum += g_[e];
  return static_cast<Value>(std::min(sum, g_.back()));
}

CountingOracle::Fn TightInstanceObjective::fn() const {
  return [obj = *this](const ElementSet& s) { return obj(s); };
}

DirectedCutObjective::DirectedCutObjective(std::shared_ptr<const DirectedGraph> graph)
    : graph_(std::move(graph)) {}

Value DirectedCutObjective::operator()(const ElementSet& s) const {
  std::int64_t count = 0;
  for (int u : s.elements()) {
    for (int v : graph_->out_neighbors(u)) {
      if (!s.contains(v)) ++count;
    }
  }
  return static_cast<Value>(count);
}

CountingOracle::Fn DirectedCutObjective::fn() const {
  return [obj = *this](const ElementSet& s) { return obj(s); };
}

ModularObjective::ModularObjective(std::vector<Value> weights)
    : weights_(std::move(weights)) {}

Value ModularObjective::operator()(const ElementSet& s) const {
  Value sum = 0;
  for (int e : s.elements()) sum += weights_[e];
  return sum;
}

CountingOracle::Fn ModularObjective::fn() const {
  return [obj = *this](const ElementSet& s) { return obj(s); };
}

}  // namespace submax
