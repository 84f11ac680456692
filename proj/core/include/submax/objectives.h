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

#ifndef SUBMAX_OBJECTIVES_H_
#define SUBMAX_OBJECTIVES_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "submax/counting_oracle.h"
#include "submax/element_set.h"
#include "submax/graph.h"

namespace submax {

// f(S) = |{v : exists s in S with (s, v) an arc}|. Monotone submodular,
// f(empty) = 0. A node covers itself only through an explicit self-loop.
class CoverageObjective {
 public:
  explicit CoverageObjective(std::shared_ptr<const DirectedGraph> graph);
  Value operator()(const ElementSet& s) const;
  CountingOracle::Fn fn() const;

 private:
  std::shared_ptr<const DirectedGraph> graph_;
};

// The tight family: ground set {x_0, ..., x_m, o} with g(x_i) = 2^i,
// g(o) = 2^(m+2) - 2, and f(S) = min{sum of g over S, g(o)}.
class TightInstanceObjective {
 public:
  explicit TightInstanceObjective(int m);
  Value operator()(const ElementSet& s) const;
  CountingOracle::Fn fn() const;

  int m() const { return m_; }
  int ground_size() const { return m_ + 2; }
  std::int64_t g(int e) const { return g_[e]; }
  std::int64_t cap() const { return g_.back(); }

 private:
  int m_;
  std::vector<std::int64_t> g_;
};

// f(S) = number of arcs leaving S. Non-negative submodular, non-monotone.
class DirectedCutObjective {
 public:
  explicit DirectedCutObjective(std::shared_ptr<const DirectedGraph> graph);
  Value operator()(const ElementSet& s) const;
  CountingOracle::Fn fn() const;

 private:
  std::shared_ptr<const DirectedGraph> graph_;
};

// f(S) = sum of per-element weights.
class ModularObjective {
 public:
  explicit ModularObjective(std::vector<Value> weights);
  Value operator()(const ElementSet& s) const;
  CountingOracle::Fn fn() const;

 private:
  std::vector<Value> weights_;
};

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_H_
