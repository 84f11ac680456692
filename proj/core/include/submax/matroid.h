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

#ifndef SUBMAX_MATROID_H_
#define SUBMAX_MATROID_H_

#include <optional>
#include <span>
#include <vector>

#include "submax/element_set.h"

namespace submax {

class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual bool is_independent(const ElementSet& s) const = 0;
  virtual int rank() const = 0;
  virtual int ground_size() const = 0;
};

// S independent iff |S| <= k.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int n, int k);
  bool is_independent(const ElementSet& s) const override;
  int rank() const override;
  int ground_size() const override { return n_; }
  int cap() const { return k_; }

 private:
  int n_;
  int k_;
};

// S independent iff |S ∩ P_i| <= k_i for every part P_i.
class PartitionMatroid : public Matroid {
 public:
  // part_of maps each element to its part index; caps gives the per-part
  // limits. Parts must cover 0..num_parts-1 as indices.
  PartitionMatroid(std::vector<int> part_of, std::vector<int> caps);

  bool is_independent(const ElementSet& s) const override;
  int rank() const override;
  int ground_size() const override { return static_cast<int>(part_of_.size()); }

  int num_parts() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& part_of() const { return part_of_; }
  const std::vector<int>& caps() const { return caps_; }

 private:
  std::vector<int> part_of_;
  std::vector<int> caps_;
  std::vector<int> part_sizes_;
};

// Smallest-weight a in sol with sol - a + e independent; ties go to the
// smallest element id. Returns nullopt when no candidate exists (e is a
// loop with respect to sol). sol itself must be independent.
std::optional<int> swap_candidate(const Matroid& m, const ElementSet& sol,
                                  int e, std::span<const Value> weights);

}  // namespace submax

#endif  // SUBMAX_MATROID_H_
