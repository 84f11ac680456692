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

#ifndef SUBMAX_GRAPH_H_
#define SUBMAX_GRAPH_H_

#include <utility>
#include <vector>

namespace submax {

// Simple directed graph over nodes 0..n-1. Parallel arcs are deduplicated
// on construction; self-loops are kept.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(int n, std::vector<std::pair<int, int>> arcs);

  int num_nodes() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int u) const { return out_[u]; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> out_;
};

}  // namespace submax

#endif  // SUBMAX_GRAPH_H_
