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

#include "submax/graph.h"

#include <algorithm>
#include <stdexcept>

namespace submax {

DirectedGraph::DirectedGraph(int n, std::vector<std::pair<int, int>> arcs)
    : n_(n) {
  if (n < 0) throw std::invalid_argument("negative node count");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("arc endpoint out of range");
  }
  arcs_ = std::move(arcs);
  out_.assign(n, {});
  for (auto [u, v] : arcs_) out_[u].push_back(v);
}

}  // namespace submax
