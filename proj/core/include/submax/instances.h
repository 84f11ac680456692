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

#ifndef SUBMAX_INSTANCES_H_
#define SUBMAX_INSTANCES_H_

#include <memory>
#include <string>
#include <vector>

#include "submax/counting_oracle.h"
#include "submax/graph.h"
#include "submax/matroid.h"
#include "submax/rng.h"

namespace submax {

// A ready-to-run problem: ground set, value function, matroid, provenance.
struct Instance {
  std::string name;
  int n = 0;
  CountingOracle::Fn objective;
  std::shared_ptr<const Matroid> matroid;
  std::shared_ptr<const DirectedGraph> graph;  // null for non-graph objectives
  std::vector<int> part_of;  // empty when the default matroid is uniform
  int num_parts = 0;
  bool monotone = true;
  std::string provenance;

  // Rebuilds the matroid with a uniform per-part cap (or a uniform matroid
  // cap when there is no partition).
  std::shared_ptr<const Matroid> matroid_with_cap(int cap) const;
};

enum class InstanceKind { kSnap, kErdosRenyi, kSbm, kTight, kRandomSmall };

struct InstanceSpec {
  InstanceKind kind = InstanceKind::kTight;
  std::string edges_path;
  std::string labels_path;
  int n = 1000;             // erdos_renyi
  double p = 1.0 / 500;     // erdos_renyi
  int num_parts = 20;       // erdos_renyi
  int num_communities = 100;  // sbm
  int size_min = 10, size_max = 50;
  double p_intra = 1.0 / 30;
  int m = 10;               // tight
  int max_n = 8;            // random_small
  std::uint64_t seed = 0;

  std::string canonical() const;
  Instance build() const;
};

struct SnapLoadResult {
  std::shared_ptr<const DirectedGraph> graph;
  std::vector<int> part_of;
  int num_parts = 0;
  int raw_arcs = 0;    // arc lines before deduplication
  int dedup_arcs = 0;
  int unlabeled_nodes = 0;  // assigned to a synthetic extra part
};

// Parses whitespace-separated "u v" arc lines ('#' comments skipped); node
// ids are remapped to dense 0..n-1 in first-appearance order. The optional
// labels file maps "node part" per line; unlabeled nodes get a synthetic
// extra part.
SnapLoadResult load_snap(const std::string& edges_path,
                         const std::string& labels_path = "");

struct GeneratedGraph {
  std::shared_ptr<const DirectedGraph> graph;
  std::vector<int> part_of;
  int num_parts = 0;
};

// Undirected G(n, p) materialized with both arc directions; each node gets
// a uniformly random part.
GeneratedGraph gen_erdos_renyi(int n, double p, int num_parts, RngStream& edges_rng,
                               RngStream& parts_rng);

// Stochastic block model: community sizes uniform in [size_min, size_max],
// intra-community edges with probability p_intra, none across communities.
// Parts are the communities.
GeneratedGraph gen_sbm(int num_communities, int size_min, int size_max,
                       double p_intra, RngStream& rng);

// The tight family: tight objective, uniform matroid k = 1, canonical order
// x_0, ..., x_m, o (identity on ids).
Instance build_tight(int m);

enum class RandomObjective { kCoverage, kCut, kEither };

struct RandomInstanceConfig {
  int n = 6;  // ground size cap; sampled instances use exactly n nodes
  RandomObjective objective = RandomObjective::kEither;
  double arc_probability = 0.3;
};

// Random digraph with a coverage or cut objective and a random uniform or
// partition matroid. Fully determined by the stream.
Instance sample_random_instance(const RandomInstanceConfig& config,
                                RngStream& rng);

// Writes the graph's arcs in SNAP edge-list form.
void write_snap(std::ostream& out, const DirectedGraph& graph);

}  // namespace submax

#endif  // SUBMAX_INSTANCES_H_
