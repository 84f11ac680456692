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

#include "submax/instances.h"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "submax/objectives.h"

namespace submax {

std::shared_ptr<const Matroid> Instance::matroid_with_cap(int cap) const {
  if (!part_of.empty()) {
    return std::make_shared<PartitionMatroid>(part_of,
                                              std::vector<int>(num_parts, cap));
  }
  return std::make_shared<UniformMatroid>(n, cap);
}

std::string InstanceSpec::canonical() const {
  std::ostringstream os;
  switch (kind) {
    case InstanceKind::kSnap:
      os << "snap edges=" << edges_path << " labels=" << labels_path;
      break;
    case InstanceKind::kErdosRenyi:
      os << "erdos_renyi n=" << n << " p=" << p << " parts=" << num_parts
         << " seed=" << seed;
      break;
    case InstanceKind::kSbm:
      os << "sbm communities=" << num_communities << " sizes=[" << size_min
         << "," << size_max << "] p_intra=" << p_intra << " seed=" << seed;
      break;
    case InstanceKind::kTight:
      os << "tight m=" << m;
      break;
    case InstanceKind::kRandomSmall:
      os << "random_small n=" << max_n << " seed=" << seed;
      break;
  }
  return os.str();
}

namespace {

Instance coverage_instance(std::string name, GeneratedGraph g,
                           std::string provenance) {
  Instance inst;
  inst.name = std::move(name);
  inst.n = g.graph->num_nodes();
  inst.objective = CoverageObjective(g.graph).fn();
  inst.graph = g.graph;
  inst.part_of = std::move(g.part_of);
  inst.num_parts = g.num_parts;
  inst.matroid = std::make_shared<PartitionMatroid>(
      inst.part_of, std::vector<int>(inst.num_parts, 1));
  inst.monotone = true;
  inst.provenance = std::move(provenance);
  return inst;
}

}  // namespace

Instance InstanceSpec::build() const {
  switch (kind) {
    case InstanceKind::kSnap: {
      SnapLoadResult loaded = load_snap(edges_path, labels_path);
      GeneratedGraph g{loaded.graph, loaded.part_of, loaded.num_parts};
      if (g.part_of.empty()) {
        // No labels: single part covering everything.
        g.part_of.assign(loaded.graph->num_nodes(), 0);
        g.num_parts = 1;
      }
      return coverage_instance("snap", std::move(g), canonical());
    }
    case InstanceKind::kErdosRenyi: {
      RngStream edges(seed, streams::kEdges);
      RngStream parts(seed, streams::kParts);
      return coverage_instance("erdos_renyi",
                               gen_erdos_renyi(n, p, num_parts, edges, parts),
                               canonical());
    }
    case InstanceKind::kSbm: {
      RngStream rng(seed, streams::kEdges);
      return coverage_instance(
          "sbm", gen_sbm(num_communities, size_min, size_max, p_intra, rng),
          canonical());
    }
    case InstanceKind::kTight: {
      Instance inst = build_tight(m);
      inst.provenance = canonical();
      return inst;
    }
    case InstanceKind::kRandomSmall: {
      RngStream rng(seed, streams::kSampler);
      RandomInstanceConfig config;
      config.n = max_n;
      Instance inst = sample_random_instance(config, rng);
      inst.provenance = canonical();
      return inst;
    }
  }
  throw std::logic_error("unknown instance kind");
}

SnapLoadResult load_snap(const std::string& edges_path,
                         const std::string& labels_path) {
  std::ifstream edges(edges_path);
  if (!edges) throw std::runtime_error("cannot open edge file: " + edges_path);
  SnapLoadResult result;
  std::unordered_map<long long, int> id_map;
  std::vector<std::pair<int, int>> arcs;
  auto dense_id = [&](long long raw) {
    auto [it, inserted] = id_map.emplace(raw, static_cast<int>(id_map.size()));
    return it->second;
  };
  std::string line;
  int line_no = 0;
  while (std::getline(edges, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream is(line);
    long long u, v;
    if (!(is >> u >> v)) {
      throw std::runtime_error(edges_path + ":" + std::to_string(line_no) +
                               ": malformed edge line");
    }
    int du = dense_id(u);  // sequenced: first appearance fixes the dense id
    int dv = dense_id(v);
    arcs.emplace_back(du, dv);
  }
  result.raw_arcs = static_cast<int>(arcs.size());
  const int n = static_cast<int>(id_map.size());
  auto graph = std::make_shared<DirectedGraph>(n, std::move(arcs));
  result.dedup_arcs = graph->num_arcs();
  result.graph = graph;

  if (!labels_path.empty()) {
    std::ifstream labels(labels_path);
    if (!labels)
      throw std::runtime_error("cannot open label file: " + labels_path);
    std::vector<int> part_of(n, -1);
    int max_part = -1;
    line_no = 0;
    while (std::getline(labels, line)) {
      ++line_no;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      std::istringstream is(line);
      long long node;
      int part;
      if (!(is >> node >> part) || part < 0) {
        throw std::runtime_error(labels_path + ":" + std::to_string(line_no) +
                                 ": malformed label line");
      }
      auto it = id_map.find(node);
      if (it == id_map.end()) continue;  // label for a node with no arcs
      part_of[it->second] = part;
      max_part = std::max(max_part, part);
    }
    // Nodes missing from the label file go to a synthetic extra part.
    int synthetic = max_part + 1;
    for (int& p : part_of) {
      if (p < 0) {
        p = synthetic;
        ++result.unlabeled_nodes;
      }
    }
    result.num_parts = result.unlabeled_nodes > 0 ? synthetic + 1 : synthetic;
    result.part_of = std::move(part_of);
  }
  return result;
}

GeneratedGraph gen_erdos_renyi(int n, double p, int num_parts,
                               RngStream& edges_rng, RngStream& parts_rng) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must be in [0, 1]");
  if (n < 0 || num_parts <= 0) throw std::invalid_argument("bad ER parameters");
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edges_rng.bernoulli(p)) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
      }
    }
  }
  GeneratedGraph g;
  g.graph = std::make_shared<DirectedGraph>(n, std::move(arcs));
  g.num_parts = num_parts;
  g.part_of.resize(n);
  for (int u = 0; u < n; ++u)
    g.part_of[u] = static_cast<int>(parts_rng.below(num_parts));
  return g;
}

GeneratedGraph gen_sbm(int num_communities, int size_min, int size_max,
                       double p_intra, RngStream& rng) {
  if (p_intra < 0 || p_intra > 1)
    throw std::invalid_argument("p_intra must be in [0, 1]");
  if (num_communities < 0 || size_min < 0 || size_max < size_min)
    throw std::invalid_argument("bad SBM parameters");
  GeneratedGraph g;
  g.num_parts = num_communities;
  std::vector<int> sizes(num_communities);
  for (int c = 0; c < num_communities; ++c) {
    sizes[c] =
        size_min + static_cast<int>(rng.below(size_max - size_min + 1));
  }
  int n = 0;
  for (int c = 0; c < num_communities; ++c) {
    for (int i = 0; i < sizes[c]; ++i) g.part_of.push_back(c);
    n += sizes[c];
  }
  std::vector<std::pair<int, int>> arcs;
  int base = 0;
  for (int c = 0; c < num_communities; ++c) {
    for (int u = base; u < base + sizes[c]; ++u) {
      for (int v = u + 1; v < base + sizes[c]; ++v) {
        if (rng.bernoulli(p_intra)) {
          arcs.emplace_back(u, v);
          arcs.emplace_back(v, u);
        }
      }
    }
    base += sizes[c];
  }
  g.graph = std::make_shared<DirectedGraph>(n, std::move(arcs));
  return g;
}

Instance build_tight(int m) {
  if (m < 1) throw std::invalid_argument("build_tight: m >= 1 required");
  TightInstanceObjective objective(m);
  Instance inst;
  inst.name = "tight";
  inst.n = objective.ground_size();
  inst.objective = objective.fn();
  inst.matroid = std::make_shared<UniformMatroid>(inst.n, 1);
  inst.monotone = true;
  inst.provenance = "tight m=" + std::to_string(m);
  return inst;
}

Instance sample_random_instance(const RandomInstanceConfig& config,
                                RngStream& rng) {
  if (config.n < 0 || config.n > 12)
    throw std::invalid_argument("sample_random_instance: 0 <= n <= 12");
  const int n = config.n;
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && rng.bernoulli(config.arc_probability)) arcs.emplace_back(u, v);
    }
  }
  auto graph = std::make_shared<DirectedGraph>(n, std::move(arcs));

  Instance inst;
  inst.n = n;
  inst.graph = graph;
  bool use_cut = config.objective == RandomObjective::kCut ||
                 (config.objective == RandomObjective::kEither &&
                  rng.bernoulli(0.5));
  if (use_cut) {
    inst.name = "random_cut";
    inst.objective = DirectedCutObjective(graph).fn();
    inst.monotone = false;
  } else {
    inst.name = "random_coverage";
    inst.objective = CoverageObjective(graph).fn();
    inst.monotone = true;
  }
  if (n > 0 && rng.bernoulli(0.5)) {
    int parts = 1 + static_cast<int>(rng.below(3));
    inst.num_parts = parts;
    inst.part_of.resize(n);
    for (int u = 0; u < n; ++u)
      inst.part_of[u] = static_cast<int>(rng.below(parts));
    std::vector<int> caps(parts);
    for (int& c : caps) c = 1 + static_cast<int>(rng.below(2));
    inst.matroid = std::make_shared<PartitionMatroid>(inst.part_of, caps);
  } else {
    int k = n == 0 ? 0 : 1 + static_cast<int>(rng.below(n));
    inst.matroid = std::make_shared<UniformMatroid>(n, k);
  }
  inst.provenance = inst.name + " n=" + std::to_string(n);
  return inst;
}

void write_snap(std::ostream& out, const DirectedGraph& graph) {
  for (auto [u, v] : graph.arcs()) out << u << ' ' << v << '\n';
}

}  // namespace submax
