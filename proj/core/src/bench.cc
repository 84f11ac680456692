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

#include "submax/bench.h"

#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace submax {

AlgoResult run_algorithm(const std::string& name, CountingOracle& oracle,
                         const Matroid& m, std::span<const int> order) {
  if (name == "quickswap") return quickswap(oracle, m, order).result;
  if (name == "quickswap_nm") return quickswap_nm(oracle, m, order).result;
  if (name == "ck") return ck(oracle, m, order);
  if (name == "lazy_greedy") return lazy_greedy(oracle, m, order);
  if (name == "threshold_greedy") return threshold_greedy(oracle, m, order);
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::vector<int> ordering_for(const Instance& instance, std::uint64_t seed,
                              int ordering_index) {
  std::vector<int> order(instance.n);
  std::iota(order.begin(), order.end(), 0);
  RngStream rng(seed, fnv1a(instance.name) ^
                          (streams::kOrderingBase + ordering_index));
  rng.shuffle(order);
  return order;
}

std::vector<BenchRecord> run_bench(const Instance& instance,
                                   const BenchConfig& config) {
  std::vector<BenchRecord> records;
  for (int cap : config.sweep.caps) {
    auto matroid = instance.matroid_with_cap(cap);
    for (const std::string& alg : config.algorithms) {
      std::vector<double> queries, objectives;
      for (int i = 0; i < config.orderings; ++i) {
        std::vector<int> order = ordering_for(instance, config.seed, i);
        CountingOracle oracle(instance.objective, instance.n);
        auto start = std::chrono::steady_clock::now();
        AlgoResult result = run_algorithm(alg, oracle, *matroid, order);
        auto elapsed = std::chrono::steady_clock::now() - start;
        BenchRecord rec;
        rec.instance = instance.name;
        rec.algorithm = alg;
        rec.rank = matroid->rank();
        rec.ordering_index = i;
        rec.seed = config.seed;
        rec.queries = static_cast<double>(result.queries);
        rec.objective = static_cast<double>(result.value);
        if (config.timing) {
          rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            elapsed)
                            .count();
        }
        queries.push_back(rec.queries);
        objectives.push_back(rec.objective);
        records.push_back(std::move(rec));
      }
      auto mean = [](const std::vector<double>& v) {
        return v.empty() ? 0.0
                         : std::accumulate(v.begin(), v.end(), 0.0) / v.size();
      };
      auto stddev = [&](const std::vector<double>& v) {
        if (v.empty()) return 0.0;
        double mu = mean(v), acc = 0;
        for (double x : v) acc += (x - mu) * (x - mu);
        return std::sqrt(acc / v.size());
      };
      BenchRecord mrec, srec;
      mrec.instance = srec.instance = instance.name;
      mrec.algorithm = alg + ":mean";
      srec.algorithm = alg + ":std";
      mrec.rank = srec.rank = matroid->rank();
      mrec.ordering_index = srec.ordering_index = -1;
      mrec.seed = srec.seed = config.seed;
      mrec.queries = mean(queries);
      srec.queries = stddev(queries);
      mrec.objective = mean(objectives);
      srec.objective = stddev(objectives);
      records.push_back(std::move(mrec));
      records.push_back(std::move(srec));
    }
  }
  return records;
}

namespace {

void write_number(std::ostream& out, double x) {
  if (x == static_cast<long long>(x)) {
    out << static_cast<long long>(x);
  } else {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    out << buf;
  }
}

}  // namespace

void write_csv(std::ostream& out, const std::string& provenance,
               const std::vector<BenchRecord>& records) {
  out << "# provenance: " << provenance << '\n';
  out << "instance,algorithm,rank,ordering_index,seed,queries,objective,wall_ms\n";
  for (const BenchRecord& r : records) {
    out << r.instance << ',' << r.algorithm << ',' << r.rank << ','
        << r.ordering_index << ',' << r.seed << ',';
    write_number(out, r.queries);
    out << ',';
    write_number(out, r.objective);
    out << ',' << r.wall_ms << '\n';
  }
}

}  // namespace submax
