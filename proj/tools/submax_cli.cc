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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submax/algorithms.h"
#include "submax/bench.h"
#include "submax/instances.h"
#include "submax/lemma_checks.h"
#include "submax/objectives.h"

namespace {

using submax::Value;

int cmd_bench(const submax::InstanceSpec& spec, submax::BenchConfig config,
              const std::string& out_path) {
  submax::Instance instance = spec.build();
  if (config.sweep.caps.empty()) config.sweep.caps = {1};
  auto records = submax::run_bench(instance, config);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return 1;
  }
  submax::write_csv(out, instance.provenance, records);
  std::cout << "wrote " << records.size() << " rows to " << out_path << '\n';
  return 0;
}

int cmd_tight(int m) {
  submax::Instance instance = submax::build_tight(m);
  std::vector<int> order(instance.n);
  std::iota(order.begin(), order.end(), 0);
  submax::CountingOracle oracle(instance.objective, instance.n);
  auto run = submax::quickswap(oracle, *instance.matroid, order,
                               submax::BetaParam::msm(), true);

  submax::TightInstanceObjective objective(m);
  const std::int64_t expected_val = std::int64_t{1} << m;
  const std::int64_t expected_opt = (std::int64_t{1} << (m + 2)) - 2;
  std::int64_t val = static_cast<std::int64_t>(run.result.value);
  // k = 1: the optimum is the best singleton, which is o by construction.
  std::int64_t opt = objective.cap();

  std::cout << "m = " << m << '\n'
            << "f(A') = " << val << '\n'
            << "OPT   = " << opt << '\n'
            << "ratio OPT/f(A') = " << opt << "/" << val << " = 4 - 2^(1-" << m
            << ")" << '\n'
            << "queries = " << run.result.queries << " (n = " << instance.n
            << ")" << '\n';
  bool exact = val == expected_val && opt == expected_opt &&
               run.result.solution.contains(m) &&
               run.result.solution.size() == 1;
  // Exact rational identity: (2^(m+2) - 2) / 2^m == 4 - 2^(1-m).
  exact = exact && (opt == 4 * val - 2);
  if (!exact) {
    std::cerr << "tight-instance check FAILED\n";
    return 1;
  }
  std::cout << "tight-instance check passed\n";
  return 0;
}

int cmd_verify(int trials, std::uint64_t seed) {
  int violations = 0;
  for (int t = 0; t < trials; ++t) {
    // Monotone coverage instance for the single-pass lemmas and ratio.
    {
      submax::RngStream rng(seed, submax::streams::kSampler + 2 * t);
      submax::RandomInstanceConfig config;
      config.n = 4 + static_cast<int>(rng.below(5));
      config.objective = submax::RandomObjective::kCoverage;
      submax::Instance inst = submax::sample_random_instance(config, rng);
      std::vector<int> order(inst.n);
      std::iota(order.begin(), order.end(), 0);
      submax::CountingOracle oracle(inst.objective, inst.n);
      auto run = submax::quickswap(oracle, *inst.matroid, order);
      auto [opt, opt_value] =
          submax::brute_force_opt(inst.objective, *inst.matroid, inst.n);
      auto report = submax::check_lemmas_msm(inst.objective, *inst.matroid,
                                             run, opt, 1.0L);
      bool ratio_ok = run.result.value >= opt_value / 4;
      if (!report.all_ok() || !ratio_ok ||
          run.result.queries != inst.n) {
        std::cerr << "MSM violation at trial " << t << " (seed " << seed
                  << "): primehalf slack "
                  << static_cast<double>(report.primehalf_slack)
                  << ", primeopt slack "
                  << static_cast<double>(report.primeopt_slack) << '\n';
        ++violations;
      } else if (trials == 1) {
        std::cout << "primehalf slack = "
                  << static_cast<double>(report.primehalf_slack)
                  << ", primeopt slack = "
                  << static_cast<double>(report.primeopt_slack) << '\n';
      }
    }
    // Non-monotone cut instance for the two-copy algorithm.
    {
      submax::RngStream rng(seed, submax::streams::kSampler + 2 * t + 1);
      submax::RandomInstanceConfig config;
      config.n = 4 + static_cast<int>(rng.below(5));
      config.objective = submax::RandomObjective::kCut;
      submax::Instance inst = submax::sample_random_instance(config, rng);
      std::vector<int> order(inst.n);
      std::iota(order.begin(), order.end(), 0);
      submax::CountingOracle oracle(inst.objective, inst.n);
      auto run = submax::quickswap_nm(oracle, *inst.matroid, order);
      auto [opt, opt_value] =
          submax::brute_force_opt(inst.objective, *inst.matroid, inst.n);
      auto report = submax::check_lemma_nm(inst.objective, *inst.matroid, run,
                                           opt, submax::BetaParam::gsm().beta);
      if (!report.all_ok() || run.result.queries != 2 * inst.n) {
        std::cerr << "GSM violation at trial " << t << " (seed " << seed
                  << ")\n";
        ++violations;
      }
    }
  }
  std::cout << trials << " trials, " << violations << " violations\n";
  return violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-parsimonious submodular maximization benchmarks"};
  app.require_subcommand(1);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a rank sweep and emit CSV");
  std::string instance_kind = "tight";
  std::string edges_path, labels_path;
  std::vector<std::string> algorithms = {"quickswap", "quickswap_nm", "ck",
                                         "lazy_greedy", "threshold_greedy"};
  std::vector<int> caps;
  int orderings = 5;
  std::uint64_t seed = 42;
  std::string out_path = "bench.csv";
  int tight_m = 10;
  int trials = 200;
  bool timing = false;
  bench->add_option("--instance", instance_kind,
                    "Instance kind: tight, er, sbm, snap")
      ->check(CLI::IsMember({"tight", "er", "sbm", "snap"}));
  bench->add_option("--edges", edges_path, "SNAP edge list path");
  bench->add_option("--labels", labels_path, "SNAP label file path");
  bench->add_option("--algs", algorithms, "Algorithms to run")->delimiter(',');
  bench->add_option("--caps", caps, "Per-part caps to sweep")->delimiter(',');
  bench->add_option("--orderings", orderings, "Random orderings per cell");
  bench->add_option("--seed", seed, "Base seed");
  bench->add_option("--out", out_path, "Output CSV path");
  bench->add_option("--m", tight_m, "Tight-instance parameter m");
  bench->add_flag("--timing", timing, "Record wall-clock times");

  // tight
  auto* tight = app.add_subcommand("tight", "Tight-instance exactness report");
  tight->add_option("--m", tight_m, "Instance parameter m")
      ->check(CLI::Range(1, 60));

  // verify
  auto* verify =
      app.add_subcommand("verify", "Randomized lemma and ratio checks");
  verify->add_option("--trials", trials, "Number of sampled instances")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Replay seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench->parsed()) {
      submax::InstanceSpec spec;
      spec.seed = seed;
      if (instance_kind == "tight") {
        spec.kind = submax::InstanceKind::kTight;
        spec.m = tight_m;
      } else if (instance_kind == "er") {
        spec.kind = submax::InstanceKind::kErdosRenyi;
      } else if (instance_kind == "sbm") {
        spec.kind = submax::InstanceKind::kSbm;
      } else {
        spec.kind = submax::InstanceKind::kSnap;
        spec.edges_path = edges_path;
        spec.labels_path = labels_path;
      }
      submax::BenchConfig config;
      config.algorithms = algorithms;
      config.sweep.caps = caps;
      config.orderings = orderings;
      config.seed = seed;
      config.timing = timing;
      return cmd_bench(spec, config, out_path);
    }
    if (tight->parsed()) return cmd_tight(tight_m);
    if (verify->parsed()) return cmd_verify(trials, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
