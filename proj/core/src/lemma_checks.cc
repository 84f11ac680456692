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

#include "submax/lemma_checks.h"

#include <algorithm>

namespace submax {

MsmLemmaReport check_lemmas_msm(const CountingOracle::Fn& f, const Matroid& m,
                                const QuickSwapRun& run, const ElementSet& opt,
                                Value beta) {
  MsmLemmaReport report;
  const SwapState& st = run.state;
  report.feasibility_ok =
      m.is_independent(st.solution) && st.solution.subset_of(st.grown);
  report.telescoping_ok = f(st.grown) == st.grown_value;
  report.deltas_nonneg_ok = true;
  for (int e : st.grown.elements()) {
    if (st.delta[e] < 0) report.deltas_nonneg_ok = false;
  }
  Value f_a = f(st.grown);
  Value f_ap = f(st.solution);
  Value f_oa = f(opt.unite(st.grown));
  report.primehalf_slack = f_ap - beta * f_a / (1 + beta);
  report.primehalf_ok = report.primehalf_slack >= 0;
  report.primeopt_slack = f_a + (1 + beta) * f_ap - f_oa;
  report.primeopt_ok = report.primeopt_slack >= 0;
  return report;
}

NmLemmaReport check_lemma_nm(const CountingOracle::Fn& f, const Matroid& m,
                             const QuickSwapNmRun& run, const ElementSet& opt,
                             Value beta) {
  NmLemmaReport report;
  report.disjoint_ok =
      run.disjoint_throughout && run.a.grown.intersect(run.b.grown).empty() &&
      m.is_independent(run.a.solution) && m.is_independent(run.b.solution);
  Value f_a = f(run.a.grown);
  Value f_b = f(run.b.grown);
  Value f_ap = f(run.a.solution);
  Value f_bp = f(run.b.solution);
  Value lhs = std::max(f(opt.unite(run.b.grown)) - f_b,
                       f(opt.unite(run.a.grown)) - f_a);
  Value rhs = (1 + beta) * (f_ap + f_bp);
  report.nmmain_slack = rhs - lhs;
  report.nmmain_ok = report.nmmain_slack >= 0;
  report.ratio_bound = 2 * (2 * (1 + beta) + (1 + beta) / beta);
  report.ratio_ok = std::max(f_ap, f_bp) >= f(opt) / report.ratio_bound;
  return report;
}

}  // namespace submax
