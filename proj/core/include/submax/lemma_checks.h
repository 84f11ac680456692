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

#ifndef SUBMAX_LEMMA_CHECKS_H_
#define SUBMAX_LEMMA_CHECKS_H_

#include "submax/algorithms.h"
#include "submax/counting_oracle.h"
#include "submax/element_set.h"

namespace submax {

// Runtime checks of the guarantees a single-pass swap run must satisfy.
// All evaluations use the raw function, outside any query accounting.
struct MsmLemmaReport {
  bool feasibility_ok = false;       // f(A') relationship: A' independent
  bool telescoping_ok = false;       // maintained f(A) equals a fresh f(A)
  bool deltas_nonneg_ok = false;     // delta_e >= 0 for all e in A
  bool primehalf_ok = false;         // f(A') >= beta f(A) / (1 + beta)
  bool primeopt_ok = false;          // f(O ∪ A) <= f(A) + (1 + beta) f(A')
  Value primehalf_slack = 0;         // f(A') - beta f(A) / (1 + beta)
  Value primeopt_slack = 0;          // f(A) + (1 + beta) f(A') - f(O ∪ A)
  bool all_ok() const {
    return feasibility_ok && telescoping_ok && deltas_nonneg_ok &&
           primehalf_ok && primeopt_ok;
  }
};

MsmLemmaReport check_lemmas_msm(const CountingOracle::Fn& f, const Matroid& m,
                                const QuickSwapRun& run, const ElementSet& opt,
                                Value beta);

struct NmLemmaReport {
  bool disjoint_ok = false;  // A ∩ B = ∅ throughout the run
  bool nmmain_ok = false;    // max{f(O∪B)-f(B), f(O∪A)-f(A)} <= (1+beta)(f(A')+f(B'))
  bool ratio_ok = false;     // max{f(A'), f(B')} >= f(O) / bound(beta)
  Value nmmain_slack = 0;
  Value ratio_bound = 0;     // 2(2(1+beta) + (1+beta)/beta); 6+4sqrt(2) at 1/sqrt(2)
  bool all_ok() const { return disjoint_ok && nmmain_ok && ratio_ok; }
};

NmLemmaReport check_lemma_nm(const CountingOracle::Fn& f, const Matroid& m,
                             const QuickSwapNmRun& run, const ElementSet& opt,
                             Value beta);

}  // namespace submax

#endif  // SUBMAX_LEMMA_CHECKS_H_
