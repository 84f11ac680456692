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

#ifndef SUBMAX_COUNTING_ORACLE_H_
#define SUBMAX_COUNTING_ORACLE_H_

#include <functional>
#include <unordered_map>

#include "submax/element_set.h"

namespace submax {

// Value oracle wrapper that memoizes evaluated sets and counts distinct
// evaluations. Once a set has been evaluated and charged, repeated
// evaluations return the memoized value and never increase the count.
class CountingOracle {
 public:
  using Fn = std::function<Value(const ElementSet&)>;

  CountingOracle(Fn inner, int universe)
      : inner_(std::move(inner)), universe_(universe) {}

  int universe_size() const { return universe_; }

  // Counted evaluation. One distinct set, one query.
  Value value(const ElementSet& s) {
    check(s);
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    Value v = inner_(s);
    memo_.emplace(s, v);
    ++query_count_;
    return v;
  }

  // f(s + e) - cached_fs, charging exactly one query for f(s + e).
  // The caller must already hold f(s) = cached_fs.
  Value marginal(int e, const ElementSet& s, Value cached_fs) {
    if (s.contains(e)) throw std::invalid_argument("marginal: element already in set");
    return value(s.with(e)) - cached_fs;
  }

  // Evaluates f(empty). Free for normalized objectives; a nonzero value
  // costs one bootstrap query, reported separately from query_count.
  Value bootstrap() {
    ElementSet empty(universe_);
    auto it = memo_.find(empty);
    if (it != memo_.end()) return it->second;
    Value v = inner_(empty);
    memo_.emplace(empty, v);
    ++seeded_;
    if (v != 0) ++bootstrap_queries_;
    return v;
  }

  // Reporting path: never charges query_count, never extends the memo.
  Value value_uncounted(const ElementSet& s) {
    check(s);
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    ++reporting_queries_;
    return inner_(s);
  }

  long query_count() const { return query_count_; }
  long bootstrap_queries() const { return bootstrap_queries_; }
  long reporting_queries() const { return reporting_queries_; }

  // query_count must equal the number of distinct sets charged; the memo
  // is the shadow log (bootstrap seeds are tracked apart).
  bool count_consistent() const {
    return query_count_ + seeded_ == static_cast<long>(memo_.size());
  }

 private:
  void check(const ElementSet& s) const {
    if (s.universe_size() != universe_)
      throw std::invalid_argument("set universe does not match oracle");
  }

  Fn inner_;
  int universe_;
  std::unordered_map<ElementSet, Value, ElementSetHash> memo_;
  long query_count_ = 0;
  long seeded_ = 0;
  long bootstrap_queries_ = 0;
  long reporting_queries_ = 0;
};

}  // namespace submax

#endif  // SUBMAX_COUNTING_ORACLE_H_
