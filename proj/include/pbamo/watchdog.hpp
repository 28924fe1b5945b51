// Copyright 2026 The pbamo Authors
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

#ifndef PBAMO_WATCHDOG_HPP_
#define PBAMO_WATCHDOG_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "pbamo/cnf.hpp"
#include "pbamo/model.hpp"

namespace pbamo {

using Unary = std::vector<Lit>;  // Unary[i] means "count >= i + 1"

struct WatchdogParams {
  int p = 0;        // floor(log2(max coefficient))
  int64_t t = 0;    // smallest T >= 0 with K + 1 + T divisible by 2^p
  int64_t m = 0;    // (K + 1 + T) / 2^p
};

WatchdogParams ComputeWatchdogParams(int64_t max_coef, int64_t k);

// Unary adder: outputs s_1..s_min(|a|+|b|, limit) with the upward clauses
// a_i & b_j -> s_{i+j}.
Unary UnaryAdd(const Unary& a, const Unary& b, VarPool& pool, ClauseSink& sink,
               size_t limit = SIZE_MAX);
// Balanced totalizer over `inputs`.
Unary Totalize(const std::vector<Lit>& inputs, VarPool& pool, ClauseSink& sink);
// floor((c + value(s)) / 2) for c in {0, 1}.
Unary Half(const Unary& s, int c);

// Bucket r of the generalized watchdog: one literal per group having a term
// with bit r set, plus the constant when bit r of T is set.
struct Bucket {
  std::vector<Lit> lits;
  bool constant = false;
};

std::vector<Bucket> WatchdogBuckets(const NormalizedPbAmo& n, VarPool& pool,
                                    ClauseSink& sink);

// Generalized polynomial watchdog. Singleton groups give the plain
// watchdog. `watchdog` receives the output w; unless `assert_false` is
// unset, the unit clause -w is emitted. Returns the number of aux variables.
int64_t EncodeGgpw(const NormalizedPbAmo& n, VarPool& pool, ClauseSink& sink,
                   Lit* watchdog = nullptr, bool assert_false = true);

// Totalizers keyed by leaf set. Building the tree over `leaves` without
// `excluded` reuses every subtree already seen.
class SharedTotalizers {
 public:
  SharedTotalizers(VarPool& pool, ClauseSink& sink) : pool_(pool), sink_(sink) {}

  Unary Build(const std::vector<Lit>& leaves, int excluded);

  int64_t distinct_nodes() const;
  int64_t naive_nodes() const { return naive_nodes_; }

 private:
  Unary Build(const std::vector<Lit>& leaves, size_t first, size_t count,
              int excluded);

  VarPool& pool_;
  ClauseSink& sink_;
  std::map<std::vector<int32_t>, Unary> by_leaf_set_;
  std::map<int32_t, int> leaves_seen_;
  int64_t internal_nodes_ = 0;
  int64_t naive_nodes_ = 0;
};

struct GlpwStats {
  int64_t totalizer_nodes = 0;
  int64_t naive_totalizer_nodes = 0;
};

// Generalized local polynomial watchdog with shared implicants, totalizers
// and merges. Returns the number of aux variables.
int64_t EncodeGlpw(const NormalizedPbAmo& n, VarPool& pool, ClauseSink& sink,
                   GlpwStats* stats = nullptr);

}  // namespace pbamo

#endif  // PBAMO_WATCHDOG_HPP_
