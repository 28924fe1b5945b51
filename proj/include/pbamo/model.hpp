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

#ifndef PBAMO_MODEL_HPP_
#define PBAMO_MODEL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "pbamo/cnf.hpp"

namespace pbamo {

enum class Op { kLe, kGe, kLt, kGt, kEq };

const char* OpSymbol(Op op);

struct Term {
  int64_t coef = 0;
  Var var;
  bool operator==(const Term&) const = default;
};

// sum(coef * var) op rhs
struct PbConstraint {
  std::vector<Term> terms;
  Op op = Op::kLe;
  int64_t rhs = 0;
};

// Groups of variables known to satisfy at-most-one.
struct AmoPartition {
  std::vector<std::vector<Var>> groups;
};

// Every variable of `c` in its own group.
AmoPartition SingletonPartition(const PbConstraint& c);

// Restricts `declared` groups to the scope of `c`. Scope variables missing
// from every group become singletons. Throws if a variable is in two groups.
AmoPartition RestrictPartition(const std::vector<std::vector<Var>>& declared,
                               const PbConstraint& c);

enum class Triviality { kNone, kAlwaysTrue, kAlwaysFalse };

// sum over groups of sum(q * x) <= k, all q > 0, with the normal-form
// properties enforced unless `trivial` is set.
struct NormalizedPbAmo {
  std::vector<std::vector<Term>> groups;
  int64_t k = 0;
  Triviality trivial = Triviality::kNone;

  size_t num_groups() const { return groups.size(); }
  size_t num_terms() const;
  int64_t GroupMax(size_t i) const;
  int64_t SumOfMaxima() const;
  // Checks the normal-form properties; used by tests and debug assertions.
  bool WellFormed() const;
};

PbConstraint ToConstraint(const NormalizedPbAmo& n);
AmoPartition ToPartition(const NormalizedPbAmo& n);

// Rewrites `c` under `partition` into normalized <= constraints. Returns two
// entries for equalities. Side clauses (units, auxiliary definitions) go to
// `sink`; auxiliary variables come from `pool`.
std::vector<NormalizedPbAmo> Normalize(const PbConstraint& c,
                                       const AmoPartition& partition,
                                       VarPool& pool, ClauseSink& sink);

// A declared group; exactly_one adds the at-least-one clause.
struct AmoGroup {
  std::vector<Var> vars;
  bool exactly_one = false;
};

// A full problem: named variables 1..names.size(), groups, constraints.
struct Instance {
  std::vector<std::string> names;
  std::vector<AmoGroup> groups;
  std::vector<PbConstraint> constraints;

  int32_t num_vars() const { return static_cast<int32_t>(names.size()); }
  std::vector<std::vector<Var>> GroupVars() const;
};

// Overflow-checked arithmetic. Throws std::overflow_error.
int64_t CheckedAdd(int64_t a, int64_t b);
int64_t CheckedMul(int64_t a, int64_t b);

}  // namespace pbamo

#endif  // PBAMO_MODEL_HPP_
