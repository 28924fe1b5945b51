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

#ifndef PBAMO_ORACLE_HPP_
#define PBAMO_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "pbamo/model.hpp"
#include "pbamo/propagator.hpp"

namespace pbamo {

// Assignment indexed by variable index; index 0 unused.
using Assignment = std::vector<Value>;

// Ground truth for one constraint under at-most-one groups, by dynamic
// programming over reachable sums.
class SemanticsOracle {
 public:
  SemanticsOracle(PbConstraint c, AmoPartition partition);

  // True if some total extension of `partial` satisfies the constraint and
  // every group.
  bool Extendible(const Assignment& partial) const;
  // Value `v` takes in every extension of an extendible `partial`, or
  // kUnassigned when both values remain possible.
  Value Forced(const Assignment& partial, Var v) const;

  const std::vector<Var>& scope() const { return scope_; }
  const PbConstraint& constraint() const { return c_; }
  const AmoPartition& partition() const { return partition_; }

 private:
  PbConstraint c_;
  AmoPartition partition_;
  std::vector<Var> scope_;
  std::vector<std::vector<int64_t>> coef_;  // per group, per member
};

bool Compare(int64_t lhs, Op op, int64_t rhs);

// Brute force over group choices. Returns a satisfying assignment or
// nullopt. Intended for small instances.
std::optional<Assignment> SolveBruteForce(const Instance& instance);
bool SatisfiesInstance(const Instance& instance, const Assignment& a);

}  // namespace pbamo

#endif  // PBAMO_ORACLE_HPP_
