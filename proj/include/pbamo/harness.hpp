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

#ifndef PBAMO_HARNESS_HPP_
#define PBAMO_HARNESS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "pbamo/encode.hpp"
#include "pbamo/oracle.hpp"

namespace pbamo {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi] independent of the standard library's
// distribution implementation.
int64_t UniformInt(Rng& rng, int64_t lo, int64_t hi);

struct CheckReport {
  bool ok = true;
  int64_t checked = 0;
  std::string failure;
};

// Encoding plus the at-most-one clauses of the partition.
struct CheckFormula {
  VarPool pool;
  ClauseSink cnf;
  size_t pb_clauses = 0;  // clauses [0, pb_clauses) belong to the PB part
};

CheckFormula BuildCheckFormula(const PbConstraint& c,
                               const AmoPartition& partition, Encoding e,
                               const EncodeOptions& options = {});

// Every total assignment of the scope: it satisfies the constraint and the
// groups iff it extends to a model of `cnf`. Subtrees cut by a UP conflict
// are checked against the oracle in one step.
CheckReport CheckModels(const ClauseSink& cnf, int32_t num_vars,
                        const SemanticsOracle& oracle);

// Partial assignments with each sampled group either all false or one
// true. GAC: on extendible samples UP reaches no conflict and fixes every
// forced scope literal. CC: on non-extendible samples UP conflicts.
CheckReport CheckGac(const ClauseSink& cnf, int32_t num_vars,
                     const SemanticsOracle& oracle, int samples, Rng& rng);
CheckReport CheckCc(const ClauseSink& cnf, int32_t num_vars,
                    const SemanticsOracle& oracle, int samples, Rng& rng);

// Same checks over a given list of partial assignments.
CheckReport CheckGacOn(const ClauseSink& cnf, int32_t num_vars,
                       const SemanticsOracle& oracle,
                       const std::vector<Assignment>& partials);
CheckReport CheckCcOn(const ClauseSink& cnf, int32_t num_vars,
                      const SemanticsOracle& oracle,
                      const std::vector<Assignment>& partials);

Assignment SampleGroupAssignment(const AmoPartition& partition,
                                 int32_t num_vars, Rng& rng);

struct RandomInstanceSpec {
  int min_vars = 2;
  int max_vars = 12;
  int max_group = 4;
  int64_t max_coef = 20;
  bool mixed = false;  // negative coefficients and all operators
};

// Variables are numbered 1..n.
std::pair<PbConstraint, AmoPartition> RandomCheckInstance(
    Rng& rng, const RandomInstanceSpec& spec);

}  // namespace pbamo

#endif  // PBAMO_HARNESS_HPP_
