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

#ifndef PBAMO_ENCODE_HPP_
#define PBAMO_ENCODE_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pbamo/amo.hpp"
#include "pbamo/cnf.hpp"
#include "pbamo/model.hpp"
#include "pbamo/totalizer.hpp"

namespace pbamo {

enum class Encoding {
  kBdd, kMdd, kSwc, kGswc, kGt, kGtd, kGgt, kGgtd,
  kRgt, kRggt, kMto, kGmto, kGpw, kGgpw, kLpw, kGlpw,
};

enum class Family { kDecisionDiagram, kCounter, kTotalizer, kModulo, kWatchdog };

// Propagation strength claimed for the encoding together with a GAC
// at-most-one encoding.
enum class Strength { kGac, kConsistencyChecking, kNone };

const char* EncodingName(Encoding e);
std::optional<Encoding> ParseEncoding(std::string_view name);
const std::vector<Encoding>& AllEncodings();
bool IsAmoAware(Encoding e);
// The plain PB encoding an AMO-aware encoding generalizes; identity otherwise.
Encoding PbCounterpart(Encoding e);
Family FamilyOf(Encoding e);
Strength ClaimedStrength(Encoding e);

struct EncodeOptions {
  AmoEncoding amo = AmoEncoding::kAuto;
  std::optional<TreeHeuristic> tree;         // totalizer family override
  std::optional<std::vector<int64_t>> base;  // modulo family override
  std::vector<TreeNodeStats>* tree_stats = nullptr;
};

struct EncodeStats {
  int64_t vars = 0;
  int64_t clauses = 0;
  double gen_ms = 0.0;

  EncodeStats& operator+=(const EncodeStats& o) {
    vars += o.vars;
    clauses += o.clauses;
    gen_ms += o.gen_ms;
    return *this;
  }
};

// Encodes one normalized constraint.
EncodeStats EncodeNormalized(const NormalizedPbAmo& n, Encoding e,
                             const EncodeOptions& options, VarPool& pool,
                             ClauseSink& sink);

// Normalizes and encodes one constraint. Plain PB encodings ignore the
// partition and normalize with singleton groups. Side clauses count toward
// the returned stats.
EncodeStats EncodeConstraint(const PbConstraint& c,
                             const AmoPartition& partition, Encoding e,
                             const EncodeOptions& options, VarPool& pool,
                             ClauseSink& sink);

// Emits the at-most-one (and at-least-one) clauses of every declared group.
EncodeStats EncodeGroups(const std::vector<AmoGroup>& groups,
                         AmoEncoding amo, VarPool& pool, ClauseSink& sink);

struct CompiledInstance {
  VarPool pool;
  ClauseSink cnf;
  EncodeStats pb;   // PB part only
  EncodeStats amo;  // group clauses
};

// Variables 1..instance.num_vars() keep their numbering; aux follow.
CompiledInstance CompileInstance(const Instance& instance, Encoding e,
                                 const EncodeOptions& options);

}  // namespace pbamo

#endif  // PBAMO_ENCODE_HPP_
