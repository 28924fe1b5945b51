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

#include "pbamo/encode.hpp"

#include <array>
#include <chrono>
#include <stdexcept>

#include "pbamo/counter.hpp"
#include "pbamo/dd.hpp"
#include "pbamo/modulo.hpp"
#include "pbamo/watchdog.hpp"

namespace pbamo {

namespace {

struct Info {
  Encoding e;
  const char* name;
  bool amo_aware;
  Encoding counterpart;
  Family family;
  Strength strength;
};

constexpr std::array<Info, 16> kInfo = {{
    {Encoding::kBdd, "bdd", false, Encoding::kBdd, Family::kDecisionDiagram, Strength::kGac},
    {Encoding::kMdd, "mdd", true, Encoding::kBdd, Family::kDecisionDiagram, Strength::kGac},
    {Encoding::kSwc, "swc", false, Encoding::kSwc, Family::kCounter, Strength::kGac},
    {Encoding::kGswc, "gswc", true, Encoding::kSwc, Family::kCounter, Strength::kGac},
    {Encoding::kGt, "gt", false, Encoding::kGt, Family::kTotalizer, Strength::kGac},
    {Encoding::kGtd, "gtd", false, Encoding::kGtd, Family::kTotalizer, Strength::kGac},
    {Encoding::kGgt, "ggt", true, Encoding::kGt, Family::kTotalizer, Strength::kGac},
    {Encoding::kGgtd, "ggtd", true, Encoding::kGtd, Family::kTotalizer, Strength::kGac},
    {Encoding::kRgt, "rgt", false, Encoding::kRgt, Family::kTotalizer, Strength::kGac},
    {Encoding::kRggt, "rggt", true, Encoding::kRgt, Family::kTotalizer, Strength::kGac},
    {Encoding::kMto, "mto", false, Encoding::kMto, Family::kModulo, Strength::kNone},
    {Encoding::kGmto, "gmto", true, Encoding::kMto, Family::kModulo, Strength::kNone},
    {Encoding::kGpw, "gpw", false, Encoding::kGpw, Family::kWatchdog, Strength::kConsistencyChecking},
    {Encoding::kGgpw, "ggpw", true, Encoding::kGpw, Family::kWatchdog, Strength::kConsistencyChecking},
    {Encoding::kLpw, "lpw", false, Encoding::kLpw, Family::kWatchdog, Strength::kGac},
    {Encoding::kGlpw, "glpw", true, Encoding::kLpw, Family::kWatchdog, Strength::kGac},
}};

const Info& InfoOf(Encoding e) { return kInfo[static_cast<size_t>(e)]; }

TreeHeuristic DefaultTree(Encoding e) {
  return e == Encoding::kGtd || e == Encoding::kGgtd ? TreeHeuristic::kBalanced
                                                     : TreeHeuristic::kMinRatio;
}

}  // namespace

const char* EncodingName(Encoding e) { return InfoOf(e).name; }

std::optional<Encoding> ParseEncoding(std::string_view name) {
  for (const Info& i : kInfo) {
    if (name == i.name) return i.e;
  }
  return std::nullopt;
}

const std::vector<Encoding>& AllEncodings() {
  static const std::vector<Encoding> all = [] {
    std::vector<Encoding> v;
    for (const Info& i : kInfo) v.push_back(i.e);
    return v;
  }();
  return all;
}

bool IsAmoAware(Encoding e) { return InfoOf(e).amo_aware; }
Encoding PbCounterpart(Encoding e) { return InfoOf(e).counterpart; }
Family FamilyOf(Encoding e) { return InfoOf(e).family; }
Strength ClaimedStrength(Encoding e) { return InfoOf(e).strength; }

EncodeStats EncodeNormalized(const NormalizedPbAmo& n, Encoding e,
                             const EncodeOptions& options, VarPool& pool,
                             ClauseSink& sink) {
  EncodeStats st;
  if (n.trivial != Triviality::kNone) return st;
  const int32_t vars_before = pool.num_vars();
  const int64_t clauses_before = sink.num_clauses();
  const TreeHeuristic tree = options.tree.value_or(DefaultTree(e));
  switch (e) {
    case Encoding::kBdd:
    case Encoding::kMdd:
      EncodeMdd(n, pool, sink);
      break;
    case Encoding::kSwc:
    case Encoding::kGswc:
      EncodeGswc(n, pool, sink);
      break;
    case Encoding::kGt:
    case Encoding::kGtd:
    case Encoding::kGgt:
    case Encoding::kGgtd:
      EncodeGgt(n, tree, pool, sink, options.tree_stats);
      break;
    case Encoding::kRgt:
    case Encoding::kRggt:
      EncodeRggt(n, tree, pool, sink, options.tree_stats);
      break;
    case Encoding::kMto:
    case Encoding::kGmto:
      EncodeGmto(n, options.base ? &*options.base : nullptr, pool, sink);
      break;
    case Encoding::kGpw:
    case Encoding::kGgpw:
      EncodeGgpw(n, pool, sink);
      break;
    case Encoding::kLpw:
    case Encoding::kGlpw:
      EncodeGlpw(n, pool, sink);
      break;
  }
  st.vars = pool.num_vars() - vars_before;
  st.clauses = sink.num_clauses() - clauses_before;
  return st;
}

EncodeStats EncodeConstraint(const PbConstraint& c,
                             const AmoPartition& partition, Encoding e,
                             const EncodeOptions& options, VarPool& pool,
                             ClauseSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  const int32_t vars_before = pool.num_vars();
  const int64_t clauses_before = sink.num_clauses();
  const AmoPartition used =
      IsAmoAware(e) ? partition : SingletonPartition(c);
  for (const NormalizedPbAmo& n : Normalize(c, used, pool, sink)) {
    EncodeNormalized(n, e, options, pool, sink);
  }
  EncodeStats st;
  st.vars = pool.num_vars() - vars_before;
  st.clauses = sink.num_clauses() - clauses_before;
  st.gen_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return st;
}

EncodeStats EncodeGroups(const std::vector<AmoGroup>& groups,
                         AmoEncoding amo, VarPool& pool, ClauseSink& sink) {
  const int32_t vars_before = pool.num_vars();
  const int64_t clauses_before = sink.num_clauses();
  for (const AmoGroup& g : groups) {
    std::vector<Lit> lits;
    for (Var v : g.vars) lits.push_back(Lit::Positive(v));
    EncodeAmo(lits, amo, pool, sink);
    if (g.exactly_one) EncodeAlo(lits, sink);
  }
  EncodeStats st;
  st.vars = pool.num_vars() - vars_before;
  st.clauses = sink.num_clauses() - clauses_before;
  return st;
}

CompiledInstance CompileInstance(const Instance& instance, Encoding e,
                                 const EncodeOptions& options) {
  CompiledInstance out;
  for (const std::string& name : instance.names) out.pool.Named(name);
  const auto declared = instance.GroupVars();
  for (const PbConstraint& c : instance.constraints) {
    out.pb += EncodeConstraint(c, RestrictPartition(declared, c), e, options,
                               out.pool, out.cnf);
  }
  out.amo = EncodeGroups(instance.groups, options.amo, out.pool, out.cnf);
  return out;
}

}  // namespace pbamo
