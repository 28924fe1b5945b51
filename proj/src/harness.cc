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

#include "pbamo/harness.hpp"

#include <algorithm>
#include <sstream>

namespace pbamo {

int64_t UniformInt(Rng& rng, int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(rng());
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<int64_t>(r % span);
}

CheckFormula BuildCheckFormula(const PbConstraint& c,
                               const AmoPartition& partition, Encoding e,
                               const EncodeOptions& options) {
  CheckFormula f;
  int32_t max_var = 0;
  for (const Term& t : c.terms) max_var = std::max(max_var, t.var.index);
  for (const auto& g : partition.groups) {
    for (Var v : g) max_var = std::max(max_var, v.index);
  }
  f.pool.ReserveBlock(max_var);
  EncodeConstraint(c, partition, e, options, f.pool, f.cnf);
  f.pb_clauses = f.cnf.clauses().size();
  std::vector<AmoGroup> groups;
  for (const auto& g : partition.groups) groups.push_back(AmoGroup{g, false});
  EncodeGroups(groups, options.amo, f.pool, f.cnf);
  return f;
}

namespace {

std::string Describe(const Assignment& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (size_t v = 1; v < a.size(); ++v) {
    if (a[v] == Value::kUnassigned) continue;
    if (!first) os << ' ';
    first = false;
    os << (a[v] == Value::kTrue ? "" : "-") << v;
  }
  os << '}';
  return os.str();
}

class ModelWalker {
 public:
  ModelWalker(const ClauseSink& cnf, int32_t num_vars,
              const SemanticsOracle& oracle)
      : prop_(cnf, num_vars),
        solver_(cnf, num_vars),
        oracle_(oracle),
        partial_(static_cast<size_t>(prop_.num_vars()) + 1,
                 Value::kUnassigned) {}

  CheckReport Run() {
    if (prop_.conflict()) {
      Cut();
      return report_;
    }
    Walk(0);
    return report_;
  }

 private:
  void Cut() {
    ++report_.checked;
    if (oracle_.Extendible(partial_)) Fail("UP conflict on an extendible");
  }

  void Fail(const char* what) {
    if (!report_.ok) return;
    report_.ok = false;
    report_.failure = std::string(what) + " assignment " + Describe(partial_);
  }

  void Walk(size_t i) {
    if (!report_.ok) return;
    const auto& scope = oracle_.scope();
    if (i == scope.size()) {
      Leaf();
      return;
    }
    const Var x = scope[i];
    for (bool value : {false, true}) {
      partial_[x.index] = value ? Value::kTrue : Value::kFalse;
      prop_.NewLevel();
      if (prop_.Assign(value ? Lit::Positive(x) : Lit::Negative(x))) {
        Walk(i + 1);
      } else {
        Cut();
      }
      prop_.Backtrack(prop_.level() - 1);
    }
    partial_[x.index] = Value::kUnassigned;
  }

  void Leaf() {
    ++report_.checked;
    const bool truth = oracle_.Extendible(partial_);
    bool extendible = prop_.trail().size() == static_cast<size_t>(prop_.num_vars());
    if (!extendible) {
      std::vector<Lit> assumptions;
      for (Var x : oracle_.scope()) {
        assumptions.push_back(partial_[x.index] == Value::kTrue
                                  ? Lit::Positive(x)
                                  : Lit::Negative(x));
      }
      extendible = solver_.Solve(assumptions) == Solver::Result::kSat;
    }
    if (truth && !extendible) Fail("model not extendible:");
    if (!truth && extendible) Fail("non-model extendible:");
  }

  Propagator prop_;
  Solver solver_;
  const SemanticsOracle& oracle_;
  Assignment partial_;
  CheckReport report_;
};

bool AssignAll(Propagator& prop, const Assignment& a) {
  for (size_t v = 1; v < a.size(); ++v) {
    if (a[v] == Value::kUnassigned) continue;
    const Var x{static_cast<int32_t>(v)};
    if (!prop.Assign(a[v] == Value::kTrue ? Lit::Positive(x)
                                          : Lit::Negative(x))) {
      return false;
    }
  }
  return true;
}

}  // namespace

CheckReport CheckModels(const ClauseSink& cnf, int32_t num_vars,
                        const SemanticsOracle& oracle) {
  return ModelWalker(cnf, num_vars, oracle).Run();
}

Assignment SampleGroupAssignment(const AmoPartition& partition,
                                 int32_t num_vars, Rng& rng) {
  Assignment a(static_cast<size_t>(num_vars) + 1, Value::kUnassigned);
  for (const auto& g : partition.groups) {
    if (UniformInt(rng, 0, 1) == 0) continue;
    const int64_t pick = UniformInt(rng, 0, static_cast<int64_t>(g.size()));
    for (size_t i = 0; i < g.size(); ++i) {
      a[g[i].index] = static_cast<int64_t>(i) + 1 == pick ? Value::kTrue
                                                          : Value::kFalse;
    }
  }
  return a;
}

CheckReport CheckGacOn(const ClauseSink& cnf, int32_t num_vars,
                       const SemanticsOracle& oracle,
                       const std::vector<Assignment>& partials) {
  CheckReport report;
  Propagator prop(cnf, num_vars);
  for (const Assignment& a : partials) {
    ++report.checked;
    prop.NewLevel();
    const bool ok = AssignAll(prop, a);
    if (!ok) {
      report.ok = false;
      report.failure = "UP conflict on extendible " + Describe(a);
      return report;
    }
    for (Var x : oracle.scope()) {
      if (a[x.index] != Value::kUnassigned) continue;
      const Value forced = oracle.Forced(a, x);
      if (forced != Value::kUnassigned && prop.value(x) != forced) {
        report.ok = false;
        report.failure = "UP misses forced literal " +
                         std::string(forced == Value::kTrue ? "" : "-") +
                         std::to_string(x.index) + " under " + Describe(a);
        return report;
      }
    }
    prop.Backtrack(0);
  }
  return report;
}

CheckReport CheckCcOn(const ClauseSink& cnf, int32_t num_vars,
                      const SemanticsOracle& oracle,
                      const std::vector<Assignment>& partials) {
  (void)oracle;
  CheckReport report;
  Propagator prop(cnf, num_vars);
  for (const Assignment& a : partials) {
    ++report.checked;
    prop.NewLevel();
    const bool ok = AssignAll(prop, a);
    prop.Backtrack(0);
    if (ok) {
      report.ok = false;
      report.failure = "no UP conflict on non-extendible " + Describe(a);
      return report;
    }
  }
  return report;
}

namespace {

std::vector<Assignment> Sample(const SemanticsOracle& oracle, int32_t num_vars,
                               int samples, bool want_extendible, Rng& rng) {
  std::vector<Assignment> out;
  const int64_t tries = static_cast<int64_t>(samples) * 50;
  for (int64_t i = 0; i < tries && static_cast<int>(out.size()) < samples;
       ++i) {
    Assignment a = SampleGroupAssignment(oracle.partition(), num_vars, rng);
    if (oracle.Extendible(a) == want_extendible) out.push_back(std::move(a));
  }
  return out;
}

int32_t ScopeMax(const SemanticsOracle& oracle) {
  int32_t m = 0;
  for (Var v : oracle.scope()) m = std::max(m, v.index);
  return m;
}

}  // namespace

CheckReport CheckGac(const ClauseSink& cnf, int32_t num_vars,
                     const SemanticsOracle& oracle, int samples, Rng& rng) {
  return CheckGacOn(cnf, num_vars, oracle,
                    Sample(oracle, ScopeMax(oracle), samples, true, rng));
}

CheckReport CheckCc(const ClauseSink& cnf, int32_t num_vars,
                    const SemanticsOracle& oracle, int samples, Rng& rng) {
  return CheckCcOn(cnf, num_vars, oracle,
                   Sample(oracle, ScopeMax(oracle), samples, false, rng));
}

std::pair<PbConstraint, AmoPartition> RandomCheckInstance(
    Rng& rng, const RandomInstanceSpec& spec) {
  const int n = static_cast<int>(UniformInt(rng, spec.min_vars, spec.max_vars));
  AmoPartition partition;
  int next = 1;
  while (next <= n) {
    const int size = static_cast<int>(
        std::min<int64_t>(UniformInt(rng, 1, spec.max_group), n - next + 1));
    std::vector<Var> g;
    for (int i = 0; i < size; ++i) g.push_back(Var{next++});
    partition.groups.push_back(std::move(g));
  }
  PbConstraint c;
  int64_t max_sum = 0;
  for (const auto& g : partition.groups) {
    int64_t gmax = 0;
    for (Var v : g) {
      int64_t q = UniformInt(rng, 1, spec.max_coef);
      if (spec.mixed && UniformInt(rng, 0, 3) == 0) q = -q;
      c.terms.push_back(Term{q, v});
      gmax = std::max(gmax, q);
    }
    max_sum += gmax;
  }
  c.op = Op::kLe;
  c.rhs = UniformInt(rng, 1, std::max<int64_t>(1, max_sum));
  if (spec.mixed) {
    static constexpr Op kOps[] = {Op::kLe, Op::kGe, Op::kLt, Op::kGt, Op::kEq};
    c.op = kOps[UniformInt(rng, 0, 4)];
    c.rhs = UniformInt(rng, -spec.max_coef, max_sum);
  }
  return {std::move(c), std::move(partition)};
}

}  // namespace pbamo
