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

#include "pbamo/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pbamo {

bool Compare(int64_t lhs, Op op, int64_t rhs) {
  switch (op) {
    case Op::kLe: return lhs <= rhs;
    case Op::kGe: return lhs >= rhs;
    case Op::kLt: return lhs < rhs;
    case Op::kGt: return lhs > rhs;
    case Op::kEq: return lhs == rhs;
  }
  return false;
}

SemanticsOracle::SemanticsOracle(PbConstraint c, AmoPartition partition)
    : c_(std::move(c)), partition_(std::move(partition)) {
  std::map<int32_t, int64_t> coef;
  for (const Term& t : c_.terms) coef[t.var.index] += t.coef;
  for (const auto& g : partition_.groups) {
    std::vector<int64_t> qs;
    for (Var v : g) {
      auto it = coef.find(v.index);
      qs.push_back(it == coef.end() ? 0 : it->second);
      scope_.push_back(v);
    }
    coef_.push_back(std::move(qs));
  }
  for (const Term& t : c_.terms) {
    bool found = false;
    for (Var v : scope_) found = found || v == t.var;
    if (!found) throw std::invalid_argument("partition misses a variable");
  }
}

bool SemanticsOracle::Extendible(const Assignment& a) const {
  auto val = [&](Var v) {
    return static_cast<size_t>(v.index) < a.size() ? a[v.index]
                                                   : Value::kUnassigned;
  };
  std::vector<int64_t> sums{0};
  for (size_t g = 0; g < partition_.groups.size(); ++g) {
    const auto& vars = partition_.groups[g];
    int trues = 0;
    int64_t forced = 0;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (val(vars[i]) == Value::kTrue) {
        ++trues;
        forced = coef_[g][i];
      }
    }
    if (trues > 1) return false;
    std::vector<int64_t> options;
    if (trues == 1) {
      options.push_back(forced);
    } else {
      options.push_back(0);
      for (size_t i = 0; i < vars.size(); ++i) {
        if (val(vars[i]) == Value::kUnassigned) options.push_back(coef_[g][i]);
      }
      std::sort(options.begin(), options.end());
      options.erase(std::unique(options.begin(), options.end()), options.end());
    }
    std::vector<int64_t> next;
    next.reserve(sums.size() * options.size());
    for (int64_t s : sums) {
      for (int64_t o : options) next.push_back(CheckedAdd(s, o));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  for (int64_t s : sums) {
    if (Compare(s, c_.op, c_.rhs)) return true;
  }
  return false;
}

Value SemanticsOracle::Forced(const Assignment& partial, Var v) const {
  Assignment a = partial;
  if (a.size() <= static_cast<size_t>(v.index)) {
    a.resize(static_cast<size_t>(v.index) + 1, Value::kUnassigned);
  }
  a[v.index] = Value::kTrue;
  const bool can_true = Extendible(a);
  a[v.index] = Value::kFalse;
  const bool can_false = Extendible(a);
  if (can_true && !can_false) return Value::kTrue;
  if (can_false && !can_true) return Value::kFalse;
  return Value::kUnassigned;
}

bool SatisfiesInstance(const Instance& instance, const Assignment& a) {
  auto is_true = [&](Var v) {
    return static_cast<size_t>(v.index) < a.size() &&
           a[v.index] == Value::kTrue;
  };
  for (const AmoGroup& g : instance.groups) {
    int count = 0;
    for (Var v : g.vars) count += is_true(v);
    if (count > 1 || (g.exactly_one && count == 0)) return false;
  }
  for (const PbConstraint& c : instance.constraints) {
    int64_t sum = 0;
    for (const Term& t : c.terms) {
      if (is_true(t.var)) sum = CheckedAdd(sum, t.coef);
    }
    if (!Compare(sum, c.op, c.rhs)) return false;
  }
  return true;
}

std::optional<Assignment> SolveBruteForce(const Instance& instance) {
  const size_t n = static_cast<size_t>(instance.num_vars());
  std::vector<char> grouped(n + 1, 0);
  std::vector<std::vector<Var>> choices;  // per unit: its vars
  std::vector<bool> must_pick;
  for (const AmoGroup& g : instance.groups) {
    if (g.exactly_one && g.vars.empty()) return std::nullopt;
    choices.push_back(g.vars);
    must_pick.push_back(g.exactly_one);
    for (Var v : g.vars) grouped[v.index] = 1;
  }
  for (size_t v = 1; v <= n; ++v) {
    if (!grouped[v]) {
      choices.push_back({Var{static_cast<int32_t>(v)}});
      must_pick.push_back(false);
    }
  }
  Assignment a(n + 1, Value::kFalse);
  std::vector<size_t> pick(choices.size(), 0);  // 0 = none, i = member i-1
  for (size_t u = 0; u < choices.size(); ++u) pick[u] = must_pick[u] ? 1 : 0;
  while (true) {
    std::fill(a.begin(), a.end(), Value::kFalse);
    for (size_t u = 0; u < choices.size(); ++u) {
      if (pick[u] > 0) a[choices[u][pick[u] - 1].index] = Value::kTrue;
    }
    if (SatisfiesInstance(instance, a)) return a;
    size_t u = 0;
    for (; u < choices.size(); ++u) {
      if (pick[u] < choices[u].size()) {
        ++pick[u];
        break;
      }
      pick[u] = must_pick[u] ? 1 : 0;
    }
    if (u == choices.size()) return std::nullopt;
  }
}

}  // namespace pbamo
