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

#include "pbamo/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pbamo {

const char* OpSymbol(Op op) {
  switch (op) {
    case Op::kLe: return "<=";
    case Op::kGe: return ">=";
    case Op::kLt: return "<";
    case Op::kGt: return ">";
    case Op::kEq: return "=";
  }
  return "?";
}

int64_t CheckedAdd(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient arithmetic overflow");
  }
  return r;
}

int64_t CheckedMul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient arithmetic overflow");
  }
  return r;
}

AmoPartition SingletonPartition(const PbConstraint& c) {
  AmoPartition p;
  for (const Term& t : c.terms) p.groups.push_back({t.var});
  return p;
}

AmoPartition RestrictPartition(const std::vector<std::vector<Var>>& declared,
                               const PbConstraint& c) {
  std::map<int32_t, int> in_scope;  // var -> group index or -1
  for (const Term& t : c.terms) in_scope.emplace(t.var.index, -1);
  AmoPartition p;
  std::map<int32_t, size_t> seen;
  for (size_t g = 0; g < declared.size(); ++g) {
    std::vector<Var> kept;
    for (Var v : declared[g]) {
      if (!seen.emplace(v.index, g).second) {
        throw std::invalid_argument("variable " + std::to_string(v.index) +
                                    " occurs in two groups");
      }
      auto it = in_scope.find(v.index);
      if (it != in_scope.end()) kept.push_back(v);
    }
    if (!kept.empty()) p.groups.push_back(std::move(kept));
  }
  for (const Term& t : c.terms) {
    if (!seen.count(t.var.index)) {
      seen.emplace(t.var.index, 0);
      p.groups.push_back({t.var});
    }
  }
  return p;
}

std::vector<std::vector<Var>> Instance::GroupVars() const {
  std::vector<std::vector<Var>> out;
  for (const auto& g : groups) out.push_back(g.vars);
  return out;
}

size_t NormalizedPbAmo::num_terms() const {
  size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

int64_t NormalizedPbAmo::GroupMax(size_t i) const {
  int64_t m = 0;
  for (const Term& t : groups[i]) m = std::max(m, t.coef);
  return m;
}

int64_t NormalizedPbAmo::SumOfMaxima() const {
  int64_t s = 0;
  for (size_t i = 0; i < groups.size(); ++i) s = CheckedAdd(s, GroupMax(i));
  return s;
}

bool NormalizedPbAmo::WellFormed() const {
  if (trivial != Triviality::kNone) return groups.empty();
  if (k <= 0 || groups.size() < 2) return false;
  for (const auto& g : groups) {
    if (g.empty()) return false;
    std::vector<int64_t> seen;
    for (const Term& t : g) {
      if (t.coef <= 0 || t.coef > k) return false;
      seen.push_back(t.coef);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      return false;
    }
  }
  return SumOfMaxima() > k;
}

PbConstraint ToConstraint(const NormalizedPbAmo& n) {
  PbConstraint c;
  c.op = Op::kLe;
  c.rhs = n.k;
  for (const auto& g : n.groups) {
    for (const Term& t : g) c.terms.push_back(t);
  }
  return c;
}

AmoPartition ToPartition(const NormalizedPbAmo& n) {
  AmoPartition p;
  for (const auto& g : n.groups) {
    std::vector<Var> vs;
    for (const Term& t : g) vs.push_back(t.var);
    p.groups.push_back(std::move(vs));
  }
  return p;
}

namespace {

NormalizedPbAmo MakeTrivial(Triviality t, int64_t k) {
  NormalizedPbAmo n;
  n.trivial = t;
  n.k = k;
  return n;
}

// Normalizes sum <= k given grouped terms with arbitrary integer coefficients.
NormalizedPbAmo NormalizeLe(std::vector<std::vector<Term>> groups, int64_t k,
                            VarPool& pool, ClauseSink& sink) {
  // Negative coefficients: shift the group up and add y <-> all-false.
  for (auto& g : groups) {
    int64_t qmin = 0;
    for (const Term& t : g) qmin = std::min(qmin, t.coef);
    if (qmin >= 0) continue;
    int64_t shift = -qmin;
    k = CheckedAdd(k, shift);
    Lit y = pool.FreshLit();
    std::vector<Lit> def{y};
    for (Term& t : g) {
      t.coef = CheckedAdd(t.coef, shift);
      def.push_back(Lit::Positive(t.var));
      sink.Add({Lit::Negative(t.var), ~y});
    }
    sink.Add(def);
    g.push_back(Term{shift, y.var()});
  }

  if (k < 0) {
    sink.Add({});
    return MakeTrivial(Triviality::kAlwaysFalse, k);
  }
  if (k == 0) {
    for (const auto& g : groups) {
      for (const Term& t : g) {
        if (t.coef > 0) sink.AddUnit(Lit::Negative(t.var));
      }
    }
    return MakeTrivial(Triviality::kAlwaysTrue, k);
  }

  std::vector<std::vector<Term>> kept;
  for (auto& g : groups) {
    std::vector<Term> ng;
    for (const Term& t : g) {
      if (t.coef == 0) continue;
      if (t.coef > k) {
        sink.AddUnit(Lit::Negative(t.var));
        continue;
      }
      ng.push_back(t);
    }
    if (!ng.empty()) kept.push_back(std::move(ng));
  }

  NormalizedPbAmo n;
  n.k = k;
  n.groups = std::move(kept);
  if (n.groups.size() <= 1 || n.SumOfMaxima() <= k) {
    return MakeTrivial(Triviality::kAlwaysTrue, k);
  }

  // Equal coefficients inside a group share one fresh variable.
  for (auto& g : n.groups) {
    std::map<int64_t, int> count;
    for (const Term& t : g) ++count[t.coef];
    std::vector<Term> ng;
    std::map<int64_t, Lit> merged;
    for (const Term& t : g) {
      if (count[t.coef] == 1) {
        ng.push_back(t);
        continue;
      }
      auto it = merged.find(t.coef);
      if (it == merged.end()) {
        Lit y = pool.FreshLit();
        it = merged.emplace(t.coef, y).first;
        ng.push_back(Term{t.coef, y.var()});
      }
      sink.Add({Lit::Negative(t.var), it->second});
    }
    g = std::move(ng);
  }
  return n;
}

std::vector<std::vector<Term>> Group(const PbConstraint& c,
                                     const AmoPartition& partition,
                                     int64_t sign) {
  std::map<int32_t, size_t> term_of;
  for (size_t i = 0; i < c.terms.size(); ++i) {
    if (!term_of.emplace(c.terms[i].var.index, i).second) {
      throw std::invalid_argument("variable occurs twice in a constraint");
    }
  }
  std::vector<std::vector<Term>> groups;
  size_t covered = 0;
  for (const auto& pg : partition.groups) {
    std::vector<Term> g;
    for (Var v : pg) {
      auto it = term_of.find(v.index);
      if (it == term_of.end()) continue;
      const Term& t = c.terms[it->second];
      g.push_back(Term{CheckedMul(sign, t.coef), t.var});
      ++covered;
    }
    if (!g.empty()) groups.push_back(std::move(g));
  }
  if (covered != c.terms.size()) {
    throw std::invalid_argument("partition does not cover the constraint");
  }
  return groups;
}

}  // namespace

std::vector<NormalizedPbAmo> Normalize(const PbConstraint& c,
                                       const AmoPartition& partition,
                                       VarPool& pool, ClauseSink& sink) {
  std::vector<NormalizedPbAmo> out;
  switch (c.op) {
    case Op::kLe:
      out.push_back(NormalizeLe(Group(c, partition, 1), c.rhs, pool, sink));
      break;
    case Op::kLt:
      out.push_back(NormalizeLe(Group(c, partition, 1),
                                CheckedAdd(c.rhs, -1), pool, sink));
      break;
    case Op::kGe:
      out.push_back(NormalizeLe(Group(c, partition, -1),
                                CheckedMul(c.rhs, -1), pool, sink));
      break;
    case Op::kGt:
      out.push_back(NormalizeLe(Group(c, partition, -1),
                                CheckedAdd(CheckedMul(c.rhs, -1), -1), pool,
                                sink));
      break;
    case Op::kEq:
      out.push_back(NormalizeLe(Group(c, partition, 1), c.rhs, pool, sink));
      out.push_back(NormalizeLe(Group(c, partition, -1),
                                CheckedMul(c.rhs, -1), pool, sink));
      break;
  }
  return out;
}

}  // namespace pbamo
