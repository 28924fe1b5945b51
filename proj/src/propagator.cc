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

#include "pbamo/propagator.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbamo {

Propagator::Propagator(const ClauseSink& cnf, int32_t num_vars)
    : num_vars_(std::max(num_vars, cnf.max_var())),
      watches_(2 * static_cast<size_t>(num_vars_) + 2),
      assigns_(static_cast<size_t>(num_vars_) + 1, Value::kUnassigned) {
  std::vector<Lit> units;
  start_.push_back(0);
  for (const auto& c : cnf.clauses()) {
    if (c.size() == 1) {
      units.push_back(c[0]);
      continue;
    }
    const uint32_t id = static_cast<uint32_t>(start_.size() - 1);
    lits_.insert(lits_.end(), c.begin(), c.end());
    start_.push_back(static_cast<uint32_t>(lits_.size()));
    watches_[Index(~c[0])].push_back(id);
    watches_[Index(~c[1])].push_back(id);
  }
  if (cnf.unsat()) {
    conflict_ = root_conflict_ = true;
    return;
  }
  for (Lit u : units) {
    if (!Assign(u)) {
      root_conflict_ = true;
      return;
    }
  }
}

Value Propagator::value(Lit l) const {
  Value v = assigns_[l.var().index];
  if (l.negated() && v != Value::kUnassigned) {
    return v == Value::kTrue ? Value::kFalse : Value::kTrue;
  }
  return v;
}

void Propagator::Enqueue(Lit l) {
  assigns_[l.var().index] = l.negated() ? Value::kFalse : Value::kTrue;
  trail_.push_back(l);
}

bool Propagator::Assign(Lit l) {
  if (conflict_) return false;
  if (l.is_true()) return true;
  if (l.is_false()) {
    conflict_ = true;
    conflict_level_ = level();
    return false;
  }
  Value v = value(l);
  if (v == Value::kTrue) return true;
  if (v == Value::kFalse) {
    conflict_ = true;
    conflict_level_ = level();
    return false;
  }
  Enqueue(l);
  if (!Propagate()) {
    conflict_ = true;
    conflict_level_ = level();
    return false;
  }
  return true;
}

bool Propagator::Propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    auto& ws = watches_[Index(p)];  // clauses watching ~p
    const Lit false_lit = ~p;
    size_t i = 0, j = 0;
    while (i < ws.size()) {
      const uint32_t cid = ws[i++];
      Lit* c = &lits_[start_[cid]];
      const size_t len = start_[cid + 1] - start_[cid];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == Value::kTrue) {
        ws[j++] = cid;
        continue;
      }
      bool moved = false;
      for (size_t k = 2; k < len; ++k) {
        if (value(c[k]) != Value::kFalse) {
          std::swap(c[1], c[k]);
          watches_[Index(~c[1])].push_back(cid);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = cid;
      if (value(c[0]) == Value::kFalse) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        return false;
      }
      Enqueue(c[0]);
    }
    ws.resize(j);
  }
  return true;
}

void Propagator::Backtrack(int target) {
  if (target >= level()) return;
  const size_t keep = trail_lim_[target];
  for (size_t i = trail_.size(); i-- > keep;) {
    assigns_[trail_[i].var().index] = Value::kUnassigned;
  }
  trail_.resize(keep);
  trail_lim_.resize(target);
  qhead_ = std::min(qhead_, keep);
  if (conflict_ && !root_conflict_ && conflict_level_ > target) {
    conflict_ = false;
  }
}

// ---------------------------------------------------------------------------

Solver::Solver(const ClauseSink& cnf, int32_t num_vars)
    : num_vars_(std::max(num_vars, cnf.max_var())),
      watches_(2 * static_cast<size_t>(num_vars_) + 2),
      assigns_(static_cast<size_t>(num_vars_) + 1, Value::kUnassigned),
      model_(static_cast<size_t>(num_vars_) + 1, Value::kUnassigned),
      phase_(static_cast<size_t>(num_vars_) + 1, false),
      levels_(static_cast<size_t>(num_vars_) + 1, 0),
      reasons_(static_cast<size_t>(num_vars_) + 1, -1),
      activity_(static_cast<size_t>(num_vars_) + 1, 0.0),
      seen_(static_cast<size_t>(num_vars_) + 1, 0) {
  empty_clause_ = cnf.unsat();
  for (const auto& c : cnf.clauses()) AddClause(c, false);
  for (int32_t v = 1; v <= num_vars_; ++v) order_.push({0.0, v});
}

Value Solver::Val(Lit l) const {
  Value v = assigns_[l.var().index];
  if (l.negated() && v != Value::kUnassigned) {
    return v == Value::kTrue ? Value::kFalse : Value::kTrue;
  }
  return v;
}

void Solver::AddClause(std::vector<Lit> c, bool learnt) {
  if (c.empty()) {
    empty_clause_ = true;
    return;
  }
  if (c.size() == 1) {
    pending_units_.push_back(c[0]);
    return;
  }
  const uint32_t id = static_cast<uint32_t>(clauses_.size());
  watches_[Index(~c[0])].push_back(Watch{id, c[1]});
  watches_[Index(~c[1])].push_back(Watch{id, c[0]});
  clauses_.push_back(std::move(c));
  (void)learnt;
}

void Solver::Enqueue(Lit l, int32_t reason) {
  const Var v = l.var();
  assigns_[v.index] = l.negated() ? Value::kFalse : Value::kTrue;
  levels_[v.index] = level();
  reasons_[v.index] = reason;
  trail_.push_back(l);
}

int32_t Solver::Propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    auto& ws = watches_[Index(p)];
    const Lit false_lit = ~p;
    size_t i = 0, j = 0;
    while (i < ws.size()) {
      const Watch w = ws[i++];
      if (Val(w.blocker) == Value::kTrue) {
        ws[j++] = w;
        continue;
      }
      auto& c = clauses_[w.clause];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      const Watch nw{w.clause, c[0]};
      if (c[0] != w.blocker && Val(c[0]) == Value::kTrue) {
        ws[j++] = nw;
        continue;
      }
      bool moved = false;
      for (size_t k = 2; k < c.size(); ++k) {
        if (Val(c[k]) != Value::kFalse) {
          std::swap(c[1], c[k]);
          watches_[Index(~c[1])].push_back(nw);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = nw;
      if (Val(c[0]) == Value::kFalse) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return static_cast<int32_t>(w.clause);
      }
      Enqueue(c[0], static_cast<int32_t>(w.clause));
    }
    ws.resize(j);
  }
  return -1;
}

void Solver::Bump(Var v) {
  activity_[v.index] += bump_;
  if (activity_[v.index] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    bump_ *= 1e-100;
    order_ = {};
    for (int32_t u = 1; u <= num_vars_; ++u) {
      if (assigns_[u] == Value::kUnassigned) order_.push({activity_[u], u});
    }
    return;
  }
  if (assigns_[v.index] == Value::kUnassigned) {
    order_.push({activity_[v.index], v.index});
  }
}

void Solver::Analyze(int32_t confl, std::vector<Lit>& out, int& bt_level) {
  out.assign(1, Lit());
  int pending = 0;
  Lit p;
  size_t index = trail_.size();
  do {
    const auto& c = clauses_[confl];
    for (size_t k = p.valid() ? 1 : 0; k < c.size(); ++k) {
      const Lit q = c[k];
      const int32_t v = q.var().index;
      if (seen_[v] || levels_[v] == 0) continue;
      seen_[v] = 1;
      Bump(q.var());
      if (levels_[v] >= level()) {
        ++pending;
      } else {
        out.push_back(q);
      }
    }
    do {
      p = trail_[--index];
    } while (!seen_[p.var().index]);
    confl = reasons_[p.var().index];
    seen_[p.var().index] = 0;
    --pending;
  } while (pending > 0);
  out[0] = ~p;
  for (size_t k = 1; k < out.size(); ++k) seen_[out[k].var().index] = 0;
  bt_level = 0;
  size_t max_i = 1;
  for (size_t k = 1; k < out.size(); ++k) {
    const int lv = levels_[out[k].var().index];
    if (lv > bt_level) {
      bt_level = lv;
      max_i = k;
    }
  }
  if (out.size() > 1) std::swap(out[1], out[max_i]);
  bump_ *= 1.05;
}

void Solver::CancelUntil(int target) {
  if (level() <= target) return;
  for (size_t i = trail_.size(); i-- > trail_lim_[target];) {
    const Var v = trail_[i].var();
    phase_[v.index] = !trail_[i].negated();
    assigns_[v.index] = Value::kUnassigned;
    reasons_[v.index] = -1;
    order_.push({activity_[v.index], v.index});
  }
  trail_.resize(trail_lim_[target]);
  trail_lim_.resize(target);
  qhead_ = trail_.size();
}

Lit Solver::PickBranch() {
  int32_t best = 0;
  while (!order_.empty()) {
    const auto [act, v] = order_.top();
    if (assigns_[v] == Value::kUnassigned && act == activity_[v]) {
      best = v;
      break;
    }
    order_.pop();
  }
  if (best == 0) return Lit();
  return phase_[best] ? Lit::Positive(Var{best}) : Lit::Negative(Var{best});
}

Solver::Result Solver::Solve(std::span<const Lit> assumptions) {
  CancelUntil(0);
  if (empty_clause_) return Result::kUnsat;
  for (Lit u : pending_units_) {
    Value v = Val(u);
    if (v == Value::kFalse) {
      empty_clause_ = true;
      return Result::kUnsat;
    }
    if (v == Value::kUnassigned) Enqueue(u, -1);
  }
  pending_units_.clear();
  if (Propagate() >= 0) {
    empty_clause_ = true;
    return Result::kUnsat;
  }
  std::vector<Lit> learnt;
  int64_t restart_at = 100;
  int64_t local_conflicts = 0;
  while (true) {
    const int32_t confl = Propagate();
    if (confl >= 0) {
      ++conflicts_;
      ++local_conflicts;
      if (level() == 0) {
        empty_clause_ = true;
        return Result::kUnsat;
      }
      int bt = 0;
      Analyze(confl, learnt, bt);
      CancelUntil(bt);
      if (learnt.size() == 1) {
        if (level() > 0) CancelUntil(0);
        Enqueue(learnt[0], -1);
      } else {
        const int32_t id = static_cast<int32_t>(clauses_.size());
        AddClause(learnt, true);
        Enqueue(learnt[0], id);
      }
      continue;
    }
    if (local_conflicts >= restart_at) {
      local_conflicts = 0;
      restart_at += restart_at / 2;
      CancelUntil(0);
      continue;
    }
    Lit next;
    while (level() < static_cast<int>(assumptions.size())) {
      const Lit a = assumptions[level()];
      if (a.is_true() || Val(a) == Value::kTrue) {
        trail_lim_.push_back(trail_.size());
        continue;
      }
      if (a.is_false() || Val(a) == Value::kFalse) {
        CancelUntil(0);
        return Result::kUnsat;
      }
      next = a;
      break;
    }
    if (!next.valid()) {
      next = PickBranch();
      if (!next.valid()) {
        for (int32_t v = 1; v <= num_vars_; ++v) model_[v] = assigns_[v];
        CancelUntil(0);
        return Result::kSat;
      }
    }
    trail_lim_.push_back(trail_.size());
    Enqueue(next, -1);
  }
}

}  // namespace pbamo
