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

#ifndef PBAMO_PROPAGATOR_HPP_
#define PBAMO_PROPAGATOR_HPP_

#include <cstdint>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "pbamo/cnf.hpp"

namespace pbamo {

enum class Value : int8_t { kFalse = -1, kUnassigned = 0, kTrue = 1 };

// Unit propagation over a fixed clause set with two watched literals and
// decision levels. No learning, so the closure reached is exactly the UP
// closure of the clauses plus the assigned literals.
class Propagator {
 public:
  Propagator(const ClauseSink& cnf, int32_t num_vars);

  bool conflict() const { return conflict_; }
  Value value(Lit l) const;
  Value value(Var v) const { return assigns_[v.index]; }
  int level() const { return static_cast<int>(trail_lim_.size()); }
  int32_t num_vars() const { return num_vars_; }
  const std::vector<Lit>& trail() const { return trail_; }

  void NewLevel() { trail_lim_.push_back(trail_.size()); }
  // Assigns `l` and propagates. Returns false on conflict.
  bool Assign(Lit l);
  void Backtrack(int level);

 private:
  static size_t Index(Lit l) {
    return 2 * static_cast<size_t>(l.var().index) + (l.negated() ? 1 : 0);
  }
  void Enqueue(Lit l);
  bool Propagate();

  int32_t num_vars_;
  std::vector<Lit> lits_;          // flattened clauses
  std::vector<uint32_t> start_;    // clause offsets, one past the end last
  std::vector<std::vector<uint32_t>> watches_;
  std::vector<Value> assigns_;
  std::vector<Lit> trail_;
  std::vector<size_t> trail_lim_;
  size_t qhead_ = 0;
  bool conflict_ = false;
  bool root_conflict_ = false;
  int conflict_level_ = 0;
};

// Small CDCL solver for satisfiability queries under assumptions.
class Solver {
 public:
  Solver(const ClauseSink& cnf, int32_t num_vars);

  enum class Result { kSat, kUnsat };
  Result Solve(std::span<const Lit> assumptions = {});
  // Valid after kSat.
  Value model(Var v) const { return model_[v.index]; }
  int64_t conflicts() const { return conflicts_; }

 private:
  struct Watch {
    uint32_t clause;
    Lit blocker;
  };
  static size_t Index(Lit l) {
    return 2 * static_cast<size_t>(l.var().index) + (l.negated() ? 1 : 0);
  }
  Value Val(Lit l) const;
  void AddClause(std::vector<Lit> c, bool learnt);
  void Enqueue(Lit l, int32_t reason);
  int32_t Propagate();
  void Analyze(int32_t confl, std::vector<Lit>& out, int& bt_level);
  void CancelUntil(int level);
  Lit PickBranch();
  void Bump(Var v);
  int level() const { return static_cast<int>(trail_lim_.size()); }

  int32_t num_vars_;
  bool empty_clause_ = false;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<Watch>> watches_;
  std::vector<Value> assigns_;
  std::vector<Value> model_;
  std::vector<bool> phase_;
  std::vector<int> levels_;
  std::vector<int32_t> reasons_;
  std::vector<double> activity_;
  // Lazy max-heap on activity; entries go stale and are skipped on pop.
  std::priority_queue<std::pair<double, int32_t>> order_;
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<size_t> trail_lim_;
  std::vector<Lit> pending_units_;
  size_t qhead_ = 0;
  double bump_ = 1.0;
  int64_t conflicts_ = 0;
};

}  // namespace pbamo

#endif  // PBAMO_PROPAGATOR_HPP_
