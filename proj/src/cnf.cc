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

#include "pbamo/cnf.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace pbamo {

std::string ToString(Lit lit) {
  if (lit.is_true()) return "TRUE";
  if (lit.is_false()) return "FALSE";
  return std::to_string(lit.code());
}

Var VarPool::Fresh() { return ReserveBlock(1); }

Var VarPool::Named(std::string_view name) {
  auto it = by_name_.find(std::string(name));
  if (it != by_name_.end()) return it->second;
  Var v = Fresh();
  by_name_.emplace(std::string(name), v);
  names_.emplace_back(std::string(name), v);
  return v;
}

Var VarPool::Lookup(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? Var{} : it->second;
}

Var VarPool::ReserveBlock(int32_t count) {
  if (count < 0) throw std::invalid_argument("negative block size");
  // Keep clear of the constant literal code.
  if (next_ > std::numeric_limits<int32_t>::max() - 1 - count) {
    throw std::overflow_error("variable index overflow");
  }
  Var first{next_};
  next_ += count;
  return first;
}

void ClauseSink::Add(std::span<const Lit> lits) {
  if (unsat_) return;
  scratch_.clear();
  for (Lit l : lits) {
    if (!l.valid()) throw std::invalid_argument("invalid literal in clause");
    if (l.is_true()) return;
    if (l.is_false()) continue;
    scratch_.push_back(l);
  }
  std::sort(scratch_.begin(), scratch_.end(), [](Lit a, Lit b) {
    int32_t va = a.var().index, vb = b.var().index;
    return va != vb ? va < vb : a.code() < b.code();
  });
  scratch_.erase(std::unique(scratch_.begin(), scratch_.end()),
                 scratch_.end());
  for (size_t i = 1; i < scratch_.size(); ++i) {
    if (scratch_[i].var() == scratch_[i - 1].var()) return;  // tautology
  }
  if (scratch_.empty()) {
    unsat_ = true;
    return;
  }
  for (Lit l : scratch_) max_var_ = std::max(max_var_, l.var().index);
  clauses_.push_back(scratch_);
}

void ClauseSink::Append(const ClauseSink& other) {
  for (const auto& c : other.clauses_) Add(c);
  if (other.unsat_) unsat_ = true;
}

void ClauseSink::Clear() {
  clauses_.clear();
  unsat_ = false;
  max_var_ = 0;
}

void ClauseSink::Erase(size_t index) {
  clauses_.erase(clauses_.begin() + static_cast<std::ptrdiff_t>(index));
}

void ClauseSink::WriteDimacs(std::ostream& out, int32_t num_vars) const {
  out << "p cnf " << std::max(num_vars, max_var_) << ' ' << num_clauses()
      << '\n';
  for (const auto& c : clauses_) {
    for (Lit l : c) out << l.code() << ' ';
    out << "0\n";
  }
  if (unsat_) out << "0\n";
}

}  // namespace pbamo
