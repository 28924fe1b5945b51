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

#ifndef PBAMO_CNF_HPP_
#define PBAMO_CNF_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pbamo {

// A propositional variable. Index 0 is invalid; valid indices are 1-based.
struct Var {
  int32_t index = 0;
  auto operator<=>(const Var&) const = default;
};

// A literal in DIMACS convention, or one of the two constants.
// The constants are encoded as +/- kConstCode so that negation is uniform.
class Lit {
 public:
  constexpr Lit() = default;
  static constexpr Lit Positive(Var v) { return Lit(v.index); }
  static constexpr Lit Negative(Var v) { return Lit(-v.index); }
  static constexpr Lit Constant(bool value) {
    return Lit(value ? kConstCode : -kConstCode);
  }
  static constexpr Lit True() { return Constant(true); }
  static constexpr Lit False() { return Constant(false); }
  static constexpr Lit FromDimacs(int32_t code) { return Lit(code); }

  constexpr Lit operator~() const { return Lit(-code_); }
  constexpr bool valid() const { return code_ != 0; }
  constexpr bool is_constant() const {
    return code_ == kConstCode || code_ == -kConstCode;
  }
  constexpr bool is_true() const { return code_ == kConstCode; }
  constexpr bool is_false() const { return code_ == -kConstCode; }
  constexpr bool negated() const { return code_ < 0; }
  constexpr Var var() const { return Var{code_ < 0 ? -code_ : code_}; }
  constexpr int32_t code() const { return code_; }

  auto operator<=>(const Lit&) const = default;

 private:
  static constexpr int32_t kConstCode = INT32_MAX;
  constexpr explicit Lit(int32_t code) : code_(code) {}
  int32_t code_ = 0;
};

std::string ToString(Lit lit);

// Allocates variable indices. Named variables get stable indices in order
// of first request.
class VarPool {
 public:
  VarPool() = default;

  Var Fresh();
  Lit FreshLit() { return Lit::Positive(Fresh()); }
  // Returns the variable registered under `name`, creating it if needed.
  Var Named(std::string_view name);
  // Returns nullptr-like Var{0} if `name` was never registered.
  Var Lookup(std::string_view name) const;
  // Reserves `count` consecutive indices and returns the first one.
  Var ReserveBlock(int32_t count);

  int32_t num_vars() const { return next_ - 1; }
  const std::vector<std::pair<std::string, Var>>& names() const {
    return names_;
  }

 private:
  int32_t next_ = 1;
  std::unordered_map<std::string, Var> by_name_;
  std::vector<std::pair<std::string, Var>> names_;
};

// Collects clauses. Constants are simplified away on insertion: clauses with
// a true literal are dropped, false literals are removed, and an empty result
// marks the formula as unsatisfiable.
class ClauseSink {
 public:
  void Add(std::span<const Lit> lits);
  void Add(std::initializer_list<Lit> lits) {
    Add(std::span<const Lit>(lits.begin(), lits.size()));
  }
  void AddUnit(Lit lit) { Add({lit}); }
  // Appends everything from `other`, keeping its unsat flag.
  void Append(const ClauseSink& other);
  void Clear();

  bool unsat() const { return unsat_; }
  // Number of clauses including the empty clause when unsat.
  int64_t num_clauses() const {
    return static_cast<int64_t>(clauses_.size()) + (unsat_ ? 1 : 0);
  }
  int32_t max_var() const { return max_var_; }
  const std::vector<std::vector<Lit>>& clauses() const { return clauses_; }

  // Removes the clause at `index`. Used for mutation testing.
  void Erase(size_t index);

  void WriteDimacs(std::ostream& out, int32_t num_vars) const;

 private:
  std::vector<std::vector<Lit>> clauses_;
  std::vector<Lit> scratch_;
  bool unsat_ = false;
  int32_t max_var_ = 0;
};

}  // namespace pbamo

#endif  // PBAMO_CNF_HPP_
