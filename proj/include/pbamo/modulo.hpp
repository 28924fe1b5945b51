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

#ifndef PBAMO_MODULO_HPP_
#define PBAMO_MODULO_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "pbamo/cnf.hpp"
#include "pbamo/model.hpp"

namespace pbamo {

// Greedy mixed-radix base: repeatedly picks the lambda > 1 dividing the most
// nonzero coefficients (ties to the larger lambda) while the product of the
// base is at most K, then divides the coefficients by it.
std::vector<int64_t> ChooseBase(const NormalizedPbAmo& n);

// Digits d_0..d_beta of `value`; d_beta is unbounded.
std::vector<int64_t> ToDigits(int64_t value, const std::vector<int64_t>& base);

// Node of a modulo totalizer. digits[h] maps a nonzero digit value to its
// literal; value 0 is the constant true. carry[h] is invalid when absent.
struct DigitNode {
  int left = -1;
  int right = -1;
  int leaf = -1;
  std::vector<std::map<int64_t, Lit>> digits;
  std::vector<Lit> carry;
};

struct ModuloTree {
  std::vector<int64_t> base;
  std::vector<DigitNode> nodes;  // leaves first, then merges bottom-up
  int root = -1;
};

// Generalized modulo totalizer over adjacent pairs. Uses `base` when
// non-null, otherwise ChooseBase. An empty base falls back to the
// generalized totalizer on the same tree. Returns the number of aux
// variables.
int64_t EncodeGmto(const NormalizedPbAmo& n, const std::vector<int64_t>* base,
                   VarPool& pool, ClauseSink& sink, ModuloTree* tree = nullptr);

}  // namespace pbamo

#endif  // PBAMO_MODULO_HPP_
