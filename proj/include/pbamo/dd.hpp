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

#ifndef PBAMO_DD_HPP_
#define PBAMO_DD_HPP_

#include <cstdint>
#include <vector>

#include "pbamo/cnf.hpp"
#include "pbamo/model.hpp"

namespace pbamo {

// Reduced ordered MDD with one layer per group. Node 0 is the false
// terminal and node 1 the true terminal.
struct Mdd {
  struct Node {
    size_t layer = 0;
    int else_child = 0;
    std::vector<int> children;  // one per term of the layer's group
  };
  static constexpr int kFalse = 0;
  static constexpr int kTrue = 1;

  std::vector<Node> nodes;
  int root = kTrue;

  size_t num_nonterminals() const { return nodes.size() - 2; }
};

// Builds the diagram with interval memoization. Layers follow the group
// order of `n`; edges may skip layers.
Mdd BuildMdd(const NormalizedPbAmo& n);

// Emits the clauses of the diagram; returns the number of aux variables.
int64_t EncodeMdd(const NormalizedPbAmo& n, VarPool& pool, ClauseSink& sink);

}  // namespace pbamo

#endif  // PBAMO_DD_HPP_
