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

#ifndef PBAMO_TOTALIZER_HPP_
#define PBAMO_TOTALIZER_HPP_

#include <cstdint>
#include <limits>
#include <vector>

#include "pbamo/cnf.hpp"
#include "pbamo/model.hpp"

namespace pbamo {

// kAdjacentPairs pairs neighbours level by level, carrying an odd node up.
enum class TreeHeuristic { kBalanced, kMinRatio, kAdjacentPairs };

inline constexpr int64_t kUnbounded = std::numeric_limits<int64_t>::max();

struct Interval {
  int64_t lo = 0;
  int64_t hi = 0;  // kUnbounded for the overflow interval [K+1, inf)
  bool operator==(const Interval&) const = default;
  bool Contains(int64_t v) const { return lo <= v && v <= hi; }
};

// Binary tree over the groups of a normalized constraint. Values are capped
// at K+1.
struct ValueTree {
  struct Node {
    int left = -1;
    int right = -1;
    int leaf = -1;  // group index for leaves
    int depth = 0;
    std::vector<int64_t> vals;  // sorted, contains 0
    std::vector<Interval> intervals;
  };
  std::vector<Node> nodes;
  int root = -1;

  bool is_leaf(int id) const { return nodes[id].leaf >= 0; }
};

// {0} and the coefficients of each group, in group order.
std::vector<std::vector<int64_t>> LeafValues(const NormalizedPbAmo& n);

// Sorted {min(a + b, k + 1)}.
std::vector<int64_t> MergeValues(const std::vector<int64_t>& a,
                                 const std::vector<int64_t>& b, int64_t k);

// Pairs leaves bottom-up. Balanced trees have height ceil(log2 N) with the
// deepest leaves leftmost. MinRatio repeatedly merges the pair minimizing
// |vals(A)| / (|vals(B)| * |vals(C)|), ties broken by smaller |vals(A)| then
// by position.
ValueTree BuildValueTree(const std::vector<std::vector<int64_t>>& leaf_vals,
                         int64_t k, TreeHeuristic heuristic);

// One interval per value; the root gets [0, max] and [K+1, inf).
void AssignValueIntervals(ValueTree& tree, int64_t k);
// Root intervals as above, children widened top-down.
void AssignReducedIntervals(ValueTree& tree, int64_t k);
// Every child interval pair sums into a single parent interval.
bool HasIntervalProperty(const ValueTree& tree, int64_t k);

// Coefficient reduction to a fixpoint. `passes` receives the tree of each
// pass when non-null.
NormalizedPbAmo ReduceCoefficients(const NormalizedPbAmo& n,
                                   TreeHeuristic heuristic,
                                   std::vector<ValueTree>* passes = nullptr);

struct TreeNodeStats {
  int depth = 0;
  size_t vals = 0;
  size_t intervals = 0;
};

// Generalized totalizer. Returns the number of aux variables.
int64_t EncodeGgt(const NormalizedPbAmo& n, TreeHeuristic heuristic,
                  VarPool& pool, ClauseSink& sink,
                  std::vector<TreeNodeStats>* stats = nullptr);

// Reduced generalized totalizer.
int64_t EncodeRggt(const NormalizedPbAmo& n, TreeHeuristic heuristic,
                   VarPool& pool, ClauseSink& sink,
                   std::vector<TreeNodeStats>* stats = nullptr);

}  // namespace pbamo

#endif  // PBAMO_TOTALIZER_HPP_
