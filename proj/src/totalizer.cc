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

#include "pbamo/totalizer.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace pbamo {

std::vector<std::vector<int64_t>> LeafValues(const NormalizedPbAmo& n) {
  std::vector<std::vector<int64_t>> out;
  for (const auto& g : n.groups) {
    std::vector<int64_t> v{0};
    for (const Term& t : g) v.push_back(t.coef);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int64_t> MergeValues(const std::vector<int64_t>& a,
                                 const std::vector<int64_t>& b, int64_t k) {
  std::vector<char> seen(static_cast<size_t>(k) + 2, 0);
  for (int64_t x : a) {
    for (int64_t y : b) seen[static_cast<size_t>(std::min(x + y, k + 1))] = 1;
  }
  std::vector<int64_t> out;
  for (size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(static_cast<int64_t>(v));
  }
  return out;
}

namespace {

int AddNode(ValueTree& t, int left, int right, int64_t k) {
  ValueTree::Node node;
  node.left = left;
  node.right = right;
  node.vals = MergeValues(t.nodes[left].vals, t.nodes[right].vals, k);
  t.nodes.push_back(std::move(node));
  return static_cast<int>(t.nodes.size()) - 1;
}

int BuildBalanced(ValueTree& t, int first, int count, int64_t k) {
  if (count == 1) return first;
  int left_count = 1;
  if (count > 2) {
    int h = std::bit_width(static_cast<unsigned>(count - 1));  // ceil(log2)
    left_count = std::min(1 << (h - 1), count - (1 << (h - 2)));
  }
  int l = BuildBalanced(t, first, left_count, k);
  int r = BuildBalanced(t, first + left_count, count - left_count, k);
  return AddNode(t, l, r, k);
}

int BuildMinRatio(ValueTree& t, int count, int64_t k) {
  std::vector<int> live;
  for (int i = 0; i < count; ++i) live.push_back(i);
  std::map<std::pair<int, int>, size_t> merged_size;
  auto size_of = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = merged_size.find(key);
    if (it != merged_size.end()) return it->second;
    size_t s = MergeValues(t.nodes[a].vals, t.nodes[b].vals, k).size();
    merged_size.emplace(key, s);
    return s;
  };
  while (live.size() > 1) {
    size_t bi = 0, bj = 1;
    size_t best_m = 0, best_p = 0;
    bool have = false;
    for (size_t i = 0; i < live.size(); ++i) {
      for (size_t j = i + 1; j < live.size(); ++j) {
        size_t m = size_of(live[i], live[j]);
        size_t p = t.nodes[live[i]].vals.size() * t.nodes[live[j]].vals.size();
        bool better = !have;
        if (have) {
          unsigned __int128 lhs = static_cast<unsigned __int128>(m) * best_p;
          unsigned __int128 rhs = static_cast<unsigned __int128>(best_m) * p;
          better = lhs < rhs || (lhs == rhs && m < best_m);
        }
        if (better) {
          have = true;
          bi = i;
          bj = j;
          best_m = m;
          best_p = p;
        }
      }
    }
    int node = AddNode(t, live[bi], live[bj], k);
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(bj));
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(bi));
    live.push_back(node);
  }
  return live.front();
}

int BuildAdjacent(ValueTree& t, int count, int64_t k) {
  std::vector<int> level;
  for (int i = 0; i < count; ++i) level.push_back(i);
  while (level.size() > 1) {
    std::vector<int> next;
    for (size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(AddNode(t, level[i], level[i + 1], k));
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

void SetDepth(ValueTree& t, int id, int depth) {
  t.nodes[id].depth = depth;
  if (t.nodes[id].leaf < 0) {
    SetDepth(t, t.nodes[id].left, depth + 1);
    SetDepth(t, t.nodes[id].right, depth + 1);
  }
}

std::vector<Interval> SingletonIntervals(const std::vector<int64_t>& vals,
                                         int64_t k) {
  std::vector<Interval> out;
  for (int64_t v : vals) {
    out.push_back(Interval{v, v > k ? kUnbounded : v});
  }
  return out;
}

std::vector<Interval> RootIntervals(const std::vector<int64_t>& vals,
                                    int64_t k) {
  int64_t below = 0;
  bool overflow = false;
  for (int64_t v : vals) {
    if (v > k) {
      overflow = true;
    } else {
      below = std::max(below, v);
    }
  }
  std::vector<Interval> out{Interval{0, below}};
  if (overflow) out.push_back(Interval{k + 1, kUnbounded});
  return out;
}

int Find(const std::vector<Interval>& intervals, int64_t v) {
  for (size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].Contains(v)) return static_cast<int>(i);
  }
  return -1;
}

int64_t SumCap(int64_t a, int64_t b, int64_t k) {
  if (a == kUnbounded || b == kUnbounded) return kUnbounded;
  return std::min(a + b, k + 1);
}

void WidenChild(ValueTree& t, int child, int sibling, int parent, int64_t k) {
  const auto& pint = t.nodes[parent].intervals;
  const auto& wvals = t.nodes[sibling].vals;
  std::vector<Interval> in = SingletonIntervals(t.nodes[child].vals, k);
  std::vector<Interval> out;
  Interval cur = in.front();
  for (size_t i = 1; i < in.size(); ++i) {
    const int64_t b = cur.hi, c = in[i].lo;
    bool merge = b != kUnbounded;
    for (int64_t w : wvals) {
      if (!merge) break;
      int ib = Find(pint, SumCap(w, b, k));
      int ic = Find(pint, SumCap(w, c, k));
      merge = ib >= 0 && ib == ic;
    }
    if (merge) {
      cur.hi = in[i].hi;
    } else {
      out.push_back(cur);
      cur = in[i];
    }
  }
  out.push_back(cur);
  t.nodes[child].intervals = std::move(out);
}

void WidenDown(ValueTree& t, int id, int64_t k) {
  if (t.is_leaf(id)) return;
  int l = t.nodes[id].left, r = t.nodes[id].right;
  WidenChild(t, l, r, id, k);
  WidenChild(t, r, l, id, k);
  WidenDown(t, l, k);
  WidenDown(t, r, k);
}

}  // namespace

ValueTree BuildValueTree(const std::vector<std::vector<int64_t>>& leaf_vals,
                         int64_t k, TreeHeuristic heuristic) {
  ValueTree t;
  const int count = static_cast<int>(leaf_vals.size());
  if (count == 0) throw std::invalid_argument("tree needs at least one leaf");
  for (int i = 0; i < count; ++i) {
    ValueTree::Node leaf;
    leaf.leaf = i;
    leaf.vals = leaf_vals[i];
    for (auto& v : leaf.vals) v = std::min(v, k + 1);
    t.nodes.push_back(std::move(leaf));
  }
  switch (heuristic) {
    case TreeHeuristic::kBalanced: t.root = BuildBalanced(t, 0, count, k); break;
    case TreeHeuristic::kMinRatio: t.root = BuildMinRatio(t, count, k); break;
    case TreeHeuristic::kAdjacentPairs: t.root = BuildAdjacent(t, count, k); break;
  }
  SetDepth(t, t.root, 0);
  return t;
}

void AssignValueIntervals(ValueTree& tree, int64_t k) {
  for (auto& node : tree.nodes) node.intervals = SingletonIntervals(node.vals, k);
  tree.nodes[tree.root].intervals = RootIntervals(tree.nodes[tree.root].vals, k);
}

void AssignReducedIntervals(ValueTree& tree, int64_t k) {
  tree.nodes[tree.root].intervals = RootIntervals(tree.nodes[tree.root].vals, k);
  WidenDown(tree, tree.root, k);
}

bool HasIntervalProperty(const ValueTree& tree, int64_t k) {
  for (const auto& node : tree.nodes) {
    if (node.leaf >= 0) continue;
    const auto& li = tree.nodes[node.left].intervals;
    const auto& ri = tree.nodes[node.right].intervals;
    for (const Interval& a : li) {
      for (const Interval& b : ri) {
        int lo = Find(node.intervals, SumCap(a.lo, b.lo, k));
        int hi = Find(node.intervals, SumCap(a.hi, b.hi, k));
        if (lo < 0 || lo != hi) return false;
      }
    }
  }
  return true;
}

NormalizedPbAmo ReduceCoefficients(const NormalizedPbAmo& n,
                                   TreeHeuristic heuristic,
                                   std::vector<ValueTree>* passes) {
  NormalizedPbAmo cur = n;
  if (cur.trivial != Triviality::kNone || cur.groups.size() < 2) return cur;
  while (true) {
    ValueTree t = BuildValueTree(LeafValues(cur), cur.k, heuristic);
    AssignReducedIntervals(t, cur.k);
    bool changed = false;
    for (const auto& node : t.nodes) {
      if (node.leaf < 0) continue;
      for (Term& term : cur.groups[node.leaf]) {
        const Interval& iv = node.intervals[Find(node.intervals, term.coef)];
        if (iv.lo != term.coef) {
          term.coef = iv.lo;
          changed = true;
        }
      }
    }
    if (passes) passes->push_back(std::move(t));
    if (!changed) break;
    std::vector<std::vector<Term>> groups;
    for (auto& g : cur.groups) {
      std::vector<Term> ng;
      for (const Term& term : g) {
        if (term.coef > 0) ng.push_back(term);
      }
      if (!ng.empty()) groups.push_back(std::move(ng));
    }
    cur.groups = std::move(groups);
    if (cur.groups.size() < 2 || cur.SumOfMaxima() <= cur.k) {
      // Only reachable if the input was already trivially true.
      cur.groups.clear();
      cur.trivial = Triviality::kAlwaysTrue;
      return cur;
    }
  }
  return cur;
}

namespace {

int64_t EncodeTree(const NormalizedPbAmo& n, const ValueTree& t, VarPool& pool,
                   ClauseSink& sink, std::vector<TreeNodeStats>* stats) {
  const int64_t k = n.k;
  int64_t aux = 0;
  // lits[node][interval]; invalid Lit where the interval has no variable.
  std::vector<std::vector<Lit>> lits(t.nodes.size());
  for (size_t id = 0; id < t.nodes.size(); ++id) {
    const auto& node = t.nodes[id];
    lits[id].resize(node.intervals.size());
    if (stats) {
      stats->push_back(TreeNodeStats{node.depth, node.vals.size(),
                                     node.intervals.size()});
    }
    if (node.leaf < 0) {
      for (size_t i = 0; i < node.intervals.size(); ++i) {
        if (node.intervals[i].lo > 0) {
          lits[id][i] = pool.FreshLit();
          ++aux;
        }
      }
      continue;
    }
    const auto& group = n.groups[node.leaf];
    for (size_t i = 0; i < node.intervals.size(); ++i) {
      const Interval& iv = node.intervals[i];
      if (iv.lo == 0) continue;
      std::vector<Var> linked;
      for (const Term& term : group) {
        if (iv.Contains(term.coef)) linked.push_back(term.var);
      }
      if (linked.size() == 1 && iv.lo == iv.hi) {
        lits[id][i] = Lit::Positive(linked.front());
        continue;
      }
      lits[id][i] = pool.FreshLit();
      ++aux;
      for (Var x : linked) sink.Add({Lit::Negative(x), lits[id][i]});
    }
  }
  for (size_t id = 0; id < t.nodes.size(); ++id) {
    const auto& node = t.nodes[id];
    if (node.leaf >= 0) continue;
    auto target = [&](int64_t v) -> Lit {
      int i = Find(node.intervals, v);
      if (i < 0) throw std::logic_error("interval property violated");
      return lits[id][i];
    };
    for (int child : {node.left, node.right}) {
      const auto& civ = t.nodes[child].intervals;
      for (size_t a = 0; a < civ.size(); ++a) {
        if (civ[a].lo == 0) continue;
        Lit o = target(SumCap(civ[a].lo, 0, k));
        if (o.valid()) sink.Add({~lits[child][a], o});
      }
    }
    const auto& liv = t.nodes[node.left].intervals;
    const auto& riv = t.nodes[node.right].intervals;
    for (size_t a = 0; a < liv.size(); ++a) {
      if (liv[a].lo == 0) continue;
      for (size_t b = 0; b < riv.size(); ++b) {
        if (riv[b].lo == 0) continue;
        Lit o = target(SumCap(liv[a].lo, riv[b].lo, k));
        if (o.valid()) {
          sink.Add({~lits[node.left][a], ~lits[node.right][b], o});
        }
      }
    }
  }
  const auto& root = t.nodes[t.root];
  for (size_t i = 0; i < root.intervals.size(); ++i) {
    if (root.intervals[i].lo > k) sink.AddUnit(~lits[t.root][i]);
  }
  return aux;
}

}  // namespace

int64_t EncodeGgt(const NormalizedPbAmo& n, TreeHeuristic heuristic,
                  VarPool& pool, ClauseSink& sink,
                  std::vector<TreeNodeStats>* stats) {
  ValueTree t = BuildValueTree(LeafValues(n), n.k, heuristic);
  AssignValueIntervals(t, n.k);
  return EncodeTree(n, t, pool, sink, stats);
}

int64_t EncodeRggt(const NormalizedPbAmo& n, TreeHeuristic heuristic,
                   VarPool& pool, ClauseSink& sink,
                   std::vector<TreeNodeStats>* stats) {
  std::vector<ValueTree> passes;
  NormalizedPbAmo reduced = ReduceCoefficients(n, heuristic, &passes);
  if (reduced.trivial != Triviality::kNone) return 0;
  return EncodeTree(reduced, passes.back(), pool, sink, stats);
}

}  // namespace pbamo
