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

#include "pbamo/dd.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace pbamo {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

int64_t SatAdd(int64_t a, int64_t b) {
  if (a >= kInf || b >= kInf) return kInf;
  if (a <= -kInf || b <= -kInf) return -kInf;
  return a + b;
}

struct Built {
  int node;
  int64_t lo;
  int64_t hi;
};

class MddBuilder {
 public:
  explicit MddBuilder(const NormalizedPbAmo& n) : n_(n), memo_(n.num_groups()) {
    suffix_max_.assign(n.num_groups() + 1, 0);
    for (size_t i = n.num_groups(); i-- > 0;) {
      suffix_max_[i] = suffix_max_[i + 1] + n.GroupMax(i);
    }
    mdd_.nodes.resize(2);
  }

  Mdd Run() {
    mdd_.root = Build(0, n_.k).node;
    return std::move(mdd_);
  }

 private:
  Built Build(size_t layer, int64_t k) {
    if (k < 0) return {Mdd::kFalse, -kInf, -1};
    if (k >= suffix_max_[layer]) return {Mdd::kTrue, suffix_max_[layer], kInf};
    auto& memo = memo_[layer];
    auto it = memo.upper_bound(k);
    if (it != memo.begin()) {
      --it;
      if (k <= it->second.hi) return it->second;
    }
    const auto& group = n_.groups[layer];
    Built e = Build(layer + 1, k);
    int64_t lo = e.lo, hi = e.hi;
    std::vector<int> children;
    bool all_same = true;
    for (const Term& t : group) {
      Built c = Build(layer + 1, k - t.coef);
      lo = std::max(lo, SatAdd(c.lo, t.coef));
      hi = std::min(hi, SatAdd(c.hi, t.coef));
      children.push_back(c.node);
      all_same = all_same && c.node == e.node;
    }
    int node = e.node;
    if (!all_same) {
      node = static_cast<int>(mdd_.nodes.size());
      mdd_.nodes.push_back(Mdd::Node{layer, e.node, std::move(children)});
    }
    Built b{node, lo, hi};
    memo.emplace(lo, b);
    return b;
  }

  const NormalizedPbAmo& n_;
  std::vector<int64_t> suffix_max_;
  std::vector<std::map<int64_t, Built>> memo_;
  Mdd mdd_;
};

}  // namespace

Mdd BuildMdd(const NormalizedPbAmo& n) { return MddBuilder(n).Run(); }

int64_t EncodeMdd(const NormalizedPbAmo& n, VarPool& pool, ClauseSink& sink) {
  Mdd mdd = BuildMdd(n);
  std::vector<Lit> lit(mdd.nodes.size());
  lit[Mdd::kFalse] = Lit::False();
  lit[Mdd::kTrue] = Lit::True();
  for (size_t i = 2; i < mdd.nodes.size(); ++i) lit[i] = pool.FreshLit();
  for (size_t i = 2; i < mdd.nodes.size(); ++i) {
    const Mdd::Node& node = mdd.nodes[i];
    const Lit v = lit[i];
    const Lit v0 = lit[node.else_child];
    sink.Add({v0, ~v});
    const auto& group = n.groups[node.layer];
    for (size_t j = 0; j < group.size(); ++j) {
      if (node.children[j] == node.else_child) continue;
      sink.Add({lit[node.children[j]], Lit::Negative(group[j].var), ~v});
    }
  }
  sink.AddUnit(lit[mdd.root]);
  return static_cast<int64_t>(mdd.num_nonterminals());
}

}  // namespace pbamo
