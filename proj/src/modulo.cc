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

#include "pbamo/modulo.hpp"

#include <algorithm>
#include <stdexcept>

#include "pbamo/totalizer.hpp"

namespace pbamo {

std::vector<int64_t> ChooseBase(const NormalizedPbAmo& n) {
  std::vector<int64_t> coefs;
  for (const auto& g : n.groups) {
    for (const Term& t : g) coefs.push_back(t.coef);
  }
  std::vector<int64_t> base;
  int64_t product = 1;
  while (product <= n.k) {
    int64_t max_coef = 0;
    for (int64_t q : coefs) max_coef = std::max(max_coef, q);
    int64_t best = 0, best_count = 0;
    for (int64_t lambda = 2; lambda <= max_coef; ++lambda) {
      int64_t count = 0;
      for (int64_t q : coefs) count += q > 0 && q % lambda == 0;
      if (count > 0 && count >= best_count) {
        best = lambda;
        best_count = count;
      }
    }
    if (best == 0) break;
    base.push_back(best);
    product = CheckedMul(product, best);
    for (int64_t& q : coefs) q /= best;
  }
  return base;
}

std::vector<int64_t> ToDigits(int64_t value, const std::vector<int64_t>& base) {
  std::vector<int64_t> d;
  for (int64_t lambda : base) {
    d.push_back(value % lambda);
    value /= lambda;
  }
  d.push_back(value);
  return d;
}

namespace {

class ModuloBuilder {
 public:
  ModuloBuilder(const std::vector<int64_t>& base, VarPool& pool,
                ClauseSink& sink)
      : base_(base), pool_(pool), sink_(sink) {}

  DigitNode Leaf(const std::vector<Term>& group, int leaf) {
    DigitNode node;
    node.leaf = leaf;
    node.digits.resize(base_.size() + 1);
    node.carry.assign(base_.size(), Lit());
    for (size_t h = 0; h <= base_.size(); ++h) {
      std::map<int64_t, std::vector<Var>> by_value;
      for (const Term& t : group) {
        int64_t d = ToDigits(t.coef, base_)[h];
        if (d > 0) by_value[d].push_back(t.var);
      }
      for (const auto& [d, vars] : by_value) {
        if (vars.size() == 1) {
          node.digits[h][d] = Lit::Positive(vars.front());
          continue;
        }
        Lit o = Fresh();
        node.digits[h][d] = o;
        for (Var x : vars) sink_.Add({Lit::Negative(x), o});
      }
    }
    return node;
  }

  DigitNode Merge(const DigitNode& l, const DigitNode& r) {
    const size_t beta = base_.size();
    DigitNode o;
    o.digits.resize(beta + 1);
    o.carry.assign(beta, Lit());
    for (size_t h = 0; h < beta; ++h) {
      const int64_t lambda = base_[h];
      const auto lv = Values(l.digits[h]);
      const auto rv = Values(r.digits[h]);
      const Lit cin = h > 0 ? o.carry[h - 1] : Lit();
      bool need_carry = false;
      for (int64_t i : lv) {
        for (int64_t j : rv) {
          need_carry = need_carry || i + j >= lambda ||
                       (cin.valid() && i + j + 1 >= lambda);
        }
      }
      const Lit gamma = need_carry ? Fresh() : Lit();
      if (need_carry) o.carry[h] = gamma;
      auto& out = o.digits[h];
      auto digit = [&](int64_t s) -> Lit {
        auto it = out.find(s);
        if (it == out.end()) it = out.emplace(s, Fresh()).first;
        return it->second;
      };
      for (int64_t i : lv) {
        for (int64_t j : rv) {
          const Lit li = Get(l.digits[h], i), rj = Get(r.digits[h], j);
          if (i + j > 0) Sums(i + j, lambda, Lit(), li, rj, gamma, digit);
          if (cin.valid()) Sums(i + j + 1, lambda, cin, li, rj, gamma, digit);
        }
      }
    }
    const auto lv = Values(l.digits[beta]);
    const auto rv = Values(r.digits[beta]);
    const Lit cin = beta > 0 ? o.carry[beta - 1] : Lit();
    auto& out = o.digits[beta];
    auto digit = [&](int64_t s) -> Lit {
      auto it = out.find(s);
      if (it == out.end()) it = out.emplace(s, Fresh()).first;
      return it->second;
    };
    for (int64_t i : lv) {
      for (int64_t j : rv) {
        const Lit li = Get(l.digits[beta], i), rj = Get(r.digits[beta], j);
        if (i + j > 0) sink_.Add({~li, ~rj, digit(i + j)});
        if (cin.valid()) sink_.Add({~cin, ~li, ~rj, digit(i + j + 1)});
      }
    }
    return o;
  }

  void Root(const DigitNode& root, int64_t k) {
    const std::vector<int64_t> kd = ToDigits(k, base_);
    std::vector<Lit> prefix;
    for (size_t h = base_.size() + 1; h-- > 0;) {
      for (const auto& [s, lit] : root.digits[h]) {
        if (s <= kd[h]) continue;
        std::vector<Lit> c = prefix;
        c.push_back(~lit);
        sink_.Add(c);
      }
      if (kd[h] == 0) continue;
      auto it = root.digits[h].find(kd[h]);
      if (it == root.digits[h].end()) break;
      prefix.push_back(~it->second);
    }
  }

  int64_t aux() const { return aux_; }

 private:
  Lit Fresh() {
    ++aux_;
    return pool_.FreshLit();
  }

  static std::vector<int64_t> Values(const std::map<int64_t, Lit>& m) {
    std::vector<int64_t> v{0};
    for (const auto& [d, lit] : m) v.push_back(d);
    return v;
  }

  static Lit Get(const std::map<int64_t, Lit>& m, int64_t d) {
    return d == 0 ? Lit::True() : m.at(d);
  }

  template <typename DigitFn>
  void Sums(int64_t s, int64_t lambda, Lit cin, Lit li, Lit rj, Lit gamma,
            DigitFn&& digit) {
    std::vector<Lit> head;
    if (cin.valid()) head.push_back(~cin);
    head.push_back(~li);
    head.push_back(~rj);
    if (s < lambda) {
      std::vector<Lit> c = head;
      c.push_back(digit(s));
      if (gamma.valid()) c.push_back(gamma);
      sink_.Add(c);
    } else {
      std::vector<Lit> c = head;
      c.push_back(gamma);
      sink_.Add(c);
      if (s > lambda) {
        std::vector<Lit> d = head;
        d.push_back(digit(s - lambda));
        sink_.Add(d);
      }
    }
  }

  const std::vector<int64_t>& base_;
  VarPool& pool_;
  ClauseSink& sink_;
  int64_t aux_ = 0;
};

}  // namespace

int64_t EncodeGmto(const NormalizedPbAmo& n, const std::vector<int64_t>* base,
                   VarPool& pool, ClauseSink& sink, ModuloTree* tree) {
  ModuloTree local;
  ModuloTree& t = tree ? *tree : local;
  t.base = base ? *base : ChooseBase(n);
  for (int64_t lambda : t.base) {
    if (lambda < 2) throw std::invalid_argument("base entries must be >= 2");
  }
  if (t.base.empty()) {
    return EncodeGgt(n, TreeHeuristic::kAdjacentPairs, pool, sink);
  }
  ModuloBuilder b(t.base, pool, sink);
  std::vector<int> level;
  for (size_t g = 0; g < n.groups.size(); ++g) {
    t.nodes.push_back(b.Leaf(n.groups[g], static_cast<int>(g)));
    level.push_back(static_cast<int>(g));
  }
  while (level.size() > 1) {
    std::vector<int> next;
    for (size_t i = 0; i + 1 < level.size(); i += 2) {
      DigitNode node = b.Merge(t.nodes[level[i]], t.nodes[level[i + 1]]);
      node.left = level[i];
      node.right = level[i + 1];
      t.nodes.push_back(std::move(node));
      next.push_back(static_cast<int>(t.nodes.size()) - 1);
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  t.root = level.front();
  b.Root(t.nodes[t.root], n.k);
  return b.aux();
}

}  // namespace pbamo
