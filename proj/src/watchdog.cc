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

#include "pbamo/watchdog.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace pbamo {

WatchdogParams ComputeWatchdogParams(int64_t max_coef, int64_t k) {
  WatchdogParams w;
  w.p = static_cast<int>(std::bit_width(static_cast<uint64_t>(max_coef))) - 1;
  const int64_t span = int64_t{1} << w.p;
  const int64_t rem = (k + 1) % span;
  w.t = rem == 0 ? 0 : span - rem;
  w.m = (k + 1 + w.t) >> w.p;
  return w;
}

Unary UnaryAdd(const Unary& a, const Unary& b, VarPool& pool, ClauseSink& sink,
               size_t limit) {
  const size_t len = std::min(a.size() + b.size(), limit);
  Unary s(len);
  for (auto& l : s) l = pool.FreshLit();
  for (size_t i = 0; i <= a.size(); ++i) {
    for (size_t j = 0; j <= b.size(); ++j) {
      if (i + j == 0 || i + j > len) continue;
      std::vector<Lit> c;
      if (i > 0) c.push_back(~a[i - 1]);
      if (j > 0) c.push_back(~b[j - 1]);
      c.push_back(s[i + j - 1]);
      sink.Add(c);
    }
  }
  return s;
}

namespace {

Unary TotalizeRange(const std::vector<Lit>& in, size_t first, size_t count,
                    VarPool& pool, ClauseSink& sink) {
  if (count == 0) return {};
  if (count == 1) return {in[first]};
  const size_t half = (count + 1) / 2;
  Unary l = TotalizeRange(in, first, half, pool, sink);
  Unary r = TotalizeRange(in, first + half, count - half, pool, sink);
  return UnaryAdd(l, r, pool, sink);
}

// S[idx], 1-based, with S[0] true and S[idx] false past the end.
Lit At(const Unary& s, int64_t idx) {
  if (idx <= 0) return Lit::True();
  if (idx > static_cast<int64_t>(s.size())) return Lit::False();
  return s[static_cast<size_t>(idx - 1)];
}

std::vector<int32_t> Codes(const Unary& u) {
  std::vector<int32_t> out;
  for (Lit l : u) out.push_back(l.code());
  return out;
}

}  // namespace

Unary Totalize(const std::vector<Lit>& inputs, VarPool& pool,
               ClauseSink& sink) {
  return TotalizeRange(inputs, 0, inputs.size(), pool, sink);
}

Unary Half(const Unary& s, int c) {
  Unary h;
  const int64_t len = (static_cast<int64_t>(s.size()) + c) / 2;
  for (int64_t j = 1; j <= len; ++j) h.push_back(At(s, 2 * j - c));
  return h;
}

namespace {

int64_t MaxCoef(const NormalizedPbAmo& n) {
  int64_t q = 0;
  for (const auto& g : n.groups) {
    for (const Term& t : g) q = std::max(q, t.coef);
  }
  return q;
}

// y_{i,r} per group and bit; invalid where no member has the bit. With
// `shared`, equal implicant sets reuse one variable.
class Implicants {
 public:
  Implicants(VarPool& pool, ClauseSink& sink, bool shared)
      : pool_(pool), sink_(sink), shared_(shared) {}

  Lit Get(const std::vector<Term>& group, int bit) {
    std::vector<Var> members;
    for (const Term& t : group) {
      if ((t.coef >> bit) & 1) members.push_back(t.var);
    }
    if (members.empty()) return Lit();
    if (members.size() == 1) return Lit::Positive(members.front());
    std::vector<int32_t> key;
    for (Var v : members) key.push_back(v.index);
    std::sort(key.begin(), key.end());
    if (shared_) {
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Lit y = pool_.FreshLit();
    for (Var v : members) sink_.Add({Lit::Negative(v), y});
    if (shared_) cache_.emplace(std::move(key), y);
    return y;
  }

 private:
  VarPool& pool_;
  ClauseSink& sink_;
  bool shared_;
  std::map<std::vector<int32_t>, Lit> cache_;
};

}  // namespace

std::vector<Bucket> WatchdogBuckets(const NormalizedPbAmo& n, VarPool& pool,
                                    ClauseSink& sink) {
  const WatchdogParams wp = ComputeWatchdogParams(MaxCoef(n), n.k);
  Implicants y(pool, sink, false);
  std::vector<Bucket> buckets(static_cast<size_t>(wp.p) + 1);
  for (int r = 0; r <= wp.p; ++r) {
    for (const auto& g : n.groups) {
      Lit l = y.Get(g, r);
      if (l.valid()) buckets[r].lits.push_back(l);
    }
    buckets[r].constant = (wp.t >> r) & 1;
  }
  return buckets;
}

int64_t EncodeGgpw(const NormalizedPbAmo& n, VarPool& pool, ClauseSink& sink,
                   Lit* watchdog, bool assert_false) {
  const int32_t before = pool.num_vars();
  const WatchdogParams wp = ComputeWatchdogParams(MaxCoef(n), n.k);
  std::vector<Bucket> buckets = WatchdogBuckets(n, pool, sink);
  Unary s;
  for (int r = 0; r <= wp.p; ++r) {
    std::vector<Lit> in = buckets[r].lits;
    if (buckets[r].constant) in.push_back(Lit::True());
    Unary u = Totalize(in, pool, sink);
    s = r == 0 ? u : UnaryAdd(u, Half(s, 0), pool, sink);
  }
  const Lit w = At(s, wp.m);
  if (watchdog) *watchdog = w;
  if (assert_false) sink.AddUnit(~w);
  return pool.num_vars() - before;
}

Unary SharedTotalizers::Build(const std::vector<Lit>& leaves, int excluded) {
  const int64_t kept = static_cast<int64_t>(leaves.size()) -
                       (excluded >= 0 && excluded < static_cast<int>(leaves.size()));
  if (kept > 0) naive_nodes_ += 2 * kept - 1;
  return Build(leaves, 0, leaves.size(), excluded);
}

Unary SharedTotalizers::Build(const std::vector<Lit>& leaves, size_t first,
                              size_t count, int excluded) {
  const bool contains = excluded >= static_cast<int>(first) &&
                        excluded < static_cast<int>(first + count);
  if (count == 0) return {};
  if (count == 1) {
    if (contains) return {};
    leaves_seen_.emplace(leaves[first].code(), 0);
    return {leaves[first]};
  }
  std::vector<int32_t> key;
  for (size_t i = first; i < first + count; ++i) {
    if (static_cast<int>(i) != excluded) key.push_back(leaves[i].code());
  }
  std::sort(key.begin(), key.end());
  auto it = by_leaf_set_.find(key);
  if (it != by_leaf_set_.end()) return it->second;
  const size_t half = (count + 1) / 2;
  Unary l = Build(leaves, first, half, excluded);
  Unary r = Build(leaves, first + half, count - half, excluded);
  if (l.empty()) return r;
  if (r.empty()) return l;
  Unary out = UnaryAdd(l, r, pool_, sink_);
  ++internal_nodes_;
  by_leaf_set_.emplace(std::move(key), out);
  return out;
}

int64_t SharedTotalizers::distinct_nodes() const {
  return static_cast<int64_t>(leaves_seen_.size()) + internal_nodes_;
}

int64_t EncodeGlpw(const NormalizedPbAmo& n, VarPool& pool, ClauseSink& sink,
                   GlpwStats* stats) {
  const int32_t before = pool.num_vars();
  const int p = ComputeWatchdogParams(MaxCoef(n), n.k).p;
  const size_t groups = n.num_groups();
  Implicants y(pool, sink, true);
  // leaves[r] lists y_{j,r} for groups having bit r; owner[r] their groups.
  std::vector<std::vector<Lit>> leaves(static_cast<size_t>(p) + 1);
  std::vector<std::vector<size_t>> owner(static_cast<size_t>(p) + 1);
  for (int r = 0; r <= p; ++r) {
    for (size_t j = 0; j < groups; ++j) {
      Lit l = y.Get(n.groups[j], r);
      if (!l.valid()) continue;
      leaves[r].push_back(l);
      owner[r].push_back(j);
    }
  }
  SharedTotalizers totalizers(pool, sink);
  std::map<std::tuple<std::vector<int32_t>, int, std::vector<int32_t>, size_t>,
           Unary>
      merges;
  auto bucket_without = [&](int r, size_t group) {
    const auto& own = owner[r];
    auto it = std::find(own.begin(), own.end(), group);
    const int excluded =
        it == own.end() ? -1 : static_cast<int>(it - own.begin());
    return totalizers.Build(leaves[r], excluded);
  };

  const int64_t total_max = n.SumOfMaxima();
  for (size_t i = 0; i < groups; ++i) {
    const int64_t others = total_max - n.GroupMax(i);
    for (const Term& term : n.groups[i]) {
      const int64_t k = n.k - term.coef;
      if (others <= k) continue;
      const int64_t span = int64_t{1} << p;
      const int64_t rem = (k + 1) % span;
      const int64_t t = rem == 0 ? 0 : span - rem;
      const int64_t m = (k + 1 + t) >> p;
      Unary s = bucket_without(0, i);
      for (int r = 1; r <= p; ++r) {
        const int c_prev = static_cast<int>((t >> (r - 1)) & 1);
        Unary u = bucket_without(r, i);
        const size_t limit =
            r == p ? static_cast<size_t>(
                         std::max<int64_t>(0, m - ((t >> p) & 1)))
                   : SIZE_MAX;
        auto key = std::make_tuple(Codes(s), c_prev, Codes(u), limit);
        auto it = merges.find(key);
        if (it == merges.end()) {
          Unary merged = UnaryAdd(u, Half(s, c_prev), pool, sink, limit);
          it = merges.emplace(std::move(key), std::move(merged)).first;
        }
        s = it->second;
      }
      const Lit w = At(s, m - ((t >> p) & 1));
      sink.Add({~w, Lit::Negative(term.var)});
    }
  }
  if (stats) {
    stats->totalizer_nodes = totalizers.distinct_nodes();
    stats->naive_totalizer_nodes = totalizers.naive_nodes();
  }
  return pool.num_vars() - before;
}

}  // namespace pbamo
