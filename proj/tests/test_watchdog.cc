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

#include <set>

#include <gtest/gtest.h>

#include "pbamo/amo.hpp"
#include "pbamo/harness.hpp"
#include "pbamo/oracle.hpp"
#include "pbamo/watchdog.hpp"
#include "test_util.hpp"

namespace pbamo {
namespace {

using test::MakeNormalized;

Lit P(int v) { return Lit::Positive(Var{v}); }

NormalizedPbAmo FourTerms() {
  // 2x1 + 3x2 + 4x3 + 7x4 <= 8 with {x1,x2},{x3,x4}
  return MakeNormalized({{{2, 1}, {3, 2}}, {{4, 3}, {7, 4}}}, 8);
}

std::set<int32_t> Codes(const std::vector<Lit>& lits) {
  std::set<int32_t> out;
  for (Lit l : lits) out.insert(l.code());
  return out;
}

TEST(Watchdog, Params) {
  WatchdogParams w = ComputeWatchdogParams(7, 8);
  EXPECT_EQ(w.p, 2);
  EXPECT_EQ(w.t, 3);
  EXPECT_EQ(w.m, 3);
  w = ComputeWatchdogParams(8, 15);
  EXPECT_EQ(w.p, 3);
  EXPECT_EQ(w.t, 0);
  EXPECT_EQ(w.m, 2);
  w = ComputeWatchdogParams(1, 4);
  EXPECT_EQ(w.p, 0);
  EXPECT_EQ(w.t, 0);
  EXPECT_EQ(w.m, 5);
}

TEST(Watchdog, BucketsOfPlainConstraint) {
  VarPool pool;
  pool.ReserveBlock(4);
  ClauseSink sink;
  auto b = WatchdogBuckets(test::Singletons(FourTerms()), pool, sink);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(Codes(b[0].lits), (std::set<int32_t>{2, 4}));
  EXPECT_TRUE(b[0].constant);
  EXPECT_EQ(Codes(b[1].lits), (std::set<int32_t>{1, 2, 4}));
  EXPECT_TRUE(b[1].constant);
  EXPECT_EQ(Codes(b[2].lits), (std::set<int32_t>{3, 4}));
  EXPECT_FALSE(b[2].constant);
  EXPECT_EQ(pool.num_vars(), 4);
  EXPECT_EQ(sink.num_clauses(), 0);
}

TEST(Watchdog, BucketsWithGroups) {
  VarPool pool;
  pool.ReserveBlock(4);
  ClauseSink sink;
  auto b = WatchdogBuckets(FourTerms(), pool, sink);
  ASSERT_EQ(b.size(), 3u);
  // Bit 0: only x2 and x4 have it, so they stand for their groups.
  EXPECT_EQ(Codes(b[0].lits), (std::set<int32_t>{2, 4}));
  // Bit 1: y_{1,1} covers x1 and x2; x4 alone in the second group.
  ASSERT_EQ(b[1].lits.size(), 2u);
  EXPECT_EQ(b[1].lits[1], P(4));
  // Bit 2: y_{2,2} covers x3 and x4.
  ASSERT_EQ(b[2].lits.size(), 1u);
  EXPECT_EQ(pool.num_vars(), 6);
  EXPECT_EQ(sink.num_clauses(), 4);  // x -> y for the two fresh variables
}

TEST(Watchdog, HalfTakesEvenOrOddPositions) {
  Unary s{P(1), P(2), P(3), P(4), P(5)};
  // Without a carried constant: floor(count / 2) >= j iff count >= 2j.
  EXPECT_EQ(Half(s, 0), (Unary{P(2), P(4)}));
  // With one: floor((count + 1) / 2) >= j iff count >= 2j - 1.
  EXPECT_EQ(Half(s, 1), (Unary{P(1), P(3), P(5)}));
}

TEST(Watchdog, TotalizerCountsExactly) {
  for (int n = 1; n <= 7; ++n) {
    VarPool pool;
    std::vector<Lit> x;
    for (int i = 0; i < n; ++i) x.push_back(pool.FreshLit());
    ClauseSink sink;
    Unary u = Totalize(x, pool, sink);
    ASSERT_EQ(u.size(), static_cast<size_t>(n));
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      Propagator p(sink, pool.num_vars());
      p.NewLevel();
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1) {
          ASSERT_TRUE(p.Assign(x[i]));
        }
      }
      const int count = __builtin_popcount(mask);
      for (int j = 0; j < count; ++j) EXPECT_EQ(p.value(u[j]), Value::kTrue);
    }
  }
}

TEST(Glpw, SharingOnEightGroupBucket) {
  VarPool pool;
  std::vector<Lit> leaves;
  for (int i = 0; i < 8; ++i) leaves.push_back(pool.FreshLit());
  ClauseSink sink;
  SharedTotalizers t(pool, sink);
  for (int excluded = 0; excluded < 8; ++excluded) {
    EXPECT_EQ(t.Build(leaves, excluded).size(), 7u);
  }
  EXPECT_EQ(t.distinct_nodes(), 30);
  EXPECT_EQ(t.naive_nodes(), 104);
}

TEST(Glpw, StatsReportSharing) {
  NormalizedPbAmo n;
  n.k = 20;
  for (int i = 0; i < 8; ++i) n.groups.push_back({Term{5, Var{i + 1}}});
  VarPool pool;
  pool.ReserveBlock(8);
  ClauseSink sink;
  GlpwStats stats;
  EncodeGlpw(n, pool, sink, &stats);
  EXPECT_LT(stats.totalizer_nodes, stats.naive_totalizer_nodes);
}

NormalizedPbAmo RandomNormalized(Rng& rng, int max_groups) {
  for (;;) {
    NormalizedPbAmo n;
    int var = 1;
    const int groups = static_cast<int>(UniformInt(rng, 2, max_groups));
    for (int g = 0; g < groups; ++g) {
      std::vector<Term> terms;
      std::vector<int64_t> used;
      const int size = static_cast<int>(UniformInt(rng, 1, 3));
      for (int j = 0; j < size; ++j) {
        int64_t q = UniformInt(rng, 1, 20);
        if (std::find(used.begin(), used.end(), q) != used.end()) continue;
        used.push_back(q);
        terms.push_back(Term{q, Var{var++}});
      }
      n.groups.push_back(terms);
    }
    n.k = UniformInt(rng, 1, n.SumOfMaxima() - 1);
    bool ok = true;
    for (auto& g : n.groups) {
      for (auto& t : g) ok = ok && t.coef <= n.k;
    }
    if (ok) return n;
  }
}

TEST(Watchdog, EncodersAreExact) {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    NormalizedPbAmo n = RandomNormalized(rng, 4);
    EXPECT_TRUE(test::EncodesExactly(n, [](auto& m, auto& p, auto& s) {
      EncodeGgpw(m, p, s);
    })) << "ggpw instance " << i;
    EXPECT_TRUE(test::EncodesExactly(n, [](auto& m, auto& p, auto& s) {
      EncodeGlpw(m, p, s);
    })) << "glpw instance " << i;
  }
}

// UP sets the output to 1 exactly on partial assignments (respecting the
// groups) that cannot be extended.
TEST(Watchdog, OutputPropagatesIffNotExtendible) {
  Rng rng(29);
  for (int i = 0; i < 60; ++i) {
    NormalizedPbAmo n = RandomNormalized(rng, 5);
    VarPool pool;
    const int32_t nv = test::MaxVar(n);
    pool.ReserveBlock(nv);
    ClauseSink cnf;
    Lit w;
    EncodeGgpw(n, pool, cnf, &w, false);
    AmoPartition part = ToPartition(n);
    for (const auto& g : part.groups) {
      std::vector<Lit> lits;
      for (Var v : g) lits.push_back(Lit::Positive(v));
      EncodeAmo(lits, AmoEncoding::kPairwise, pool, cnf);
    }
    SemanticsOracle oracle(ToConstraint(n), part);
    for (int s = 0; s < 40; ++s) {
      Assignment a = SampleGroupAssignment(part, nv, rng);
      Propagator p(cnf, pool.num_vars());
      p.NewLevel();
      bool ok = true;
      for (int32_t v = 1; v <= nv && ok; ++v) {
        if (a[v] == Value::kUnassigned) continue;
        ok = p.Assign(a[v] == Value::kTrue ? P(v) : ~P(v));
      }
      ASSERT_TRUE(ok);
      const bool fired = w.is_true() || (!w.is_false() &&
                                         p.value(w) == Value::kTrue);
      EXPECT_EQ(fired, !oracle.Extendible(a)) << "instance " << i;
    }
  }
}

}  // namespace
}  // namespace pbamo
