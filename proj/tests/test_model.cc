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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "pbamo/harness.hpp"
#include "pbamo/model.hpp"
#include "pbamo/oracle.hpp"
#include "pbamo/propagator.hpp"
#include "test_util.hpp"

namespace pbamo {
namespace {

Lit P(int v) { return Lit::Positive(Var{v}); }
Lit N(int v) { return Lit::Negative(Var{v}); }

PbConstraint Le(std::vector<Term> terms, int64_t k, Op op = Op::kLe) {
  return PbConstraint{std::move(terms), op, k};
}

TEST(Normalize, NegativeCoefficientRewrite) {
  // 4x1 - 7x2 + 5x3 + 8x4 <= 15 with {x1,x2},{x3},{x4}.
  VarPool pool;
  pool.ReserveBlock(4);
  ClauseSink sink;
  PbConstraint c = Le({{4, Var{1}}, {-7, Var{2}}, {5, Var{3}}, {8, Var{4}}}, 15);
  AmoPartition part{{{Var{1}, Var{2}}, {Var{3}}, {Var{4}}}};
  auto out = Normalize(c, part, pool, sink);
  ASSERT_EQ(out.size(), 1u);
  const NormalizedPbAmo& n = out[0];
  EXPECT_EQ(n.k, 22);
  ASSERT_EQ(n.groups.size(), 3u);
  const Var y{5};
  EXPECT_EQ(n.groups[0], (std::vector<Term>{{11, Var{1}}, {7, y}}));
  EXPECT_EQ(n.groups[1], (std::vector<Term>{{5, Var{3}}}));
  EXPECT_EQ(n.groups[2], (std::vector<Term>{{8, Var{4}}}));
  // y <-> ~x1 & ~x2
  std::set<std::vector<Lit>> got;
  for (auto cl : sink.clauses()) {
    std::sort(cl.begin(), cl.end());
    got.insert(cl);
  }
  std::set<std::vector<Lit>> want;
  for (std::vector<Lit> cl : {std::vector<Lit>{N(1), N(5)},
                              std::vector<Lit>{N(2), N(5)},
                              std::vector<Lit>{P(1), P(2), P(5)}}) {
    std::sort(cl.begin(), cl.end());
    want.insert(cl);
  }
  EXPECT_EQ(got, want);
  EXPECT_TRUE(n.WellFormed());
}

TEST(Normalize, OperatorForms) {
  VarPool pool;
  pool.ReserveBlock(3);
  AmoPartition part{{{Var{1}}, {Var{2}}, {Var{3}}}};
  std::vector<Term> t{{3, Var{1}}, {4, Var{2}}, {5, Var{3}}};
  {
    ClauseSink sink;
    auto out = Normalize(Le(t, 8, Op::kLt), part, pool, sink);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].k, 7);
  }
  {
    // 3x1 + 4x2 + 5x3 >= 9 becomes -3x1 - 4x2 - 5x3 <= -9, then shifted.
    ClauseSink sink;
    auto out = Normalize(Le(t, 9, Op::kGe), part, pool, sink);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_TRUE(out[0].WellFormed());
  }
  {
    ClauseSink sink;
    auto out = Normalize(Le(t, 7, Op::kEq), part, pool, sink);
    EXPECT_EQ(out.size(), 2u);
  }
}

TEST(Normalize, TrivialCases) {
  VarPool pool;
  pool.ReserveBlock(3);
  AmoPartition part{{{Var{1}}, {Var{2}}, {Var{3}}}};
  std::vector<Term> t{{3, Var{1}}, {4, Var{2}}, {5, Var{3}}};
  {
    ClauseSink sink;
    auto out = Normalize(Le(t, -1), part, pool, sink);
    EXPECT_TRUE(sink.unsat());
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].trivial, Triviality::kAlwaysFalse);
  }
  {
    ClauseSink sink;
    auto out = Normalize(Le(t, 0), part, pool, sink);
    EXPECT_EQ(sink.num_clauses(), 3);
    EXPECT_EQ(out[0].trivial, Triviality::kAlwaysTrue);
  }
  {
    ClauseSink sink;
    auto out = Normalize(Le(t, 12), part, pool, sink);
    EXPECT_EQ(sink.num_clauses(), 0);
    EXPECT_EQ(out[0].trivial, Triviality::kAlwaysTrue);
  }
  {
    // 5 > K: unit on x3, the rest is trivially true.
    ClauseSink sink;
    auto out = Normalize(Le(t, 4), part, pool, sink);
    ASSERT_EQ(sink.clauses().size(), 1u);
    EXPECT_EQ(sink.clauses()[0], std::vector<Lit>{N(3)});
    EXPECT_EQ(out[0].trivial, Triviality::kNone);
    EXPECT_EQ(out[0].num_groups(), 2u);
  }
}

TEST(Normalize, MergesEqualCoefficients) {
  VarPool pool;
  pool.ReserveBlock(4);
  ClauseSink sink;
  PbConstraint c = Le({{3, Var{1}}, {3, Var{2}}, {2, Var{3}}, {4, Var{4}}}, 5);
  AmoPartition part{{{Var{1}, Var{2}, Var{3}}, {Var{4}}}};
  auto out = Normalize(c, part, pool, sink);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(out[0].WellFormed());
  EXPECT_EQ(out[0].groups[0].size(), 2u);
  // x1 -> y, x2 -> y
  EXPECT_EQ(sink.num_clauses(), 2);
}

TEST(Normalize, RestrictPartitionRejectsOverlap) {
  PbConstraint c = Le({{1, Var{1}}, {1, Var{2}}}, 1);
  EXPECT_THROW(RestrictPartition({{Var{1}, Var{2}}, {Var{2}}}, c),
               std::invalid_argument);
  AmoPartition p = RestrictPartition({{Var{1}, Var{3}}}, c);
  ASSERT_EQ(p.groups.size(), 2u);
  EXPECT_EQ(p.groups[0], std::vector<Var>{Var{1}});
}

TEST(Normalize, CheckedArithmeticThrows) {
  EXPECT_THROW(CheckedAdd(INT64_MAX, 1), std::overflow_error);
  EXPECT_THROW(CheckedMul(INT64_MAX / 2, 3), std::overflow_error);
}

// Structural properties of every output, and semantic agreement with the
// input under the AMO constraints, over a random pool.
TEST(Normalize, PropertiesHoldOnFuzzPool) {
  Rng rng(7);
  RandomInstanceSpec spec;
  spec.max_vars = 8;
  spec.mixed = true;
  for (int iter = 0; iter < 400; ++iter) {
    auto [c, part] = RandomCheckInstance(rng, spec);
    VarPool pool;
    int32_t nv = 0;
    for (const Term& t : c.terms) nv = std::max(nv, t.var.index);
    pool.ReserveBlock(nv);
    ClauseSink sink;
    auto out = Normalize(c, part, pool, sink);
    for (const auto& n : out) {
      ASSERT_TRUE(n.WellFormed()) << "iteration " << iter;
      if (n.trivial != Triviality::kNone) continue;
      EXPECT_GT(n.k, 0);
      EXPECT_GT(n.num_groups(), 1u);
      EXPECT_GT(n.SumOfMaxima(), n.k);
      std::set<int32_t> vars;
      for (const auto& g : n.groups) {
        std::set<int64_t> coefs;
        for (const Term& t : g) {
          EXPECT_GT(t.coef, 0);
          EXPECT_LE(t.coef, n.k);
          EXPECT_TRUE(coefs.insert(t.coef).second);
          EXPECT_TRUE(vars.insert(t.var.index).second);
        }
      }
    }
    // Semantics: for every AMO-respecting assignment of the scope,
    // original holds iff the normalized system (with definitions) is
    // satisfiable.
    ClauseSink all = sink;
    std::vector<Lit> extra_vars;
    for (const auto& n : out) {
      if (n.trivial != Triviality::kNone) continue;
      for (const auto& g : n.groups) {
        std::vector<Lit> amo;
        for (const Term& t : g) amo.push_back(Lit::Positive(t.var));
        for (size_t a = 0; a < amo.size(); ++a) {
          for (size_t b = a + 1; b < amo.size(); ++b) {
            all.Add({~amo[a], ~amo[b]});
          }
        }
      }
    }
    const int32_t total = pool.num_vars();
    const int32_t aux = total - nv;
    ASSERT_LE(aux, 12);
    SemanticsOracle oracle(c, part);
    for (uint32_t mask = 0; mask < (1u << nv); ++mask) {
      Assignment a(static_cast<size_t>(nv) + 1, Value::kFalse);
      bool amo_ok = true;
      for (const auto& g : part.groups) {
        int on = 0;
        for (Var v : g) on += (mask >> (v.index - 1)) & 1;
        amo_ok = amo_ok && on <= 1;
      }
      if (!amo_ok) continue;
      for (int v = 1; v <= nv; ++v) {
        a[v] = (mask >> (v - 1)) & 1 ? Value::kTrue : Value::kFalse;
      }
      const bool want = oracle.Extendible(a);
      bool got = !all.unsat();
      if (got) {
        // Check each normalized constraint by enumerating aux values.
        got = false;
        for (uint32_t am = 0; am < (1u << aux) && !got; ++am) {
          std::vector<bool> val(static_cast<size_t>(total) + 1);
          for (int v = 1; v <= nv; ++v) val[v] = (mask >> (v - 1)) & 1;
          for (int v = nv + 1; v <= total; ++v) val[v] = (am >> (v - nv - 1)) & 1;
          bool ok = true;
          for (const auto& cl : all.clauses()) {
            bool sat = false;
            for (Lit l : cl) sat = sat || val[l.var().index] != l.negated();
            ok = ok && sat;
          }
          for (const auto& n : out) {
            if (n.trivial != Triviality::kNone || !ok) continue;
            int64_t lhs = 0;
            for (const auto& g : n.groups) {
              for (const Term& t : g) lhs += val[t.var.index] ? t.coef : 0;
            }
            ok = lhs <= n.k;
          }
          got = ok;
        }
      }
      ASSERT_EQ(got, want) << "iteration " << iter << " mask " << mask;
    }
  }
}

}  // namespace
}  // namespace pbamo
