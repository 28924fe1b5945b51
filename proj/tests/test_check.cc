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

#include <gtest/gtest.h>

#include "pbamo/encode.hpp"
#include "pbamo/harness.hpp"
#include "pbamo/oracle.hpp"
#include "pbamo/propagator.hpp"
#include "pbamo/text_format.hpp"

namespace pbamo {
namespace {

Lit P(int v) { return Lit::Positive(Var{v}); }
Lit N(int v) { return Lit::Negative(Var{v}); }

bool BruteSat(const ClauseSink& cnf, int n) {
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& c : cnf.clauses()) {
      bool sat = false;
      for (Lit l : c) sat = sat || (((mask >> (l.var().index - 1)) & 1) != l.negated());
      ok = ok && sat;
    }
    if (ok) return true;
  }
  return false;
}

TEST(Propagator, UnitChainAndBacktrack) {
  ClauseSink cnf;
  cnf.Add({N(1), P(2)});
  cnf.Add({N(2), P(3)});
  cnf.Add({N(3), N(4)});
  Propagator p(cnf, 4);
  EXPECT_FALSE(p.conflict());
  p.NewLevel();
  ASSERT_TRUE(p.Assign(P(1)));
  EXPECT_EQ(p.value(P(3)), Value::kTrue);
  EXPECT_EQ(p.value(P(4)), Value::kFalse);
  EXPECT_FALSE(p.Assign(P(4)));
  EXPECT_TRUE(p.conflict());
  p.Backtrack(0);
  EXPECT_FALSE(p.conflict());
  EXPECT_EQ(p.value(Var{3}), Value::kUnassigned);
  EXPECT_TRUE(p.trail().empty());
}

TEST(Propagator, RootUnitsAndConflicts) {
  ClauseSink cnf;
  cnf.Add({P(1)});
  cnf.Add({N(1), P(2)});
  Propagator p(cnf, 2);
  EXPECT_EQ(p.value(P(2)), Value::kTrue);
  ClauseSink bad;
  bad.Add({P(1)});
  bad.Add({N(1)});
  Propagator q(bad, 1);
  EXPECT_TRUE(q.conflict());
}

TEST(Solver, AgreesWithBruteForce) {
  Rng rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = static_cast<int>(UniformInt(rng, 3, 10));
    const int m = static_cast<int>(UniformInt(rng, 1, 5 * n));
    ClauseSink cnf;
    for (int i = 0; i < m; ++i) {
      std::vector<Lit> c;
      for (int j = 0; j < 3; ++j) {
        Lit l = P(static_cast<int>(UniformInt(rng, 1, n)));
        c.push_back(UniformInt(rng, 0, 1) ? l : ~l);
      }
      cnf.Add(c);
    }
    Solver s(cnf, n);
    const bool sat = s.Solve() == Solver::Result::kSat;
    ASSERT_EQ(sat, BruteSat(cnf, n)) << "iteration " << iter;
    if (!sat) continue;
    for (const auto& c : cnf.clauses()) {
      bool ok = false;
      for (Lit l : c) ok = ok || (s.model(l.var()) == Value::kTrue) != l.negated();
      EXPECT_TRUE(ok);
    }
  }
}

TEST(Solver, Assumptions) {
  ClauseSink cnf;
  cnf.Add({N(1), P(2)});
  cnf.Add({N(2), N(3)});
  Solver s(cnf, 3);
  std::vector<Lit> a{P(1), P(3)};
  EXPECT_EQ(s.Solve(a), Solver::Result::kUnsat);
  std::vector<Lit> b{P(1)};
  EXPECT_EQ(s.Solve(b), Solver::Result::kSat);
  EXPECT_EQ(s.model(Var{3}), Value::kFalse);
  EXPECT_EQ(s.Solve(), Solver::Result::kSat);
}

TEST(Solver, PigeonholeIsUnsat) {
  // 5 pigeons, 4 holes.
  ClauseSink cnf;
  auto x = [](int p, int h) { return P(p * 4 + h + 1); };
  for (int p = 0; p < 5; ++p) {
    cnf.Add({x(p, 0), x(p, 1), x(p, 2), x(p, 3)});
  }
  for (int h = 0; h < 4; ++h) {
    for (int p = 0; p < 5; ++p) {
      for (int q = p + 1; q < 5; ++q) cnf.Add({~x(p, h), ~x(q, h)});
    }
  }
  Solver s(cnf, 20);
  EXPECT_EQ(s.Solve(), Solver::Result::kUnsat);
}

TEST(Oracle, ForcedAndExtendible) {
  // 2x1 + 3x2 + 4x3 + 7x4 <= 8 with {x1,x2},{x3,x4}
  PbConstraint c{{{2, Var{1}}, {3, Var{2}}, {4, Var{3}}, {7, Var{4}}},
                 Op::kLe, 8};
  AmoPartition part{{{Var{1}, Var{2}}, {Var{3}, Var{4}}}};
  SemanticsOracle o(c, part);
  Assignment a(5, Value::kUnassigned);
  EXPECT_TRUE(o.Extendible(a));
  EXPECT_EQ(o.Forced(a, Var{4}), Value::kUnassigned);
  a[1] = Value::kTrue;
  EXPECT_EQ(o.Forced(a, Var{4}), Value::kFalse);
  EXPECT_EQ(o.Forced(a, Var{2}), Value::kFalse);
  EXPECT_EQ(o.Forced(a, Var{3}), Value::kUnassigned);
  a[4] = Value::kTrue;
  EXPECT_FALSE(o.Extendible(a));
  Assignment b(5, Value::kUnassigned);
  b[1] = b[2] = Value::kTrue;  // violates the group
  EXPECT_FALSE(o.Extendible(b));
}

TEST(Oracle, BruteForceSolve) {
  Instance sat = ParseInstanceString(
      "eo: a b ;\neo: c d ;\n3 a 1 b 2 c 5 d <= 3 ;\n");
  auto m = SolveBruteForce(sat);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(SatisfiesInstance(sat, *m));
  EXPECT_EQ((*m)[2], Value::kTrue);
  EXPECT_EQ((*m)[3], Value::kTrue);
  Instance unsat = ParseInstanceString("eo: a b ;\n3 a 4 b <= 2 ;\n");
  EXPECT_FALSE(SolveBruteForce(unsat).has_value());
  Instance eq = ParseInstanceString("1 a 1 b 1 c = 2 ;\n-1 a > -1 ;\n");
  auto e = SolveBruteForce(eq);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ((*e)[1], Value::kFalse);
}

TEST(Encodings, Table) {
  EXPECT_EQ(AllEncodings().size(), 16u);
  for (Encoding e : AllEncodings()) {
    EXPECT_EQ(ParseEncoding(EncodingName(e)), e);
    EXPECT_FALSE(IsAmoAware(PbCounterpart(e)));
    EXPECT_EQ(FamilyOf(e), FamilyOf(PbCounterpart(e)));
    EXPECT_EQ(ClaimedStrength(e), ClaimedStrength(PbCounterpart(e)));
  }
  EXPECT_EQ(PbCounterpart(Encoding::kRggt), Encoding::kRgt);
  EXPECT_EQ(PbCounterpart(Encoding::kGgtd), Encoding::kGtd);
  EXPECT_EQ(ClaimedStrength(Encoding::kGgpw), Strength::kConsistencyChecking);
  EXPECT_EQ(ClaimedStrength(Encoding::kGmto), Strength::kNone);
  EXPECT_FALSE(ParseEncoding("xyz").has_value());
}

TEST(Encodings, CompileKeepsNamedVariablesFirst) {
  Instance inst = ParseInstanceString(
      "amo: a b c ;\n2 a 3 b 4 c 5 d <= 6 ;\n");
  CompiledInstance ci = CompileInstance(inst, Encoding::kRggt, {});
  EXPECT_GE(ci.pool.num_vars(), 4);
  EXPECT_EQ(ci.pool.Lookup("a").index, 1);
  EXPECT_EQ(ci.pool.Lookup("d").index, 4);
  EXPECT_GT(ci.pb.clauses, 0);
  EXPECT_EQ(ci.amo.clauses, 3);
}

class EncodingTest : public ::testing::TestWithParam<Encoding> {};

TEST_P(EncodingTest, ModelsMatchOracle) {
  Rng rng(41);
  RandomInstanceSpec spec;
  spec.max_vars = 9;
  spec.mixed = true;
  for (int i = 0; i < 60; ++i) {
    auto [c, part] = RandomCheckInstance(rng, spec);
    CheckFormula f = BuildCheckFormula(c, part, GetParam());
    SemanticsOracle oracle(c, part);
    CheckReport r = CheckModels(f.cnf, f.pool.num_vars(), oracle);
    ASSERT_TRUE(r.ok) << r.failure;
  }
}

TEST_P(EncodingTest, ClaimedPropagationStrength) {
  Rng rng(43);
  RandomInstanceSpec spec;
  spec.max_vars = 10;
  for (int i = 0; i < 40; ++i) {
    auto [c, part] = RandomCheckInstance(rng, spec);
    CheckFormula f = BuildCheckFormula(c, part, GetParam());
    SemanticsOracle oracle(c, part);
    CheckReport r;
    switch (ClaimedStrength(GetParam())) {
      case Strength::kGac:
        r = CheckGac(f.cnf, f.pool.num_vars(), oracle, 30, rng);
        break;
      case Strength::kConsistencyChecking:
        r = CheckCc(f.cnf, f.pool.num_vars(), oracle, 30, rng);
        break;
      case Strength::kNone:
        return;
    }
    ASSERT_TRUE(r.ok) << r.failure;
  }
}

INSTANTIATE_TEST_SUITE_P(
    All, EncodingTest, ::testing::ValuesIn(AllEncodings()),
    [](const ::testing::TestParamInfo<Encoding>& info) {
      return std::string(EncodingName(info.param));
    });

TEST(Harness, DetectsDroppedClause) {
  // Removing the root unit of the decision diagram breaks soundness.
  PbConstraint c{{{2, Var{1}}, {3, Var{2}}, {4, Var{3}}, {7, Var{4}}},
                 Op::kLe, 8};
  AmoPartition part{{{Var{1}, Var{2}}, {Var{3}, Var{4}}}};
  CheckFormula f = BuildCheckFormula(c, part, Encoding::kMdd);
  SemanticsOracle oracle(c, part);
  ASSERT_TRUE(CheckModels(f.cnf, f.pool.num_vars(), oracle).ok);
  size_t root = 0;
  for (size_t i = 0; i < f.pb_clauses; ++i) {
    if (f.cnf.clauses()[i].size() == 1) root = i;
  }
  f.cnf.Erase(root);
  EXPECT_FALSE(CheckModels(f.cnf, f.pool.num_vars(), oracle).ok);
}

TEST(Harness, GacCheckFindsWeakPropagation) {
  // With no clauses at all, setting x1 does not propagate ~x2 although the
  // group requires it.
  PbConstraint c{{{1, Var{1}}, {1, Var{2}}}, Op::kLe, 2};
  AmoPartition part{{{Var{1}, Var{2}}}};
  SemanticsOracle oracle(c, part);
  ClauseSink empty;
  std::vector<Assignment> partials;
  Assignment a(3, Value::kUnassigned);
  a[1] = Value::kTrue;
  partials.push_back(a);
  EXPECT_FALSE(CheckGacOn(empty, 2, oracle, partials).ok);
  Assignment b(3, Value::kUnassigned);
  b[1] = b[2] = Value::kTrue;
  EXPECT_FALSE(CheckCcOn(empty, 2, oracle, {b}).ok);
}

TEST(Harness, SampledAssignmentsRespectGroups) {
  Rng rng(3);
  AmoPartition part{{{Var{1}, Var{2}, Var{3}}, {Var{4}}}};
  for (int i = 0; i < 50; ++i) {
    Assignment a = SampleGroupAssignment(part, 4, rng);
    int on = 0;
    for (int v = 1; v <= 3; ++v) on += a[v] == Value::kTrue;
    EXPECT_LE(on, 1);
  }
}

}  // namespace
}  // namespace pbamo
