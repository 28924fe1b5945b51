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

#include <sstream>

#include <gtest/gtest.h>

#include "pbamo/cnf.hpp"

namespace pbamo {
namespace {

Lit P(int v) { return Lit::Positive(Var{v}); }
Lit N(int v) { return Lit::Negative(Var{v}); }

TEST(Lit, Negation) {
  EXPECT_EQ(~P(3), N(3));
  EXPECT_EQ((~N(3)).code(), 3);
  EXPECT_TRUE(N(3).negated());
  EXPECT_EQ(N(3).var().index, 3);
  EXPECT_EQ(~Lit::True(), Lit::False());
  EXPECT_TRUE(Lit::True().is_constant());
  EXPECT_FALSE(Lit().valid());
  EXPECT_EQ(Lit::FromDimacs(-7), N(7));
}

TEST(VarPool, NamedAndFresh) {
  VarPool pool;
  Var a = pool.Named("a");
  Var b = pool.Named("b");
  EXPECT_EQ(pool.Named("a"), a);
  EXPECT_EQ(a.index, 1);
  EXPECT_EQ(b.index, 2);
  EXPECT_EQ(pool.Fresh().index, 3);
  EXPECT_EQ(pool.Lookup("b"), b);
  EXPECT_EQ(pool.Lookup("zz").index, 0);
  Var first = pool.ReserveBlock(5);
  EXPECT_EQ(first.index, 4);
  EXPECT_EQ(pool.num_vars(), 8);
  ASSERT_EQ(pool.names().size(), 2u);
}

TEST(ClauseSink, SimplifiesOnAdd) {
  ClauseSink s;
  s.Add({P(1), N(2), P(1)});
  ASSERT_EQ(s.clauses().size(), 1u);
  EXPECT_EQ(s.clauses()[0].size(), 2u);
  s.Add({P(1), N(1)});          // tautology
  s.Add({P(4), Lit::True()});   // satisfied
  s.Add({P(5), Lit::False()});  // reduces to a unit
  EXPECT_EQ(s.num_clauses(), 2);
  EXPECT_EQ(s.max_var(), 5);
  EXPECT_FALSE(s.unsat());
  s.Add({Lit::False()});
  EXPECT_TRUE(s.unsat());
  EXPECT_EQ(s.num_clauses(), 3);
}

TEST(ClauseSink, EraseAndAppend) {
  ClauseSink a, b;
  a.Add({P(1), P(2)});
  a.Add({N(1)});
  b.Add({P(3)});
  a.Append(b);
  EXPECT_EQ(a.num_clauses(), 3);
  a.Erase(0);
  EXPECT_EQ(a.clauses()[0], std::vector<Lit>{N(1)});
  a.Clear();
  EXPECT_EQ(a.num_clauses(), 0);
}

TEST(ClauseSink, WritesDimacs) {
  ClauseSink s;
  s.Add({P(1), N(2)});
  s.Add({P(3)});
  std::ostringstream out;
  s.WriteDimacs(out, 4);
  EXPECT_EQ(out.str(), "p cnf 4 2\n1 -2 0\n3 0\n");
}

TEST(ClauseSink, WritesEmptyClauseWhenUnsat) {
  ClauseSink s;
  s.Add({});
  std::ostringstream out;
  s.WriteDimacs(out, 0);
  EXPECT_NE(out.str().find("\n0\n"), std::string::npos);
}

}  // namespace
}  // namespace pbamo
