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

#include "pbamo/amo.hpp"

#include <cmath>
#include <vector>

namespace pbamo {

namespace {

void Pairwise(std::span<const Lit> x, ClauseSink& sink) {
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = i + 1; j < x.size(); ++j) sink.Add({~x[i], ~x[j]});
  }
}

// Regular (ladder) encoding: s_i means "some x_j with j <= i is true".
void Ladder(std::span<const Lit> x, VarPool& pool, ClauseSink& sink) {
  const size_t n = x.size();
  std::vector<Lit> s(n - 1);
  for (auto& l : s) l = pool.FreshLit();
  for (size_t i = 0; i + 1 < n; ++i) {
    sink.Add({~x[i], s[i]});
    if (i + 1 < n - 1) sink.Add({~s[i], s[i + 1]});
    sink.Add({~s[i], ~x[i + 1]});
  }
}

void TwoProduct(std::span<const Lit> x, VarPool& pool, ClauseSink& sink) {
  const size_t n = x.size();
  size_t p = static_cast<size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  size_t q = (n + p - 1) / p;
  std::vector<Lit> u(p), v(q);
  for (auto& l : u) l = pool.FreshLit();
  for (auto& l : v) l = pool.FreshLit();
  for (size_t i = 0; i < n; ++i) {
    sink.Add({~x[i], u[i / q]});
    sink.Add({~x[i], v[i % q]});
  }
  Pairwise(u, sink);
  Pairwise(v, sink);
}

}  // namespace

void EncodeAmo(std::span<const Lit> lits, AmoEncoding encoding, VarPool& pool,
               ClauseSink& sink) {
  if (lits.size() <= 1) return;
  if (encoding == AmoEncoding::kAuto) {
    encoding = lits.size() <= kAutoPairwiseLimit ? AmoEncoding::kPairwise
                                                 : AmoEncoding::kLadder;
  }
  switch (encoding) {
    case AmoEncoding::kPairwise: Pairwise(lits, sink); break;
    case AmoEncoding::kLadder: Ladder(lits, pool, sink); break;
    case AmoEncoding::kTwoProduct: TwoProduct(lits, pool, sink); break;
    case AmoEncoding::kAuto: break;
  }
}

void EncodeAlo(std::span<const Lit> lits, ClauseSink& sink) {
  sink.Add(lits);
}

}  // namespace pbamo
