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

#include "pbamo/counter.hpp"

#include <vector>

namespace pbamo {

int64_t EncodeGswc(const NormalizedPbAmo& n, VarPool& pool, ClauseSink& sink) {
  const size_t groups = n.num_groups();
  const int64_t k = n.k;
  // s[i][j], i in 1..N-1, j in 1..K; s[0][*] is false.
  std::vector<std::vector<Lit>> s(groups);
  s[0].assign(static_cast<size_t>(k) + 1, Lit::False());
  for (size_t i = 1; i < groups; ++i) {
    s[i].resize(static_cast<size_t>(k) + 1);
    for (int64_t j = 1; j <= k; ++j) s[i][j] = pool.FreshLit();
  }
  for (size_t i = 1; i <= groups; ++i) {
    const auto& group = n.groups[i - 1];
    const auto& prev = s[i - 1];
    const bool has_out = i < groups;
    if (has_out) {
      const auto& cur = s[i];
      if (i >= 2) {
        for (int64_t j = 1; j <= k; ++j) sink.Add({~prev[j], cur[j]});
      }
      for (const Term& t : group) {
        const Lit x = Lit::Positive(t.var);
        for (int64_t j = 1; j <= t.coef; ++j) sink.Add({~x, cur[j]});
        if (i >= 2) {
          for (int64_t j = 1; j <= k - t.coef; ++j) {
            sink.Add({~prev[j], ~x, cur[j + t.coef]});
          }
        }
      }
    }
    if (i >= 2) {
      for (const Term& t : group) {
        sink.Add({~prev[k + 1 - t.coef], Lit::Negative(t.var)});
      }
    }
  }
  return static_cast<int64_t>(groups - 1) * k;
}

}  // namespace pbamo
