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

#ifndef PBAMO_AMO_HPP_
#define PBAMO_AMO_HPP_

#include <span>

#include "pbamo/cnf.hpp"

namespace pbamo {

enum class AmoEncoding { kAuto, kPairwise, kLadder, kTwoProduct };

// Pairwise up to this size, ladder above it, under kAuto.
inline constexpr size_t kAutoPairwiseLimit = 5;

void EncodeAmo(std::span<const Lit> lits, AmoEncoding encoding, VarPool& pool,
               ClauseSink& sink);
void EncodeAlo(std::span<const Lit> lits, ClauseSink& sink);

}  // namespace pbamo

#endif  // PBAMO_AMO_HPP_
