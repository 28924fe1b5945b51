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

#ifndef PBAMO_COUNTER_HPP_
#define PBAMO_COUNTER_HPP_

#include <cstdint>

#include "pbamo/cnf.hpp"
#include "pbamo/model.hpp"

namespace pbamo {

// Generalized sequential weight counter. With singleton groups this is the
// plain sequential weight counter. Returns the number of aux variables.
int64_t EncodeGswc(const NormalizedPbAmo& n, VarPool& pool, ClauseSink& sink);

}  // namespace pbamo

#endif  // PBAMO_COUNTER_HPP_
