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

#ifndef PBAMO_MMKP_HPP_
#define PBAMO_MMKP_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pbamo/encode.hpp"
#include "pbamo/harness.hpp"
#include "pbamo/model.hpp"

namespace pbamo {

struct MmkpSpec {
  int l = 3;          // PB constraints
  int n = 4;          // groups
  int m = 3;          // group size
  int64_t q = 10;     // coefficients in [1, q]
  int64_t k_mean = 15;
  double half_width = 0.1;  // K_k uniform in mean * [1 - hw, 1 + hw]
};

struct MmkpPreset {
  const char* name;
  int l, n, m;
  int64_t q;
  int families;
  int64_t k_first, k_last;  // capacity means of the first and last family
};

const std::vector<MmkpPreset>& MmkpPresets();
const MmkpPreset& FindMmkpPreset(std::string_view name);

// Scales N by `scale` (at least 2 groups) and the capacity mean with it.
// `family` is 0-based.
MmkpSpec PresetSpec(const MmkpPreset& preset, double scale, int family);

// Variables x_<group>_<item>, exactly-one groups, L constraints <= K_k.
Instance GenerateMmkp(const MmkpSpec& spec, Rng& rng);

struct SizeRow {
  Encoding encoding;
  double vars = 0;     // per PB constraint
  double clauses = 0;  // per PB constraint
  double gen_ms = 0;   // per PB constraint
};

// Per-constraint averages of the PB part. Group clauses are excluded
// unless `include_groups`.
std::vector<SizeRow> SizeReport(const Instance& instance,
                                const std::vector<Encoding>& encodings,
                                const EncodeOptions& options,
                                bool include_groups = false);

void WriteSizeCsvHeader(std::ostream& out);
void WriteSizeCsv(std::ostream& out, const std::string& label,
                  const std::vector<SizeRow>& rows);

}  // namespace pbamo

#endif  // PBAMO_MMKP_HPP_
