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

#include "pbamo/mmkp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pbamo {

const std::vector<MmkpPreset>& MmkpPresets() {
  static const std::vector<MmkpPreset> presets = {
      {"mmkp1", 10, 15, 10, 1000, 100, 1000, 14000},
      {"mmkp2", 10, 15, 10, 60, 100, 100, 800},
      {"mmkp3", 50, 15, 5, 10, 20, 65, 100},
  };
  return presets;
}

const MmkpPreset& FindMmkpPreset(std::string_view name) {
  for (const auto& p : MmkpPresets()) {
    if (name == p.name) return p;
  }
  throw std::invalid_argument("unknown preset: " + std::string(name));
}

MmkpSpec PresetSpec(const MmkpPreset& preset, double scale, int family) {
  if (scale <= 0) throw std::invalid_argument("scale must be positive");
  if (family < 0 || family >= preset.families) {
    throw std::invalid_argument("family out of range");
  }
  MmkpSpec s;
  s.l = preset.l;
  s.m = preset.m;
  s.q = preset.q;
  s.n = std::max(2, static_cast<int>(std::lround(preset.n * scale)));
  const double t = preset.families > 1
                       ? static_cast<double>(family) / (preset.families - 1)
                       : 0.0;
  const double mean = preset.k_first + t * (preset.k_last - preset.k_first);
  s.k_mean = std::max<int64_t>(
      1, std::llround(mean * s.n / static_cast<double>(preset.n)));
  return s;
}

Instance GenerateMmkp(const MmkpSpec& spec, Rng& rng) {
  Instance inst;
  for (int i = 1; i <= spec.n; ++i) {
    AmoGroup g;
    g.exactly_one = true;
    for (int j = 1; j <= spec.m; ++j) {
      inst.names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
      g.vars.push_back(Var{inst.num_vars()});
    }
    inst.groups.push_back(std::move(g));
  }
  const int64_t lo = std::max<int64_t>(
      1, std::llround(spec.k_mean * (1.0 - spec.half_width)));
  const int64_t hi =
      std::max(lo, static_cast<int64_t>(
                       std::llround(spec.k_mean * (1.0 + spec.half_width))));
  for (int k = 0; k < spec.l; ++k) {
    PbConstraint c;
    for (int v = 1; v <= inst.num_vars(); ++v) {
      c.terms.push_back(Term{UniformInt(rng, 1, spec.q), Var{v}});
    }
    c.op = Op::kLe;
    c.rhs = UniformInt(rng, lo, hi);
    inst.constraints.push_back(std::move(c));
  }
  return inst;
}

std::vector<SizeRow> SizeReport(const Instance& instance,
                                const std::vector<Encoding>& encodings,
                                const EncodeOptions& options,
                                bool include_groups) {
  std::vector<SizeRow> rows;
  const auto declared = instance.GroupVars();
  const double count =
      std::max<size_t>(1, instance.constraints.size());
  for (Encoding e : encodings) {
    EncodeStats total;
    for (const PbConstraint& c : instance.constraints) {
      VarPool pool;
      pool.ReserveBlock(instance.num_vars());
      ClauseSink sink;
      total += EncodeConstraint(c, RestrictPartition(declared, c), e, options,
                                pool, sink);
    }
    if (include_groups) {
      VarPool pool;
      pool.ReserveBlock(instance.num_vars());
      ClauseSink sink;
      total += EncodeGroups(instance.groups, options.amo, pool, sink);
    }
    rows.push_back(SizeRow{e, total.vars / count, total.clauses / count,
                           total.gen_ms / count});
  }
  return rows;
}

void WriteSizeCsvHeader(std::ostream& out) {
  out << "instance,encoding,vars,clauses,gen_ms\n";
}

void WriteSizeCsv(std::ostream& out, const std::string& label,
                  const std::vector<SizeRow>& rows) {
  for (const SizeRow& r : rows) {
    out << label << ',' << EncodingName(r.encoding) << ',' << r.vars << ','
        << r.clauses << ',' << r.gen_ms << '\n';
  }
}

}  // namespace pbamo
