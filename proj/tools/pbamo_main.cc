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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "pbamo/encode.hpp"
#include "pbamo/harness.hpp"
#include "pbamo/mmkp.hpp"
#include "pbamo/oracle.hpp"
#include "pbamo/solver_io.hpp"
#include "pbamo/text_format.hpp"

namespace {

using namespace pbamo;

uint64_t DefaultSeed() {
  const char* env = std::getenv("PBAMO_SEED");
  return env ? std::strtoull(env, nullptr, 10) : 1;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return ParseInstance(in);
}

Encoding RequireEncoding(const std::string& name) {
  auto e = ParseEncoding(name);
  if (!e) throw UsageError("unknown encoding: " + name);
  return *e;
}

std::vector<Encoding> EncodingList(const std::string& spec) {
  if (spec == "all") return AllEncodings();
  std::vector<Encoding> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(RequireEncoding(item));
  return out;
}

struct EncoderFlags {
  std::string encoding;
  std::string amo = "auto";
  std::string tree;
  std::string base;
};

void AddEncoderFlags(CLI::App* app, EncoderFlags& f) {
  app->add_option("--encoding", f.encoding, "PB encoding")->required();
  app->add_option("--amo-encoding", f.amo, "pairwise|ladder|two-product|auto");
  app->add_option("--tree", f.tree, "balanced|minratio (totalizer family)");
  app->add_option("--base", f.base, "mixed radix base, e.g. \"4,3\"");
}

EncodeOptions ToOptions(const EncoderFlags& f, Encoding e) {
  EncodeOptions o;
  if (f.amo == "pairwise") {
    o.amo = AmoEncoding::kPairwise;
  } else if (f.amo == "ladder") {
    o.amo = AmoEncoding::kLadder;
  } else if (f.amo == "two-product") {
    o.amo = AmoEncoding::kTwoProduct;
  } else if (f.amo != "auto") {
    throw UsageError("unknown AMO encoding: " + f.amo);
  }
  if (!f.tree.empty()) {
    if (FamilyOf(e) != Family::kTotalizer) {
      throw UsageError("--tree applies only to totalizer encodings");
    }
    if (f.tree == "balanced") {
      o.tree = TreeHeuristic::kBalanced;
    } else if (f.tree == "minratio") {
      o.tree = TreeHeuristic::kMinRatio;
    } else {
      throw UsageError("unknown tree heuristic: " + f.tree);
    }
  }
  if (!f.base.empty()) {
    if (FamilyOf(e) != Family::kModulo) {
      throw UsageError("--base applies only to modulo encodings");
    }
    std::vector<int64_t> base;
    std::stringstream ss(f.base);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int64_t v = std::stoll(item);
      if (v < 2) throw UsageError("base entries must be >= 2");
      base.push_back(v);
    }
    o.base = base;
  }
  return o;
}

void PrintStats(std::ostream& out, Encoding e, const EncodeStats& s) {
  out << "c stats encoding=" << EncodingName(e) << " vars=" << s.vars
      << " clauses=" << s.clauses << " gen_ms=" << s.gen_ms << '\n';
}

int RunCompile(const std::string& file, const EncoderFlags& flags,
               const std::string& out_path, bool stats, bool include_amo,
               const std::string& tree_stats_path) {
  const Encoding e = RequireEncoding(flags.encoding);
  EncodeOptions options = ToOptions(flags, e);
  std::vector<TreeNodeStats> tree_stats;
  if (!tree_stats_path.empty()) {
    if (FamilyOf(e) != Family::kTotalizer) {
      throw UsageError("--tree-stats applies only to totalizer encodings");
    }
    options.tree_stats = &tree_stats;
  }
  const Instance inst = LoadInstance(file);
  CompiledInstance c = CompileInstance(inst, e, options);
  EncodeStats reported = c.pb;
  if (include_amo) reported += c.amo;
  if (out_path.empty()) {
    c.cnf.WriteDimacs(std::cout, c.pool.num_vars());
    if (stats) PrintStats(std::cerr, e, reported);
  } else {
    std::ofstream out(out_path);
    c.cnf.WriteDimacs(out, c.pool.num_vars());
    std::ofstream map(out_path + ".map");
    WriteVarMap(map, inst);
    if (stats) PrintStats(std::cout, e, reported);
  }
  if (!tree_stats_path.empty()) {
    std::ofstream ts(tree_stats_path);
    ts << "node,depth,vals,intervals\n";
    for (size_t i = 0; i < tree_stats.size(); ++i) {
      ts << i << ',' << tree_stats[i].depth << ',' << tree_stats[i].vals << ','
         << tree_stats[i].intervals << '\n';
    }
  }
  return 0;
}

int RunCheck(const std::string& file, const EncoderFlags& flags,
             const std::string& mode, int samples, int instances,
             int max_vars, uint64_t seed) {
  if (mode != "models" && mode != "gac" && mode != "cc") {
    throw UsageError("--check must be models, gac or cc");
  }
  std::vector<std::pair<PbConstraint, AmoPartition>> pool;
  if (!file.empty()) {
    const Instance inst = LoadInstance(file);
    for (const PbConstraint& c : inst.constraints) {
      if (static_cast<int>(c.terms.size()) > max_vars) continue;
      pool.emplace_back(c, RestrictPartition(inst.GroupVars(), c));
    }
  } else {
    Rng rng(seed);
    RandomInstanceSpec spec;
    spec.max_vars = max_vars;
    for (int i = 0; i < instances; ++i) {
      pool.push_back(RandomCheckInstance(rng, spec));
    }
  }
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  bool all_ok = true;
  const std::vector<Encoding> encodings =
      flags.encoding == "all" ? AllEncodings() : EncodingList(flags.encoding);
  for (Encoding e : encodings) {
    const EncodeOptions options = ToOptions(flags, e);
    CheckReport total;
    for (const auto& [c, partition] : pool) {
      CheckFormula f = BuildCheckFormula(c, partition, e, options);
      SemanticsOracle oracle(c, partition);
      CheckReport r;
      if (mode == "models") {
        r = CheckModels(f.cnf, f.pool.num_vars(), oracle);
      } else if (mode == "gac") {
        r = CheckGac(f.cnf, f.pool.num_vars(), oracle, samples, rng);
      } else {
        r = CheckCc(f.cnf, f.pool.num_vars(), oracle, samples, rng);
      }
      total.checked += r.checked;
      if (!r.ok && total.ok) {
        total.ok = false;
        total.failure = r.failure;
      }
    }
    std::cout << EncodingName(e) << ' ' << mode << ' '
              << (total.ok ? "PASS" : "FAIL") << " checked=" << total.checked;
    if (!total.ok) std::cout << ' ' << total.failure;
    std::cout << '\n';
    all_ok = all_ok && total.ok;
  }
  return all_ok ? 0 : 1;
}

int RunGen(const std::string& preset_name, double scale, int family,
           uint64_t seed, const std::string& out_path) {
  const MmkpPreset& preset = FindMmkpPreset(preset_name);
  Rng rng(seed);
  if (family < 0) family = static_cast<int>(UniformInt(rng, 0, preset.families - 1));
  const MmkpSpec spec = PresetSpec(preset, scale, family);
  const Instance inst = GenerateMmkp(spec, rng);
  std::ostringstream header;
  header << "* " << preset.name << " scale=" << scale << " family=" << family
         << " seed=" << seed << " L=" << spec.l << " N=" << spec.n
         << " M=" << spec.m << " Q=" << spec.q << " Kmean=" << spec.k_mean
         << '\n';
  if (out_path.empty()) {
    std::cout << header.str();
    WriteInstance(std::cout, inst);
  } else {
    std::ofstream out(out_path);
    out << header.str();
    WriteInstance(out, inst);
  }
  return 0;
}

int RunBench(const std::vector<std::string>& files, const std::string& encs,
             const std::string& out_path, const std::string& preset,
             double scale, int count, uint64_t seed, bool include_amo) {
  const std::vector<Encoding> encodings = EncodingList(encs);
  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file_out.open(out_path);
    out = &file_out;
  }
  WriteSizeCsvHeader(*out);
  EncodeOptions options;
  if (!files.empty()) {
    for (const std::string& f : files) {
      WriteSizeCsv(*out, f,
                   SizeReport(LoadInstance(f), encodings, options, include_amo));
    }
    return 0;
  }
  const MmkpPreset& p = FindMmkpPreset(preset);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int family = static_cast<int>(UniformInt(rng, 0, p.families - 1));
    const Instance inst = GenerateMmkp(PresetSpec(p, scale, family), rng);
    WriteSizeCsv(*out, preset + "#" + std::to_string(i),
                 SizeReport(inst, encodings, options, include_amo));
  }
  return 0;
}

std::string DefaultSolver() {
  if (const char* env = std::getenv("PBAMO_SOLVER"); env && *env) return env;
  std::error_code ec;
  const auto self = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const auto sibling = self.parent_path() / "pbamo-minisolve";
    if (std::filesystem::exists(sibling, ec)) return "'" + sibling.string() + "'";
  }
  return "pbamo-minisolve";
}

int RunSolve(const std::string& file, const EncoderFlags& flags,
             const std::string& solver, bool validate, int timeout) {
  const Encoding e = RequireEncoding(flags.encoding);
  const Instance inst = LoadInstance(file);
  CompiledInstance c = CompileInstance(inst, e, ToOptions(flags, e));
  const auto tmp = std::filesystem::temp_directory_path() /
                   ("pbamo-" + std::to_string(::getpid()) + ".cnf");
  {
    std::ofstream out(tmp);
    c.cnf.WriteDimacs(out, c.pool.num_vars());
  }
  SolveResult r = RunSolver(solver, tmp.string(), c.pool.num_vars(), timeout);
  std::filesystem::remove(tmp);
  std::cout << "s " << StatusName(r.status) << '\n';
  if (r.status == SolveStatus::kSat) {
    std::cout << "v";
    for (int32_t v = 1; v <= inst.num_vars(); ++v) {
      if (r.model[v] == Value::kTrue) std::cout << ' ' << inst.names[v - 1];
    }
    std::cout << '\n';
  }
  if (!validate || r.status == SolveStatus::kUnknown) return 0;
  if (r.status == SolveStatus::kSat) {
    Assignment projected(r.model.begin(), r.model.begin() + inst.num_vars() + 1);
    const bool ok = SatisfiesInstance(inst, projected);
    std::cout << "c validate model " << (ok ? "OK" : "INVALID") << '\n';
    return ok ? 0 : 2;
  }
  const bool sat = SolveBruteForce(inst).has_value();
  std::cout << "c validate unsat " << (sat ? "WRONG" : "OK") << '\n';
  return sat ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pbamo: PB(AMO) to CNF encodings"};
  app.require_subcommand(1);

  std::string file, out_path, tree_stats;
  bool stats = false, include_amo = false;
  EncoderFlags flags;
  auto* compile = app.add_subcommand("compile", "encode a file to DIMACS");
  compile->add_option("file", file)->required();
  AddEncoderFlags(compile, flags);
  compile->add_option("--out", out_path);
  compile->add_flag("--stats", stats);
  compile->add_option("--tree-stats", tree_stats);
  compile->add_flag("--include-amo-stats", include_amo);

  std::string check_file, mode = "models";
  int samples = 200, instances = 50, max_vars = 12;
  uint64_t seed = DefaultSeed();
  EncoderFlags check_flags;
  check_flags.encoding = "all";
  auto* check = app.add_subcommand("check", "compare encodings to the oracle");
  check->add_option("file", check_file);
  check->add_option("--encoding", check_flags.encoding);
  check->add_option("--amo-encoding", check_flags.amo);
  check->add_option("--check", mode, "models|gac|cc");
  check->add_option("--samples", samples);
  check->add_option("--instances", instances);
  check->add_option("--max-vars", max_vars);
  check->add_option("--seed", seed);

  std::string preset = "mmkp1", gen_out;
  double scale = 1.0;
  int family = -1;
  auto* gen = app.add_subcommand("gen", "generate an MMKP instance");
  gen->add_option("--preset", preset);
  gen->add_option("--scale", scale);
  gen->add_option("--family", family);
  gen->add_option("--seed", seed);
  gen->add_option("--out", gen_out);

  std::vector<std::string> bench_files;
  std::string bench_encs = "all", bench_out, bench_preset = "mmkp3";
  double bench_scale = 0.4;
  int bench_count = 5;
  bool bench_amo = false;
  auto* bench = app.add_subcommand("bench", "size table per encoding");
  bench->add_option("files", bench_files);
  bench->add_option("--encodings", bench_encs);
  bench->add_option("--out", bench_out);
  bench->add_option("--preset", bench_preset);
  bench->add_option("--scale", bench_scale);
  bench->add_option("--count", bench_count);
  bench->add_option("--seed", seed);
  bench->add_flag("--include-amo-stats", bench_amo);

  std::string solve_file, solver_cmd;
  bool validate = false;
  int timeout = 0;
  EncoderFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "compile and run a SAT solver");
  solve->add_option("file", solve_file)->required();
  AddEncoderFlags(solve, solve_flags);
  solve->add_option("--solver", solver_cmd,
                    "DIMACS solver command (default: $PBAMO_SOLVER, then "
                    "the bundled pbamo-minisolve)");
  solve->add_flag("--validate", validate);
  solve->add_option("--timeout", timeout);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*compile) {
      return RunCompile(file, flags, out_path, stats, include_amo, tree_stats);
    }
    if (*check) {
      return RunCheck(check_file, check_flags, mode, samples, instances,
                      max_vars, seed);
    }
    if (*gen) return RunGen(preset, scale, family, seed, gen_out);
    if (*bench) {
      return RunBench(bench_files, bench_encs, bench_out, bench_preset,
                      bench_scale, bench_count, seed, bench_amo);
    }
    if (*solve) {
      if (solver_cmd.empty()) solver_cmd = DefaultSolver();
      return RunSolve(solve_file, solve_flags, solver_cmd, validate, timeout);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 64;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
