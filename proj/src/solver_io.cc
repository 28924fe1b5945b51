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

#include "pbamo/solver_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <sys/wait.h>

namespace pbamo {

const char* StatusName(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSat: return "SAT";
    case SolveStatus::kUnsat: return "UNSAT";
    case SolveStatus::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

Dimacs ReadDimacs(std::istream& in) {
  Dimacs d;
  std::string tok;
  std::vector<Lit> clause;
  bool header = false;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      int64_t clauses;
      in >> fmt >> d.num_vars >> clauses;
      if (fmt != "cnf") throw std::runtime_error("not a cnf header");
      header = true;
      continue;
    }
    if (!header) throw std::runtime_error("clause before header");
    const int32_t code = std::stoi(tok);
    if (code == 0) {
      d.cnf.Add(clause);
      clause.clear();
    } else {
      clause.push_back(Lit::FromDimacs(code));
    }
  }
  if (!clause.empty()) d.cnf.Add(clause);
  return d;
}

SolveResult ParseSolverOutput(std::istream& in, int32_t num_vars) {
  SolveResult r;
  r.model.assign(static_cast<size_t>(num_vars) + 1, Value::kUnassigned);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) == 0) {
      if (line.find("UNSATISFIABLE") != std::string::npos) {
        r.status = SolveStatus::kUnsat;
      } else if (line.find("SATISFIABLE") != std::string::npos) {
        r.status = SolveStatus::kSat;
      }
    } else if (line.rfind("v ", 0) == 0) {
      std::istringstream vs(line.substr(2));
      int64_t code;
      while (vs >> code) {
        if (code == 0) break;
        const int64_t v = code < 0 ? -code : code;
        if (v <= num_vars) {
          r.model[static_cast<size_t>(v)] =
              code > 0 ? Value::kTrue : Value::kFalse;
        }
      }
    }
  }
  return r;
}

SolveResult RunSolver(const std::string& command, const std::string& cnf_path,
                      int32_t num_vars, int timeout_seconds) {
  std::string cmd;
  if (timeout_seconds > 0) cmd = "timeout " + std::to_string(timeout_seconds) + " ";
  cmd += command + " '" + cnf_path + "' 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return SolveResult{};
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  std::istringstream in(output);
  SolveResult r = ParseSolverOutput(in, num_vars);
  if (status == -1 || !WIFEXITED(status)) return SolveResult{};
  const int code = WEXITSTATUS(status);
  if (code != 0 && code != 10 && code != 20) r.status = SolveStatus::kUnknown;
  return r;
}

void WriteVarMap(std::ostream& out, const Instance& instance) {
  for (size_t i = 0; i < instance.names.size(); ++i) {
    out << instance.names[i] << ' ' << i + 1 << '\n';
  }
}

}  // namespace pbamo
