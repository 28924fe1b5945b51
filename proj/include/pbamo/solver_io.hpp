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

#ifndef PBAMO_SOLVER_IO_HPP_
#define PBAMO_SOLVER_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pbamo/cnf.hpp"
#include "pbamo/model.hpp"
#include "pbamo/oracle.hpp"

namespace pbamo {

enum class SolveStatus { kSat, kUnsat, kUnknown };

const char* StatusName(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::kUnknown;
  Assignment model;  // indexed by DIMACS variable
};

struct Dimacs {
  int32_t num_vars = 0;
  ClauseSink cnf;
};

Dimacs ReadDimacs(std::istream& in);

// Reads "s ..." and "v ..." lines in SAT competition format.
SolveResult ParseSolverOutput(std::istream& in, int32_t num_vars);

// Runs `command <cnf_path>` through the shell. Crashes, timeouts and
// unparsable output give kUnknown.
SolveResult RunSolver(const std::string& command, const std::string& cnf_path,
                      int32_t num_vars, int timeout_seconds = 0);

// "name index" per line.
void WriteVarMap(std::ostream& out, const Instance& instance);

}  // namespace pbamo

#endif  // PBAMO_SOLVER_IO_HPP_
