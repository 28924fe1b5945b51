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

// Reference DIMACS solver used as the default external solver.
// Usage: pbamo-minisolve <file.cnf>

#include <fstream>
#include <iostream>

#include "pbamo/propagator.hpp"
#include "pbamo/solver_io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: pbamo-minisolve <file.cnf>\n";
    return 1;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << "\n";
    return 1;
  }
  pbamo::Dimacs d;
  try {
    d = pbamo::ReadDimacs(in);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  }
  pbamo::Solver solver(d.cnf, d.num_vars);
  if (solver.Solve() == pbamo::Solver::Result::kUnsat) {
    std::cout << "s UNSATISFIABLE\n";
    return 20;
  }
  std::cout << "s SATISFIABLE\nv";
  for (int32_t v = 1; v <= d.num_vars; ++v) {
    const bool t = solver.model(pbamo::Var{v}) == pbamo::Value::kTrue;
    std::cout << ' ' << (t ? v : -v);
  }
  std::cout << " 0\n";
  return 10;
}
