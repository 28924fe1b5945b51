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

#ifndef PBAMO_TEXT_FORMAT_HPP_
#define PBAMO_TEXT_FORMAT_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pbamo/model.hpp"

namespace pbamo {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Line-oriented format:
//   * comment
//   amo: a b c ;
//   eo: d e ;
//   +2 a -3 d >= 1 ;
// Variables are numbered in order of first appearance.
Instance ParseInstance(std::istream& in);
Instance ParseInstanceString(std::string_view text);

void WriteInstance(std::ostream& out, const Instance& instance);

}  // namespace pbamo

#endif  // PBAMO_TEXT_FORMAT_HPP_
