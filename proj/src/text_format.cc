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

#include "pbamo/text_format.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace pbamo {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

bool IsName(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  }
  return true;
}

bool ParseInt(const std::string& s, int64_t& out) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  if (i == s.size()) return false;
  int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = CheckedAdd(CheckedMul(v, 10), s[i] - '0');
  }
  out = neg ? -v : v;
  return true;
}

bool ParseOp(const std::string& s, Op& op) {
  static const std::map<std::string, Op> kOps = {
      {"<=", Op::kLe}, {">=", Op::kGe}, {"<", Op::kLt}, {">", Op::kGt},
      {"=", Op::kEq}};
  auto it = kOps.find(s);
  if (it == kOps.end()) return false;
  op = it->second;
  return true;
}

class Parser {
 public:
  Instance Run(std::istream& in) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '*') continue;
      Tokenize(line, lineno);
    }
    for (const auto& st : statements_) Statement(st);
    if (!current_.empty()) {
      const Token& t = current_.back();
      throw ParseError("missing ';'", t.line, t.column);
    }
    return std::move(inst_);
  }

 private:
  void Tokenize(const std::string& line, int lineno) {
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const int col = static_cast<int>(i) + 1;
      if (line[i] == ';') {
        current_.push_back(Token{";", lineno, col});
        statements_.push_back(std::move(current_));
        current_.clear();
        ++i;
        continue;
      }
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
             line[j] != ';') {
        ++j;
      }
      current_.push_back(Token{line.substr(i, j - i), lineno, col});
      i = j;
    }
  }

  Var VarOf(const Token& t) {
    if (!IsName(t.text)) {
      throw ParseError("invalid variable name '" + t.text + "'", t.line,
                       t.column);
    }
    auto it = index_.find(t.text);
    if (it != index_.end()) return it->second;
    inst_.names.push_back(t.text);
    Var v{inst_.num_vars()};
    index_.emplace(t.text, v);
    return v;
  }

  void Statement(const std::vector<Token>& st) {
    const Token& head = st.front();
    if (head.text == "amo:" || head.text == "eo:") {
      AmoGroup g;
      g.exactly_one = head.text == "eo:";
      for (size_t i = 1; i + 1 < st.size(); ++i) {
        Var v = VarOf(st[i]);
        if (!grouped_.emplace(v.index, 0).second) {
          throw ParseError("variable '" + st[i].text + "' in two groups",
                           st[i].line, st[i].column);
        }
        g.vars.push_back(v);
      }
      inst_.groups.push_back(std::move(g));
      return;
    }
    PbConstraint c;
    size_t i = 0;
    std::map<int32_t, int> seen;
    while (i + 1 < st.size()) {
      Op op;
      if (ParseOp(st[i].text, op)) {
        if (i + 3 != st.size()) {
          throw ParseError("expected '<int> ;' after operator", st[i].line,
                           st[i].column);
        }
        if (!ParseInt(st[i + 1].text, c.rhs)) {
          throw ParseError("expected integer right-hand side", st[i + 1].line,
                           st[i + 1].column);
        }
        c.op = op;
        inst_.constraints.push_back(std::move(c));
        return;
      }
      int64_t q;
      if (!ParseInt(st[i].text, q)) {
        throw ParseError("expected coefficient, got '" + st[i].text + "'",
                         st[i].line, st[i].column);
      }
      if (i + 2 >= st.size()) {
        throw ParseError("expected variable after coefficient", st[i].line,
                         st[i].column);
      }
      Var v = VarOf(st[i + 1]);
      if (!seen.emplace(v.index, 0).second) {
        throw ParseError("variable '" + st[i + 1].text +
                             "' repeated in constraint",
                         st[i + 1].line, st[i + 1].column);
      }
      c.terms.push_back(Term{q, v});
      i += 2;
    }
    throw ParseError("missing relational operator", st.back().line,
                     st.back().column);
  }

  Instance inst_;
  std::map<std::string, Var> index_;
  std::map<int32_t, int> grouped_;
  std::vector<std::vector<Token>> statements_;
  std::vector<Token> current_;
};

}  // namespace

Instance ParseInstance(std::istream& in) { return Parser().Run(in); }

Instance ParseInstanceString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseInstance(in);
}

void WriteInstance(std::ostream& out, const Instance& instance) {
  auto name = [&](Var v) -> const std::string& {
    return instance.names[static_cast<size_t>(v.index) - 1];
  };
  for (const AmoGroup& g : instance.groups) {
    out << (g.exactly_one ? "eo:" : "amo:");
    for (Var v : g.vars) out << ' ' << name(v);
    out << " ;\n";
  }
  for (const PbConstraint& c : instance.constraints) {
    for (const Term& t : c.terms) {
      out << (t.coef >= 0 ? "+" : "") << t.coef << ' ' << name(t.var) << ' ';
    }
    out << OpSymbol(c.op) << ' ' << c.rhs << " ;\n";
  }
}

}  // namespace pbamo
