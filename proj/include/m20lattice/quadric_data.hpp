// Copyright 2026 The m20lattice Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Loader for the ten quadrics of the degree-12 model in P^7.
//
// File format (UTF-8 text):
//   - lines starting with '#' are comments;
//   - a line containing only "---" separates records;
//   - a record is "NAME = <polynomial>", possibly spread over lines.
//
// A polynomial is a sum of terms. Each term is an optional sign, an
// optional rational prefactor "p/q*", an optional "(<poly in a>)*" or bare
// integer, and a monomial of degree exactly 2 in x1..x8 ("x1*x7" or "x5^2").
// Polynomials in a have integer coefficients and exponents 0..7, a being a
// primitive 20th root of unity.
//
// Only well-formedness is checked. Nothing is evaluated.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "m20lattice/integer.hpp"

namespace m20lattice {

struct QuadricTerm {
  std::string coefficient;  // e.g. "-1/15*(736*a^7 - 304)" or "+32"
  int i = 0;                // monomial x_i * x_j with i <= j
  int j = 0;
};

struct Quadric {
  std::string name;
  std::vector<QuadricTerm> terms;
};

class QuadricParseError : public Error {
 public:
  QuadricParseError(const std::string& record, const std::string& what)
      : Error("quadric " + record + ": " + what) {}
};

namespace detail {

class QuadricParser {
 public:
  QuadricParser(std::string name, std::string text) : name_(std::move(name)), s_(std::move(text)) {}

  std::vector<QuadricTerm> parse() {
    check_balanced();
    std::vector<QuadricTerm> terms;
    skip_ws();
    while (pos_ < s_.size()) {
      terms.push_back(term(terms.empty()));
      skip_ws();
    }
    if (terms.empty()) fail("empty polynomial");
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw QuadricParseError(name_, what + " at offset " + std::to_string(pos_));
  }

  void check_balanced() const {
    int depth = 0;
    for (char ch : s_) {
      if (ch == '(') ++depth;
      if (ch == ')' && --depth < 0) break;
    }
    if (depth != 0) throw QuadricParseError(name_, "unbalanced parentheses");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == ch;
  }
  bool accept(char ch) {
    if (!peek(ch)) return false;
    ++pos_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::string number() {
    if (!peek_digit()) fail("expected a number");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  // a, a^k, c*a, c*a^k, or c.
  std::string a_term() {
    std::string out;
    bool need_a = true;
    if (peek_digit()) {
      out = number();
      need_a = accept('*');
      if (need_a) out += "*";
    }
    if (need_a) {
      if (!accept('a')) fail("expected the generator a");
      out += "a";
      if (accept('^')) {
        std::string k = number();
        if (std::stoi(k) > 7) fail("exponent of a exceeds 7");
        out += "^" + k;
      }
    }
    return out;
  }

  // Called after the opening parenthesis.
  std::string a_polynomial() {
    std::string out = "(";
    if (accept('-')) out += "-";
    out += a_term();
    while (peek('+') || peek('-')) {
      char sign = s_[pos_++];
      out += std::string(" ") + sign + " " + a_term();
    }
    expect(')');
    return out + ")";
  }

  int variable() {
    if (!accept('x')) fail("expected a variable x1..x8");
    std::string idx = number();
    int k = std::stoi(idx);
    if (k < 1 || k > 8) fail("variable index out of range 1..8");
    return k;
  }

  QuadricTerm term(bool first) {
    QuadricTerm t;
    std::string sign = "+";
    if (accept('-')) {
      sign = "-";
    } else if (!accept('+') && !first) {
      fail("expected '+' or '-' between terms");
    }

    std::string coef;
    if (peek_digit()) {
      coef = number();
      if (accept('/')) {
        coef += "/" + number();
        expect('*');
        coef += "*";
        if (!peek('(')) fail("rational prefactor must multiply a parenthesised coefficient");
      } else {
        expect('*');
      }
    }
    if (accept('(')) {
      coef += a_polynomial();
      expect('*');
    }
    if (coef.empty()) coef = "1";
    t.coefficient = sign + coef;

    std::vector<int> vars{variable()};
    if (accept('^')) {
      if (number() != "2") fail("only squares are allowed as powers");
      vars.push_back(vars.front());
    } else {
      while (accept('*')) vars.push_back(variable());
    }
    if (vars.size() != 2) fail("monomial must have degree 2");
    t.i = std::min(vars[0], vars[1]);
    t.j = std::max(vars[0], vars[1]);
    return t;
  }

  std::string name_;
  std::string s_;
  std::size_t pos_ = 0;
};

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Parses every record in `text`; throws QuadricParseError on the first
/// malformed one.
inline std::vector<Quadric> parse_quadrics(const std::string& text) {
  std::vector<std::string> records(1);
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const std::string t = detail::trim(line);
    if (!t.empty() && t.front() == '#') continue;
    if (t == "---") {
      records.emplace_back();
      continue;
    }
    records.back() += line + "\n";
  }

  std::vector<Quadric> out;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const std::string body = detail::trim(records[k]);
    if (body.empty()) throw QuadricParseError("#" + std::to_string(k + 1), "empty record");
    auto eq = body.find('=');
    if (eq == std::string::npos) throw QuadricParseError("#" + std::to_string(k + 1), "missing '='");
    Quadric q;
    q.name = detail::trim(body.substr(0, eq));
    if (q.name.empty()) throw QuadricParseError("#" + std::to_string(k + 1), "missing name");
    q.terms = detail::QuadricParser(q.name, body.substr(eq + 1)).parse();
    out.push_back(std::move(q));
  }
  return out;
}

inline std::vector<Quadric> load_quadrics(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_quadrics(buf.str());
}

#ifdef M20LATTICE_DATA_DIR
inline std::string default_quadrics_path() {
  return std::string(M20LATTICE_DATA_DIR) + "/degree12_quadrics.txt";
}
#endif

}  // namespace m20lattice
