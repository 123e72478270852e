#pragma once

// Structure-equation notation: "(0,0,0,12)" lists de^1, ..., de^n. A term
// "ij" with coefficient a in slot k stands for a e^i ^ e^j inside de^k, and
// with de^k(X,Y) = -e^k([X,Y]) it contributes c(i,j,k) = -a.
//
//   notation := "(" slot ("," slot)* ")"
//   slot     := "0" | ["+"|"-"] term (("+"|"-") term)*
//   term     := [coef] pair
//   coef     := digits | digits "/" digits
//   pair     := digit digit            (dimension <= 9)
//             | "[" digits "," digits "]"   (dimension >= 10)
//
// With the digit shorthand the last two digits of a digit run are the index
// pair and anything before them is the coefficient: "213" = 2 e^13 and
// "1/213" = 1/2 e^13. No whitespace is allowed.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hermlie/lie_algebra.hpp"
#include "hermlie/scalar.hpp"

namespace hermlie {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

struct NotationTerm {
  Rational coefficient;
  int i = 0;  // 1-based
  int j = 0;
  bool bracketed = false;
  std::size_t position = 0;  // where the index pair starts
};

namespace detail {

class NotationParser {
 public:
  explicit NotationParser(std::string_view text) : s_(text) {}

  std::vector<std::vector<NotationTerm>> run() {
    expect('(');
    std::vector<std::vector<NotationTerm>> slots;
    for (;;) {
      slots.push_back(slot());
      if (at_end()) fail("unexpected end of input, expected ',' or ')'");
      const char ch = s_[pos_];
      if (ch == ',') {
        ++pos_;
        continue;
      }
      if (ch == ')') {
        ++pos_;
        break;
      }
      fail(std::string("unexpected character '") + ch + "', expected ',' or ')'");
    }
    if (!at_end()) fail("trailing characters after ')'");
    return slots;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  static bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] static void fail_at(std::size_t p, const std::string& msg) { throw ParseError(p, msg); }

  void expect(char ch) {
    if (at_end()) fail(std::string("unexpected end of input, expected '") + ch + "'");
    if (s_[pos_] != ch) fail(std::string("expected '") + ch + "', found '" + s_[pos_] + "'");
    ++pos_;
  }

  std::string_view digit_run() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::vector<NotationTerm> slot() {
    std::vector<NotationTerm> terms;
    if (!at_end() && s_[pos_] == '0' && (pos_ + 1 == s_.size() || s_[pos_ + 1] == ',' || s_[pos_ + 1] == ')')) {
      ++pos_;
      return terms;
    }
    if (at_end()) fail("unexpected end of input, expected a slot");
    bool first = true;
    for (;;) {
      int sign = 1;
      if (!at_end() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      NotationTerm t = term();
      if (sign < 0) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      first = false;
      if (at_end() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return terms;
  }

  NotationTerm term() {
    NotationTerm t;
    t.coefficient = 1;
    if (at_end()) fail("unexpected end of input, expected a term");
    const std::size_t start = pos_;
    if (s_[pos_] == '[') {
      bracket_pair(t);
      return t;
    }
    if (!is_digit(s_[pos_])) fail(std::string("expected a term, found '") + s_[pos_] + "'");
    std::string_view run = digit_run();
    if (!at_end() && s_[pos_] == '/') {
      const std::string numerator(run);
      ++pos_;
      const std::size_t den_start = pos_;
      std::string_view den = digit_run();
      if (den.empty()) fail("expected a denominator after '/'");
      if (!at_end() && s_[pos_] == '[') {
        t.coefficient = checked_ratio(numerator, std::string(den), den_start);
        bracket_pair(t);
        return t;
      }
      if (den.size() < 3) fail_at(den_start, "expected denominator followed by an index pair");
      t.coefficient = checked_ratio(numerator, std::string(den.substr(0, den.size() - 2)), den_start);
      digit_pair(t, den_start + den.size() - 2);
      return t;
    }
    if (!at_end() && s_[pos_] == '[') {
      t.coefficient = Rational(std::string(run), 10);
      bracket_pair(t);
      return t;
    }
    if (run.size() < 2) fail_at(start, "expected an index pair of two digits");
    if (run.size() > 2) t.coefficient = Rational(std::string(run.substr(0, run.size() - 2)), 10);
    digit_pair(t, start + run.size() - 2);
    return t;
  }

  Rational checked_ratio(const std::string& num, const std::string& den, std::size_t den_pos) const {
    Rational d(den, 10);
    if (d == 0) fail_at(den_pos, "zero denominator");
    Rational r(Rational(num, 10) / d);
    return r;
  }

  void digit_pair(NotationTerm& t, std::size_t p) {
    t.i = s_[p] - '0';
    t.j = s_[p + 1] - '0';
    t.bracketed = false;
    t.position = p;
  }

  void bracket_pair(NotationTerm& t) {
    t.position = pos_;
    expect('[');
    auto a = digit_run();
    if (a.empty()) fail("expected an index inside '[...]'");
    expect(',');
    auto b = digit_run();
    if (b.empty()) fail("expected an index inside '[...]'");
    expect(']');
    if (a.size() > 6 || b.size() > 6) fail_at(t.position, "index too large");
    t.i = std::stoi(std::string(a));
    t.j = std::stoi(std::string(b));
    t.bracketed = true;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Tokenises and checks the notation without building the algebra.
inline std::vector<std::vector<NotationTerm>> parse_notation_terms(std::string_view text) {
  auto slots = detail::NotationParser(text).run();
  const int n = int(slots.size());
  for (const auto& slot : slots)
    for (const auto& t : slot) {
      if (n <= 9 && t.bracketed) throw ParseError(t.position, "bracketed indices are only used for dimension >= 10");
      if (n >= 10 && !t.bracketed)
        throw ParseError(t.position, "digit-pair indices are ambiguous for dimension >= 10; write [i,j]");
      if (t.i < 1 || t.i > n || t.j < 1 || t.j > n)
        throw ParseError(t.position, "index out of range 1.." + std::to_string(n) + " in term " + std::to_string(t.i) +
                                         "," + std::to_string(t.j));
      if (t.i >= t.j) throw ParseError(t.position, "term indices must satisfy i < j");
    }
  return slots;
}

/// Parses and Jacobi-validates. Throws ParseError or JacobiError.
inline LieAlgebra<Rational> parse_notation(std::string_view text) {
  const auto slots = parse_notation_terms(text);
  const int n = int(slots.size());
  auto L = LieAlgebra<Rational>::abelian(n);
  for (int k = 0; k < n; ++k)
    for (const auto& t : slots[k]) {
      const Rational cur = L.c(t.i - 1, t.j - 1, k);
      L.set_bracket_coefficient(t.i - 1, t.j - 1, k, Rational(cur - t.coefficient));
    }
  return LieAlgebra<Rational>::from_constants(n, L.constants());
}

/// Canonical text: terms sorted by (i, j), unit coefficients omitted.
inline std::string serialize_notation(const LieAlgebra<Rational>& L) {
  const int n = L.dim();
  std::string out = "(";
  for (int k = 0; k < n; ++k) {
    if (k) out += ',';
    std::string slot;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Rational a = -L.c(i, j, k);
        if (a == 0) continue;
        if (a < 0)
          slot += '-';
        else if (!slot.empty())
          slot += '+';
        const Rational mag = abs(a);
        if (mag != 1) slot += mag.get_str();
        if (n <= 9)
          slot += std::to_string(i + 1) + std::to_string(j + 1);
        else
          slot += "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
      }
    out += slot.empty() ? "0" : slot;
  }
  out += ')';
  return out;
}

}  // namespace hermlie
