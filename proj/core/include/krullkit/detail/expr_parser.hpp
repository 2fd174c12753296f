#pragma once

// Recursive-descent parser for ring expressions: + - * ^, parentheses,
// numeric literals (with an optional "/den"), and identifiers. The value type
// and the leaf interpretation are supplied by the caller.

#include <cctype>
#include <string>
#include <string_view>

#include "krullkit/errors.hpp"

namespace krullkit::detail {

template <class T, class Ops>
class ExprParser {
 public:
  ExprParser(std::string_view text, const Ops& ops) : text_(text), ops_(ops) {}

  T parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    T value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  T expr() {
    T value = term();
    while (true) {
      skip_space();
      if (accept('+')) {
        value = ops_.add(value, term());
      } else if (accept('-')) {
        value = ops_.sub(value, term());
      } else {
        return value;
      }
    }
  }

  T term() {
    T value = unary();
    while (true) {
      skip_space();
      if (!accept('*')) return value;
      value = ops_.mul(value, unary());
    }
  }

  T unary() {
    skip_space();
    if (accept('-')) return ops_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  T power() {
    T base = atom();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    const std::string digits = take_digits();
    if (digits.empty()) fail("exponent must be a non-negative integer");
    if (digits.size() > 6) fail("exponent too large");
    return ops_.pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  T atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (accept('(')) {
      T value = expr();
      skip_space();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = take_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string den = take_digits();
        if (den.empty()) fail("malformed fraction");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        literal += "/" + den;
      }
      return ops_.number(literal);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return ops_.variable(text_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  const Ops& ops_;
  std::size_t pos_ = 0;
};

template <class T, class Ops>
T parse_expression(std::string_view text, const Ops& ops) {
  return ExprParser<T, Ops>(text, ops).parse();
}

}  // namespace krullkit::detail
