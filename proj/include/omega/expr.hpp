#pragma once

// Recursive-descent parser for the shared arithmetic grammar used by the
// field, rational-function and matrix formats:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' exponent)?
//   exponent:= '-'? digits | '(' '-'? digits ')'
//   primary := digits | identifier | '(' expr ')'
//
// '^' binds tighter than unary minus, so "-a0^2" is -(a0^2).  The parser is
// generic over the value type; callers supply constants, variables and
// integer powers.

#include "omega/rational.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace omega {

template <class T>
struct ExprSemantics {
  std::function<T(const Integer&)> constant;
  std::function<std::optional<T>(std::string_view)> variable;
  std::function<T(const T&, long)> power;
};

namespace detail {

template <class T>
class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprSemantics<T>& sem) : text_(text), sem_(sem) {}

  T parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    T value = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T value = term();
    for (;;) {
      if (accept('+'))
        value = value + term();
      else if (accept('-'))
        value = value - term();
      else
        return value;
    }
  }

  T term() {
    T value = unary();
    for (;;) {
      if (accept('*'))
        value = value * unary();
      else if (accept('/'))
        value = value / unary();
      else
        return value;
    }
  }

  T unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  T power() {
    T base = primary();
    if (!accept('^')) return base;
    bool paren = accept('(');
    bool negative = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) throw ParseError("expected ')'", pos_);
    return sem_.power(base, negative ? -e : e);
  }

  T primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      T value = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return sem_.constant(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (auto v = sem_.variable(name)) return *v;
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const ExprSemantics<T>& sem_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class T>
T parse_expression(std::string_view text, const ExprSemantics<T>& sem) {
  return detail::ExprParser<T>(text, sem).parse();
}

}  // namespace omega
