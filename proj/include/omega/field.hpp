#pragma once

// Elements of the ordered tower Q(a0)(a1)...(a_{m-1}), each a_j a positive
// infinitesimal over the field generated by the previous ones.
//
// A FieldElement is p/q with p, q coprime and q's most dominant coefficient
// equal to 1.  That representation is unique, so equality, hashing and the
// printed form are all exact.

#include "omega/polynomial.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero in the tower field") {}
};

class LimitExceeded : public FieldError {
 public:
  using FieldError::FieldError;
};

struct FieldLimits {
  std::size_t max_height = kMaxVariables;
  unsigned max_degree = 32;
};

// Process-wide limits checked on every canonical result.  max_height can
// only be lowered below kMaxVariables.
FieldLimits field_limits();
void set_field_limits(FieldLimits limits);

// Exponents of the leading term; numerator minus denominator, so entries
// may be negative.
struct LeadingTerm {
  std::vector<long> exponents;
  Rational coefficient;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Rational& c);  // NOLINT: rationals embed implicitly
  FieldElement(long c) : FieldElement(Rational(c)) {}  // NOLINT

  static FieldElement variable(std::size_t j);
  static FieldElement fraction(const Polynomial& num, const Polynomial& den, std::size_t height = 0);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::size_t height() const { return height_; }
  // Same value regarded at a larger height.
  FieldElement lifted(std::size_t height) const;

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return is_zero() ? 0 : omega::sign(num_.dominant().coef); }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement inverse() const;
  FieldElement pow(long e) const;
  FieldElement abs() const { return sign() < 0 ? -*this : *this; }

  // Equality ignores the declared height: a value embeds unchanged.
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  LeadingTerm leading_term() const;
  bool is_infinitesimal() const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  // reduce=false when the caller already knows num and den are coprime.
  void canonicalize(bool reduce = true);

  Polynomial num_;
  Polynomial den_ = Polynomial(1);
  std::size_t height_ = 0;
};

std::strong_ordering compare(const FieldElement& a, const FieldElement& b);

// Parses the grammar of expr.hpp with variables a0..a7.
FieldElement parse_field(std::string_view text);

}  // namespace omega

template <>
struct std::hash<omega::FieldElement> {
  std::size_t operator()(const omega::FieldElement& x) const { return x.hash(); }
};
