#pragma once

// Sparse multivariate polynomials over Q in the variables a0..a7.
//
// Terms are kept sorted by the dominance order: a monomial is more dominant
// than another when, scanning the variables from the highest index down,
// the first differing exponent is smaller.  With every a_j infinitesimal
// over Q(a0..a_{j-1}) the most dominant term decides the sign.

#include "omega/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace omega {

inline constexpr std::size_t kMaxVariables = 8;

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  static Monomial variable(std::size_t j, Exponent power = 1);

  Exponent operator[](std::size_t j) const { return e_[j]; }
  Exponent& operator[](std::size_t j) { return e_[j]; }

  bool is_one() const;
  // Highest variable index with a nonzero exponent, or -1 for the unit.
  int top_variable() const;
  unsigned max_exponent() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Requires divides(o): returns o / *this.
  Monomial quotient_of(const Monomial& o) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exponent, kMaxVariables> e_{};
};

// True when a is strictly more dominant than b.
inline bool more_dominant(const Monomial& a, const Monomial& b) {
  for (std::size_t j = kMaxVariables; j-- > 0;)
    if (a[j] != b[j]) return a[j] < b[j];
  return false;
}

struct Term {
  Monomial mono;
  Rational coef;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  static Polynomial variable(std::size_t j);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  // Takes arbitrary terms; sorts, merges and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Most dominant term; requires !is_zero().
  const Term& dominant() const { return terms_.front(); }
  // Largest term in lex order with a7 > a6 > ... (the reverse of dominance).
  const Term& lex_leading() const { return terms_.back(); }

  int top_variable() const;
  unsigned degree_in(std::size_t j) const;
  unsigned max_exponent() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Returns the quotient when o divides *this exactly, otherwise nothing.
  std::optional<Polynomial> divide_exact(const Polynomial& o) const;

  // Coefficients with respect to variable j: result[k] is the coefficient
  // of a_j^k, a polynomial free of a_j.
  std::vector<Polynomial> split(std::size_t j) const;
  static Polynomial join(const std::vector<Polynomial>& coeffs, std::size_t j);

  // Scales so the most dominant coefficient is 1.
  Polynomial normalized() const;

  // Terms in dominance order, e.g. "3*a0 - a0^2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

// Greatest common divisor, normalized so its most dominant coefficient is 1.
// gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// The same gcd by recursive primitive remainder sequences only, skipping the
// integer-evaluation heuristic that gcd tries first.  Slower; kept as an
// independent route for testing.
Polynomial gcd_prs(const Polynomial& a, const Polynomial& b);

}  // namespace omega
