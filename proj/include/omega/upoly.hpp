#pragma once

// Dense univariate polynomials and rational functions over Q in the index
// variable n.  These describe the closed-form tails of eventual sequences.

#include "omega/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omega {

class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT
  // Coefficients from the constant term upward.
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly n() { return UPoly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& lc() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  // Quotient and remainder; b nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  UPoly monic() const;

  // Every real root r satisfies |r| < root_bound() (Cauchy), so the sign
  // is constant for n >= root_bound().  Zero for constants.
  Integer root_bound() const;

  std::string to_string(std::string_view var = "n") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const Rational& c) : num_(c) {}  // NOLINT
  RationalFunction(const UPoly& p) : num_(p) {}     // NOLINT
  // Throws std::domain_error when den is zero.
  RationalFunction(const UPoly& num, const UPoly& den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  // Throws std::domain_error at a pole.
  Rational operator()(const Rational& x) const;
  // Sign for all sufficiently large n.
  int eventual_sign() const;
  // Sign is constant (and no pole) for every integer n >= this value.
  Integer settled_from() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  UPoly num_;
  UPoly den_ = UPoly(Rational(1));
};

RationalFunction pow(const RationalFunction& x, long e);

// The expression grammar with the single variable n.
RationalFunction parse_rational_function(std::string_view text);

}  // namespace omega
