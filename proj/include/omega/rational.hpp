#pragma once

// Exact rationals backed by GMP.  Every quantity in the library that is
// compared or ordered goes through this type; there is no floating point.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace omega {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Accepts "p", "-p", "p/q" with decimal integers; the result is canonical.
Rational parse_rational(std::string_view text);

// "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rational& q);

// 2^e for any integer e.
Rational pow2(long e);

Rational abs(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace omega
