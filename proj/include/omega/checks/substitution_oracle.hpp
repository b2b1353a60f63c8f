#pragma once

// Independent order oracle for the tower field.  Substituting
// a_j = t^(M^(j+1)) with M larger than every exponent present sends each
// monomial to a distinct power of a single infinitesimal t; the sign of a
// polynomial is then the sign of its lowest-degree coefficient in t.
//
// Works from raw term lists and its own univariate arithmetic, so it shares
// nothing with the field's comparison path.

#include "omega/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace omega::checks {

struct RawTerm {
  std::vector<unsigned> exponents;  // one per variable
  Rational coef;
};
using RawPoly = std::vector<RawTerm>;

struct RawFraction {
  RawPoly num;
  RawPoly den;
};

// Univariate sparse polynomial in t: degree -> coefficient.
using TPoly = std::map<std::uint64_t, Rational>;

TPoly substitute(const RawPoly& p, std::uint64_t base);
TPoly multiply(const TPoly& a, const TPoly& b);
TPoly subtract(const TPoly& a, const TPoly& b);
int lowest_sign(const TPoly& p);

// Sign of a - b in the tower, decided purely by substitution.
std::strong_ordering oracle_compare(const RawFraction& a, const RawFraction& b);

}  // namespace omega::checks
