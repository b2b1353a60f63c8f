#pragma once

#include "omega/checks/rng.hpp"
#include "omega/checks/substitution_oracle.hpp"
#include "omega/field.hpp"

namespace omega::checks {

struct FieldSampleShape {
  std::size_t height = 3;      // variables a0..a{height-1}
  unsigned degree = 4;         // per-variable exponent bound
  std::size_t max_terms = 3;   // per numerator / denominator
  long coef_bound = 100;       // |numerator|, denominator of each coefficient
};

Rational random_rational(Rng& rng, long bound);
Polynomial random_polynomial(Rng& rng, const FieldSampleShape& shape);
// Nonzero with probability one: a zero draw is replaced by a constant.
FieldElement random_element(Rng& rng, const FieldSampleShape& shape);
FieldElement random_nonzero(Rng& rng, const FieldSampleShape& shape);

RawFraction to_raw(const FieldElement& x);

}  // namespace omega::checks
