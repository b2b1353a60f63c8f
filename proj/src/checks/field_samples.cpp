#include "omega/checks/field_samples.hpp"

namespace omega::checks {

Rational random_rational(Rng& rng, long bound) {
  Rational q(rng.range(-bound, bound), rng.range(1, bound));
  q.canonicalize();
  return q;
}

Polynomial random_polynomial(Rng& rng, const FieldSampleShape& shape) {
  std::vector<Term> terms;
  const std::size_t n = 1 + rng.below(shape.max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m;
    for (std::size_t j = 0; j < shape.height; ++j)
      if (rng.below(3) == 0) m[j] = static_cast<Monomial::Exponent>(rng.below(shape.degree + 1));
    terms.push_back({m, random_rational(rng, shape.coef_bound)});
  }
  return Polynomial::from_terms(std::move(terms));
}

FieldElement random_element(Rng& rng, const FieldSampleShape& shape) {
  Polynomial num = random_polynomial(rng, shape);
  Polynomial den = rng.below(3) == 0 ? Polynomial(random_rational(rng, shape.coef_bound)) : random_polynomial(rng, shape);
  if (den.is_zero()) den = Polynomial(1);
  return FieldElement::fraction(num, den, shape.height);
}

FieldElement random_nonzero(Rng& rng, const FieldSampleShape& shape) {
  FieldElement x = random_element(rng, shape);
  return x.is_zero() ? FieldElement(1).lifted(shape.height) : x;
}

namespace {

RawPoly raw(const Polynomial& p) {
  RawPoly out;
  for (const auto& t : p.terms()) {
    RawTerm r;
    for (std::size_t j = 0; j < kMaxVariables; ++j) r.exponents.push_back(t.mono[j]);
    while (!r.exponents.empty() && r.exponents.back() == 0) r.exponents.pop_back();
    r.coef = t.coef;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

RawFraction to_raw(const FieldElement& x) { return {raw(x.numerator()), raw(x.denominator())}; }

}  // namespace omega::checks
