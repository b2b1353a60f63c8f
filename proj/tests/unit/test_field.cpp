#include "doctest.h"

#include "omega/checks/field_samples.hpp"
#include "omega/checks/substitution_oracle.hpp"
#include "omega/field.hpp"

using namespace omega;
using omega::checks::oracle_compare;
using omega::checks::to_raw;

namespace {

FieldElement F(const char* s) { return parse_field(s); }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" -7 ") == -7);
  Rational q(-3, 9);
  q.canonicalize();
  CHECK(to_string(q) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(pow2(-3) == Rational(1, 8));
}

TEST_CASE("arithmetic examples") {
  CHECK((F("a0") + F("-a0")).is_zero());
  CHECK(F("(1+a0)*(1-a0)") == F("1 - a0^2"));
  CHECK(F("(1+a0)*(1-a0)").to_string() == "1 - a0^2");

  // div(1, 1+a1): multiply back to check, and the denominator's dominant
  // coefficient is 1.
  FieldElement q = FieldElement(1) / F("1+a1");
  CHECK(q.denominator() == F("1+a1").numerator());
  CHECK(q.denominator().dominant().coef == 1);
  CHECK(q * F("1+a1") == FieldElement(1));
  CHECK(q.to_string() == "1/(1 + a1)");
}

TEST_CASE("canonical form cancels common factors") {
  FieldElement x = F("(a0^2 - a1^2)/(a0 + a1)");
  CHECK(x == F("a0 - a1"));
  CHECK(x.denominator().is_one());
  FieldElement y = F("(2*a0 + 2)/(4*a0*a1 + 4*a1)");
  CHECK(y == F("1/(2*a1)"));
  CHECK(y.to_string() == "(1/2)/a1");
  // Denominator scaled to dominant coefficient 1: 1/(2 a1) = (1/2)/a1.
  CHECK(y.denominator() == F("a1").numerator());
  CHECK(y.numerator() == Polynomial(Rational(1, 2)));
}

TEST_CASE("printed form re-parses to the same element") {
  for (const char* s : {"3*a0 - a0^2", "(1 - a0)/(1 + a0)", "1/4*a0", "-a1^3*a0 + 7/3",
                        "(a0 + a1*a2)/(a2 - 5/7*a0^2)", "1/a0", "0"}) {
    FieldElement x = F(s);
    CHECK(F(x.to_string().c_str()) == x);
  }
}

namespace {

// a0^100 is beyond the default degree limit of 32.
struct RaisedDegreeLimit {
  FieldLimits saved = field_limits();
  RaisedDegreeLimit() { set_field_limits({saved.max_height, 128}); }
  ~RaisedDegreeLimit() { set_field_limits(saved); }
};

}  // namespace

TEST_CASE("compare examples") {
  RaisedDegreeLimit raised;
  CHECK(F("3*a0 - a0^2").sign() > 0);
  CHECK(compare(F("a0"), F("1/1000")) == std::strong_ordering::less);
  CHECK(compare(F("a1"), F("a0^100")) == std::strong_ordering::less);
  CHECK(compare(F("a0"), F("a0")) == std::strong_ordering::equal);
  CHECK(F("-a0") < F("0"));
  CHECK(F("1 - a0") < F("1"));
  CHECK(F("1 - a0") > F("999/1000"));
}

TEST_CASE("compare(a1, a0^100) agrees with the substitution oracle") {
  // a_j = t^(M^(j+1)) with M = 101: a1 -> t^10201, a0^100 -> t^10100; the
  // higher t-degree is the smaller positive element.
  checks::RawFraction a1{{{{0, 1}, 1}}, {{{}, 1}}};
  checks::RawFraction a0_100{{{{100}, 1}}, {{{}, 1}}};
  RaisedDegreeLimit raised;
  CHECK(oracle_compare(a1, a0_100) == std::strong_ordering::less);
  CHECK(compare(F("a1"), F("a0^100")) == oracle_compare(a1, a0_100));
}

TEST_CASE("invert") {
  CHECK(FieldElement(1).inverse() == FieldElement(1));
  FieldElement inv = F("a0").inverse();
  CHECK(inv == F("1/a0"));
  // 1/a0 exceeds every rational up to 10^3: sign(a0*n - 1) is negative.
  for (long n = -1000; n <= 1000; n += 7) CHECK(inv > FieldElement(Rational(n)));
  CHECK(inv > FieldElement(1000));
  CHECK(F("(1+a0)/(1-a0)").inverse() == F("(1-a0)/(1+a0)"));
  CHECK_THROWS_AS(FieldElement(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(F("1/(a0 - a0)"), DivisionByZero);
}

TEST_CASE("leading term and infinitesimality") {
  LeadingTerm lt = F("3*a0 - a0^2").leading_term();
  CHECK(lt.exponents == std::vector<long>{1});
  CHECK(lt.coefficient == 3);
  CHECK_FALSE(F("1 + a0").is_infinitesimal());
  CHECK(F("a1/a0").is_infinitesimal());
  CHECK_FALSE(F("a0/a1").is_infinitesimal());
  CHECK(F("a1/a0").leading_term().exponents == std::vector<long>{-1, 1});
  CHECK_THROWS_AS(FieldElement(0).leading_term(), FieldError);
}

TEST_CASE("is_infinitesimal agrees with substitution for a1/a0 and a0/a1") {
  // x is infinitesimal iff |x| < 1/k for every positive integer k; with
  // the oracle, compare against 1/1000 as a witness of smallness and 1000
  // as a witness of largeness.
  auto small = [](const char* s) {
    return oracle_compare(to_raw(F(s)), to_raw(FieldElement(Rational(1, 1000)))) ==
           std::strong_ordering::less;
  };
  CHECK(small("a1/a0"));
  CHECK_FALSE(small("a0/a1"));
}

TEST_CASE("mixed heights coerce to the larger one") {
  FieldElement x = F("a0") + F("a2");
  CHECK(x.height() == 3);
  CHECK(F("a0").height() == 1);
  CHECK((F("a0") * FieldElement(2)).height() == 1);
  CHECK(F("1").lifted(3).height() == 3);
  CHECK(F("1").lifted(3) == F("1"));
}

TEST_CASE("configuration limits") {
  CHECK_THROWS_AS(F("a0^33"), LimitExceeded);
  CHECK_NOTHROW(F("a0^32"));
  FieldLimits old = field_limits();
  set_field_limits({2, 32});
  CHECK_THROWS_AS(F("a2"), LimitExceeded);
  set_field_limits(old);
  CHECK_NOTHROW(F("a7"));
  CHECK_THROWS_AS(set_field_limits({9, 32}), std::invalid_argument);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(F("a8"), ParseError);
  CHECK_THROWS_AS(F("1 +"), ParseError);
  CHECK_THROWS_AS(F("(a0"), ParseError);
  CHECK_THROWS_AS(F("a0 a1"), ParseError);
  CHECK_THROWS_AS(F(""), ParseError);
}

TEST_CASE("polynomial gcd") {
  auto P = [](const char* s) { return F(s).numerator(); };
  CHECK(gcd(P("(a0+1)*(a1-2)"), P("(a0+1)*(a1+2)")) == P("a0+1"));
  CHECK(gcd(P("a0^2*a1"), P("a0*a1^3 + a0^2")) == P("a0"));
  CHECK(gcd(P("(a0*a1 + a2)*(a0 - a2)^2"), P("(a0*a1 + a2)*(a0 + a2)")) == P("a0*a1 + a2").normalized());
  CHECK(gcd(P("a0 + 1"), P("a1 + 1")).is_one());
  // Normalized so the most dominant coefficient (the constant) is 1.
  CHECK(gcd(Polynomial(), P("2*a0 + 4")) == P("1 + a0/2"));
}

TEST_CASE("random samples: the heuristic gcd matches the remainder-sequence gcd") {
  checks::Rng rng(4242);
  checks::FieldSampleShape shape;
  shape.height = 3;
  shape.degree = 3;
  for (int i = 0; i < 150; ++i) {
    Polynomial p = checks::random_polynomial(rng, shape);
    Polynomial q = checks::random_polynomial(rng, shape);
    Polynomial r = i % 3 == 0 ? Polynomial(1) : checks::random_polynomial(rng, shape);
    if (i % 5 == 0) r = r * r;
    CHECK(gcd(p * r, q * r) == gcd_prs(p * r, q * r));
  }
}

TEST_CASE("random samples: field laws and the substitution oracle") {
  checks::Rng rng(20261016);
  checks::FieldSampleShape shape;
  for (int i = 0; i < 500; ++i) {
    FieldElement a = checks::random_element(rng, shape);
    FieldElement b = checks::random_element(rng, shape);
    FieldElement c = checks::random_nonzero(rng, shape);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(c * c.inverse() == FieldElement(1));
    CHECK(compare(a, b) == oracle_compare(to_raw(a), to_raw(b)));
    if (a < b) CHECK(a + c < b + c);
  }
}

TEST_CASE("random samples: gcd recovers a planted common factor") {
  checks::Rng rng(77);
  checks::FieldSampleShape shape;
  shape.degree = 3;
  for (int i = 0; i < 200; ++i) {
    Polynomial p = checks::random_polynomial(rng, shape);
    Polynomial q = checks::random_polynomial(rng, shape);
    Polynomial r = checks::random_polynomial(rng, shape);
    if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
    Polynomial g = gcd(p * r, q * r);
    CHECK(g.divide_exact(r.normalized()).has_value());
    CHECK((p * r).divide_exact(g).has_value());
    CHECK((q * r).divide_exact(g).has_value());
  }
}
