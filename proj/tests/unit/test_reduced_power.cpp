#include "doctest.h"

#include "omega/checks/rng.hpp"
#include "omega/reduced_power.hpp"

using namespace omega;

namespace {

RationalFunction R(const char* s) { return parse_rational_function(s); }
EventualSeq T(const char* s) { return EventualSeq({}, R(s)); }

// Sign of x - y read off exact values far past every root of the small
// test tails, independently of compare_ev.
int far_sign(const EventualSeq& x, const EventualSeq& y) {
  int s = sgn(x.at(100000) - y.at(100000));
  for (std::size_t i = 100001; i < 100020; ++i) REQUIRE(sgn(x.at(i) - y.at(i)) == s);
  return s;
}

// Tails with numerator coefficients in [-9, 9] and denominators that are
// products of (n + c), c in [0, 5], so there is no pole at n >= 1.
EventualSeq random_seq(checks::Rng& rng) {
  std::vector<Rational> num;
  const long deg = rng.range(0, 2);
  for (long k = 0; k <= deg; ++k) num.push_back(rng.range(-9, 9));
  UPoly den(1);
  for (long k = rng.range(0, 2); k > 0; --k) den = den * UPoly({Rational(rng.range(0, 5)), Rational(1)});
  std::vector<Rational> prefix;
  for (long k = rng.range(0, 3); k > 0; --k) prefix.push_back(Rational(rng.range(-9, 9), rng.range(1, 9)));
  return EventualSeq(prefix, RationalFunction(UPoly(num), den));
}

std::strong_ordering ord(int s) { return s == 0 ? std::strong_ordering::equal : s > 0 ? std::strong_ordering::greater : std::strong_ordering::less; }

}  // namespace

TEST_CASE("rational functions") {
  CHECK(R("(n^2 - 1)/(n - 1)") == R("n + 1"));
  CHECK(R("1/(2*n)").to_string() == "(1/2)/n");
  CHECK(R(R("(n + 1)/(n^2 - 2)").to_string().c_str()) == R("(n + 1)/(n^2 - 2)"));
  CHECK(R("n - 3").eventual_sign() > 0);
  CHECK(R("3 - n").eventual_sign() < 0);
  CHECK(R("(n - 10)/(n + 1)").settled_from() > 10);
  CHECK_THROWS_AS(R("1/(n - n)"), std::domain_error);
  CHECK_THROWS_AS(R("m"), ParseError);
}

TEST_CASE("eventual sequences validate tails and normalize prefixes") {
  CHECK_THROWS_AS(EventualSeq({}, R("1/(n - 3)")), MalformedTail);
  CHECK_NOTHROW(EventualSeq({1, 2, 3}, R("1/(n - 3)")));
  CHECK_NOTHROW(EventualSeq({}, R("1/(n^2 - 2)")));
  EventualSeq a({Rational(1, 2), 7}, R("1/n"));
  CHECK(a.prefix().size() == 2);
  EventualSeq b({1, Rational(1, 2)}, R("1/n"));
  CHECK(b.prefix().empty());
  CHECK(b == T("1/n"));
  CHECK(a.at(1) == Rational(1, 2));
  CHECK(a.at(3) == Rational(1, 3));
}

TEST_CASE("compare_ev examples") {
  CHECK(compare_ev(T("1/n"), T("2/n")) < 0);
  EventualSeq x({5, -3}, R("n/(n + 1)"));
  CHECK(compare_ev(x, x) == 0);
  CHECK(compare_ev(T("1/n"), Rational(1, 1000)) < 0);
  CHECK(compare_ev(T("1/n"), Rational(0)) > 0);
  // Cofinitely equal sequences are equivalent.
  CHECK(compare_ev(EventualSeq({9, 9, 9}, R("n")), T("n")) == 0);
}

TEST_CASE("compare_ev agrees with far evaluation and is a total order") {
  checks::Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    EventualSeq x = random_seq(rng), y = random_seq(rng), z = random_seq(rng);
    CHECK(compare_ev(x, y) == ord(far_sign(x, y)));
    CHECK((compare_ev(x, y) < 0) == (compare_ev(y, x) > 0));
    if (compare_ev(x, y) <= 0 && compare_ev(y, z) <= 0) CHECK(compare_ev(x, z) <= 0);
  }
}

TEST_CASE("star_metric examples") {
  EventualSeq x({3}, R("n^2/(n + 4)"));
  CHECK(star_metric(x, x) == EventualSeq());
  CHECK(star_metric(T("1/n"), T("2/n")) == T("1/n"));
  CHECK(star_metric(T("n"), Rational(0)) == EventualSeq(Rational(1)));
  // The cap is applied coordinatewise, including before the tail settles.
  EventualSeq d = star_metric(T("3/n"), Rational(0));
  CHECK(d.at(1) == 1);
  CHECK(d.at(2) == 1);
  CHECK(d.at(3) == 1);
  CHECK(d.at(4) == Rational(3, 4));
  CHECK(compare_ev(d, T("3/n")) == 0);
}

TEST_CASE("star_metric axioms and translation invariance") {
  checks::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    EventualSeq x = random_seq(rng), y = random_seq(rng), z = random_seq(rng);
    StarValue dxy = star_metric(x, y);
    CHECK(dxy == star_metric(y, x));
    CHECK((compare_ev(dxy, Rational(0)) == 0) == equivalent(x, y));
    CHECK(compare_ev(dxy, Rational(1)) <= 0);
    CHECK(compare_ev(star_metric(x, z), dxy + star_metric(y, z)) <= 0);
    CHECK(star_metric(x + z, y + z) == dxy);
    for (std::size_t k = 1; k < 12; ++k) CHECK(dxy.at(k) == std::min(omega::abs(x.at(k) - y.at(k)), Rational(1)));
  }
}

TEST_CASE("interleave: single instance and a cut at 5") {
  EventualSeq g1({4}, R("1/n"));
  InterleaveResult one = interleave({{g1, Rational(1, 2)}}, {});
  CHECK(one.h == g1);
  REQUIRE(one.certificates.size() == 1);
  CHECK(one.certificates[0].holds_from == 1);

  EventualSeq a = T("1/(n + 1)");
  EventualSeq b = T("1/(n + 2)");
  InterleaveResult two = interleave({{a, T("1/n")}, {b, T("1/(2*n)")}}, {5});
  for (std::size_t i = 1; i < 5; ++i) CHECK(two.h.at(i) == a.at(i));
  for (std::size_t i = 5; i < 40; ++i) CHECK(two.h.at(i) == b.at(i));
}

TEST_CASE("interleave: geometric partial sums") {
  std::vector<Ball> balls;
  std::vector<std::size_t> cuts;
  for (long n = 1; n <= 20; ++n) {
    std::vector<Rational> prefix;
    for (long i = 1; i <= n; ++i) prefix.push_back(1 - pow2(-i));
    balls.push_back({EventualSeq(prefix, RationalFunction(1 - pow2(-n))), pow2(-n + 2)});
    if (n > 1) cuts.push_back(static_cast<std::size_t>(3 * n));
  }
  InterleaveResult r = interleave(balls, cuts);
  REQUIRE(r.certificates.size() == 20);
  for (std::size_t n = 0; n < 20; ++n) {
    const auto& c = r.certificates[n];
    CHECK(compare_ev(c.distance, balls[n].radius) < 0);
    // Independent spot check past the reported index.
    for (std::size_t i = c.holds_from; i < c.holds_from + 80; ++i)
      CHECK(std::min(omega::abs(r.h.at(i) - balls[n].center.at(i)), Rational(1)) < balls[n].radius.at(i));
  }
}

TEST_CASE("interleave: nesting violations name the instance") {
  std::vector<Ball> balls = {{Rational(0), Rational(1)}, {Rational(0), Rational(1, 2)}, {Rational(1, 4), Rational(1, 2)}};
  try {
    interleave(balls, {2, 3});
    FAIL("expected a nesting error");
  } catch (const NestingError& e) {
    CHECK(e.instance() == 2);
  }
  CHECK_THROWS_AS(interleave({{Rational(0), Rational(0)}}, {}), NestingError);
  CHECK_THROWS_AS(interleave(balls, {3}), std::invalid_argument);
  CHECK_THROWS_AS(interleave(balls, {3, 3}), std::invalid_argument);
}

TEST_CASE("baire witness examples") {
  Ball o{Rational(0), Rational(1)};
  CHECK(baire_witness(o, {}).h == EventualSeq());

  BaireResult r = baire_witness(o, {{Rational(0), Rational(1, 4)}});
  StarValue d = star_metric(r.h, Rational(0));
  CHECK(compare_ev(d, Rational(1, 4)) > 0);
  CHECK(compare_ev(d, Rational(1)) < 0);

  std::vector<Ball> chain;
  for (long j = 0; j < 5; ++j) chain.push_back({Rational(0), pow2(-j - 1)});
  BaireResult c = baire_witness({Rational(0), Rational(1)}, chain);
  REQUIRE(c.avoids.size() == 5);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(compare_ev(c.avoids[j].distance, chain[j].radius) > 0);
    CHECK(compare_ev(star_metric(c.h, chain[j].center), chain[j].radius) > 0);
  }
  CHECK(compare_ev(star_metric(c.h, Rational(0)), Rational(1)) < 0);

  CHECK_THROWS_AS(baire_witness(o, {{Rational(0), Rational(1)}}), InfeasibleAvoidance);
  CHECK_THROWS_AS(baire_witness({Rational(0), Rational(1, 8)}, {{Rational(0), Rational(1, 2)}}), InfeasibleAvoidance);
}

TEST_CASE("baire witness with infinitesimal radii") {
  Ball o{T("1/n"), T("1/n")};
  std::vector<Ball> f = {{T("1/n"), T("1/(4*n)")}, {T("3/(2*n)"), T("1/n^2")}};
  BaireResult r = baire_witness(o, f);
  CHECK(compare_ev(star_metric(r.h, o.center), o.radius) < 0);
  for (std::size_t j = 0; j < f.size(); ++j) CHECK(compare_ev(star_metric(r.h, f[j].center), f[j].radius) > 0);
}
