#include "doctest.h"

#include "omega/checks/rng.hpp"
#include "omega/uniformity.hpp"

using namespace omega;

namespace {

// Point k of the convergent sequence sits at 1/k, point 0 at 0.
Rational pos(std::size_t k) { return k == 0 ? Rational(0) : Rational(1, k); }

AlphaTruncation A(std::vector<unsigned long> v) { return AlphaTruncation{std::move(v), std::nullopt}; }

}  // namespace

TEST_CASE("spaces validate") {
  MetricSpace s = convergent_sequence(30);
  CHECK_NOTHROW(s.validate());
  CHECK(s.size() == 31);
  CHECK(s.d[16][30] == Rational(1, 16) - Rational(1, 30));
  CHECK_NOTHROW(metric_fan(3, 6).validate());
  MetricSpace bad = convergent_sequence(3);
  bad.d[1][2] = 5;
  bad.d[2][1] = 5;
  CHECK_THROWS_AS(bad.validate(), UniformityError);
  MetricSpace uncovered = convergent_sequence(3, {{1}});
  CHECK_THROWS_AS(uncovered.validate(), UniformityError);
}

TEST_CASE("u_alpha membership examples") {
  MetricSpace s = convergent_sequence(100);
  CHECK(u_alpha_member(s, A({3}), 16, 32));
  CHECK_FALSE(u_alpha_member(s, A({3}), 1, 2));
  for (std::size_t x = 0; x <= 100; x += 7) CHECK(u_alpha_member(s, A({20}), x, x));
  CHECK(dyadic(3) == Rational(1, 8));

  MetricSpace two = convergent_sequence(10, {{0}, {0, 2}});
  CHECK_THROWS_AS(u_alpha_member(two, A({3}), 1, 1), UniformityError);
  CHECK(u_alpha_member(two, AlphaTruncation{{3}, 1}, 2, 3));  // near (1/2, 1/2) within 1/2

  // Against the positions directly: K_1 = {0} gives max(x, y) < 2^-a.
  for (unsigned long a = 0; a <= 7; ++a)
    for (std::size_t x = 0; x <= 100; x += 3)
      for (std::size_t y = 0; y <= 100; y += 5) {
        bool want = x == y || std::max(pos(x), pos(y)) < dyadic(a);
        CHECK(u_alpha_member(s, A({a}), x, y) == want);
      }
}

TEST_CASE("u_alpha entourages are reflexive, symmetric and monotone") {
  MetricSpace s = convergent_sequence(40, {{0}, {0, 1}, {0, 2}, {0, 3}});
  s.validate();
  checks::Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    AlphaTruncation a, b;
    for (int n = 0; n < 4; ++n) {
      a.values.push_back(rng.below(7));
      b.values.push_back(a.values.back() + rng.below(3));
    }
    Entourage ua = u_alpha(s, a), ub = u_alpha(s, b);
    CHECK(ua.reflexive());
    CHECK(ua.symmetric());
    CHECK(ub.subset_of(ua));
    CHECK(base_monotone_check(s, a, b).holds);
    CHECK(base_monotone_check(s, a, a).holds);
  }
  CHECK_THROWS_AS(base_monotone_check(s, A({2, 2, 2, 2}), A({1, 2, 2, 2})), UniformityError);
}

TEST_CASE("cofinal search") {
  MetricSpace s = convergent_sequence(100);
  DiagonalNbhd uniform{std::vector<Rational>(s.size(), Rational(1, 10))};
  CofinalSearch r = base_cofinal_search(s, uniform);
  REQUIRE(r.alpha);
  CHECK(r.alpha->values == std::vector<unsigned long>{4});
  CHECK(u_alpha(s, *r.alpha).subset_of(uniform.pairs(s)));

  // O cuts every off-diagonal pair at the isolated point 1/2 (point 2).
  DiagonalNbhd tight = uniform;
  tight.radii[2] = Rational(1, 1000);
  for (std::size_t c = 0; c < s.size(); ++c)
    if (c != 2 && s.d[c][2] < Rational(1, 10)) tight.radii[c] = std::min(tight.radii[c], Rational(s.d[c][2]));
  Entourage o = tight.pairs(s);
  for (std::size_t x = 0; x < s.size(); ++x)
    if (x != 2) CHECK_FALSE(o.contains(x, 2));
  CofinalSearch t = base_cofinal_search(s, tight);
  REQUIRE(t.alpha);
  CHECK(u_alpha(s, *t.alpha).subset_of(o));

  DiagonalNbhd tiny{std::vector<Rational>(s.size(), dyadic(70))};
  CofinalSearch f = base_cofinal_search(s, tiny, 64);
  CHECK_FALSE(f.alpha);
  CHECK(f.resolution == 64);

  auto c = composition_search(s, *r.alpha);
  REQUIRE(c);
  CHECK(*c <= 2);
}

TEST_CASE("countable base") {
  CountableSpace one{{"p"}, {{{0}}}};
  one.validate();
  CHECK(countable_base(one, {7}) == Entourage::diagonal(1));

  const std::size_t n = 50;
  CountableSpace s = convergent_countable(n);
  s.validate();
  for (unsigned long top = 0; top <= n; top += 5) {
    std::vector<unsigned long> f(n + 1, 3);
    f[n] = top;
    Entourage e = countable_base(s, f);
    CHECK(e.reflexive());
    CHECK(e.symmetric());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) CHECK(e.contains(a, b) == (a == b || (a >= top && b >= top)));
    for (std::size_t a = 0; a < n; ++a) CHECK(e.contains(a, n) == (a >= top));
  }

  checks::Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<unsigned long> f(n + 1), g(n + 1);
    for (std::size_t x = 0; x <= n; ++x) {
      f[x] = rng.below(60);
      g[x] = f[x] + rng.below(10);
    }
    CHECK(countable_base(s, g).subset_of(countable_base(s, f)));
  }
  CHECK_THROWS_AS(countable_base(s, {1, 2}), UniformityError);
  CountableSpace broken{{"p", "q"}, {{{0}, {0, 1}}, {{1}}}};
  CHECK_THROWS_AS(broken.validate(), UniformityError);
}
