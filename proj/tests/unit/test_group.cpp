#include "doctest.h"

#include "omega/group.hpp"

using namespace omega;

namespace {

const FreeGroup F2 = FreeGroup::standard(2);
const FreeGroup F1 = FreeGroup::standard(1);

Word W(const char* s) { return F2.parse(s); }
SubsetSpec S(std::initializer_list<const char*> ws) {
  SubsetSpec s;
  for (const char* w : ws) s.insert(W(w));
  return s;
}

// Brute-force truncation: every ordered choice of distinct indices forming
// {1..n}, every choice of elements, n <= N.
SubsetSpec brute_sym(const std::vector<SubsetSpec>& bs, std::size_t n_max) {
  SubsetSpec out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    do {
      std::vector<SubsetSpec> ordered;
      for (auto k : perm) ordered.push_back(bs[k]);
      SubsetSpec p{Word()};
      for (const auto& b : ordered) {
        SubsetSpec next;
        for (const auto& x : p)
          for (const auto& y : b) next.insert(x * y);
        p = next;
      }
      out.insert(p.begin(), p.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("reduce examples") {
  CHECK(reduce({{0, 1}, {1, 1}, {1, -1}}, 2) == W("a"));
  CHECK(reduce({}, 2).is_identity());
  CHECK(reduce({{0, -1}, {0, 1}, {0, 1}, {1, 1}}, 2) == W("a b"));
  CHECK_THROWS_AS(reduce({{2, 1}}, 2), GroupError);
  Word w = reduce({{0, 1}, {1, -1}, {1, 1}, {0, -1}, {1, 1}}, 2);
  CHECK(w == W("b"));
  CHECK(F2.parse(F2.format(W("a b^-1 a^-1"))) == W("a b^-1 a^-1"));
  CHECK(F2.format(Word()) == "e");
  CHECK(W("a^-2 b^3").length() == 5);
  CHECK_THROWS_AS(W("c"), GroupError);
  CHECK_THROWS_AS(W("a^x"), GroupError);
}

TEST_CASE("words are ordered shortlex and enumerated in order") {
  CHECK(W("b") < W("a a"));
  CHECK(W("a") < W("a^-1"));
  CHECK(W("a^-1") < W("b"));
  auto words = F2.words_up_to(3);
  CHECK(words.size() == 1 + 4 + 12 + 36);
  CHECK(std::is_sorted(words.begin(), words.end()));
  CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
}

TEST_CASE("product_set examples") {
  CHECK(product_set({S({"a"}), S({"b"})}) == S({"a b"}));
  CHECK(product_set({S({"a b"}), S({"b^-1"})}) == S({"a"}));
  CHECK(product_set({S({"a", "a^-1"}), S({"a", "a^-1"})}) == S({"a a", "e", "a^-1 a^-1"}));
  std::vector<SubsetSpec> nine(9, S({"a"}));
  CHECK_THROWS_AS(product_set(nine), GroupError);
  CHECK(product_set(nine, SymConfig{9}) == S({"a^9"}));
}

TEST_CASE("sym_member examples") {
  std::vector<SubsetSpec> bs = {S({"a"}), S({"b"})};
  SymResult r = sym_member(W("b a"), bs, 2);
  REQUIRE(r.found);
  CHECK(r.n == 2);
  CHECK(r.order == std::vector<std::size_t>{2, 1});
  CHECK(r.factors == std::vector<Word>{W("b"), W("a")});
  CHECK(check_certificate(W("b a"), bs, r));

  SymResult e = sym_member(Word(), {S({"e", "a"})}, 1);
  REQUIRE(e.found);
  CHECK(e.n == 1);
  CHECK(e.order == std::vector<std::size_t>{1});
  CHECK(e.factors == std::vector<Word>{Word()});

  SymResult no = sym_member(W("a^3"), {S({"a"}), S({"a"})}, 2);
  CHECK_FALSE(no.found);
  CHECK(no.horizon == 2);

  CHECK(sym_member(Word(), {S({"a"})}, 0).found);
  CHECK_FALSE(sym_member(W("a"), {S({"a"})}, 0).found);
  CHECK_THROWS_AS(sym_member(W("a"), {S({"a"})}, 2), GroupError);
}

TEST_CASE("sym_member and sym_set agree with brute force") {
  std::vector<SubsetSpec> bs = {S({"a", "b^-1"}), S({"a b", "e"}), S({"b a^-1", "a^-1"})};
  for (std::size_t n = 1; n <= 3; ++n) {
    SubsetSpec all = brute_sym(bs, n);
    for (const auto& w : F2.words_up_to(5)) {
      SymResult r = sym_member(w, bs, n);
      CHECK(r.found == (all.count(w) > 0));
      if (r.found) CHECK(check_certificate(w, bs, r));
    }
    SubsetSpec trimmed;
    for (const auto& w : all)
      if (w.length() <= 3) trimmed.insert(w);
    CHECK(sym_set(bs, n, 3) == trimmed);
  }
}

TEST_CASE("v_phi examples") {
  PhiMap sq(SubsetSpec{F1.parse("a^2")});
  CHECK(v_phi(sq, {Word(), F1.parse("a")}) == SubsetSpec{F1.parse("a^2"), F1.parse("a^-2")});
  PhiMap unit(S({"e"}));
  CHECK(v_phi(unit, {Word(), W("a"), W("b a")}) == S({"e"}));
  PhiMap phi(S({"a"}));
  CHECK(v_phi(phi, {Word(), W("b")}) == S({"b^-1 a b", "b^-1 a^-1 b", "a", "a^-1"}));
  CHECK(is_symmetric(v_phi(phi, {W("a b"), W("b^-1")})));
}

TEST_CASE("Phi maps: exceptions, translation and pointwise order") {
  PhiMap phi(S({"a"}), {{W("b"), S({"a", "b"})}});
  CHECK(phi.at(W("b")) == S({"a", "b"}));
  CHECK(phi.at(W("a")) == S({"a"}));
  PhiMap t = phi.right_translate(W("a"));
  // Phi^h(g) = Phi(g h): the exception moves to b a^-1.
  CHECK(t.at(W("b a^-1")) == S({"a", "b"}));
  CHECK(t.at(W("b")) == S({"a"}));
  for (const auto& g : F2.words_up_to(3)) CHECK(t.at(g) == phi.at(g * W("a")));

  PhiMap big(S({"a", "a a"}), {{W("b"), S({"a", "b", "b b"})}});
  CHECK(pointwise_leq(phi, big));
  CHECK_FALSE(pointwise_leq(big, phi));
  PhiMap off(S({"a", "a a"}), {{W("a"), S({"b"})}});
  CHECK_FALSE(pointwise_leq(phi, off));
}

TEST_CASE("i(V) examples") {
  PairRelation diag{2, {{0, 0}, {1, 1}}};
  CHECK(i_of_entourage(diag) == S({"e"}));
  PairRelation xy{2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
  CHECK(i_of_entourage(xy) == S({"e", "a^-1 b", "b^-1 a", "a b^-1", "b a^-1"}));
  PairRelation bad{2, {{0, 0}, {1, 1}, {0, 1}}};
  CHECK_THROWS_AS(i_of_entourage(bad), GroupError);
  CHECK_THROWS_AS(i_of_entourage(PairRelation{2, {{0, 0}}}), GroupError);

  // Three points on a line at 0, 1, 3 with threshold 3/2: one close pair.
  std::vector<std::vector<Rational>> d = {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}};
  PairRelation v = threshold_relation(d, Rational(3, 2));
  CHECK(i_of_entourage(v).size() == 1 + 4 * 1);
  CHECK(i_of_entourage_abelian(v).size() == 1 + 2 * 1);
  PairRelation w = threshold_relation(d, Rational(5, 2));
  CHECK(i_of_entourage(w).size() == 1 + 4 * 2);
  CHECK(i_of_entourage(threshold_relation(d, 4)).size() == 1 + 4 * 3);
}

TEST_CASE("SIN base membership") {
  PairRelation xy{2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
  AbelianSet v1 = i_of_entourage_abelian(xy);
  CHECK(sin_base_member_abelian({1, -1}, {v1}, 1).found);
  AbelianResult no = sin_base_member_abelian({2, 0}, {AbelianSet{{1, -1}}}, 1);
  CHECK_FALSE(no.found);
  CHECK(sin_base_member_abelian({0, 0}, {}, 0).found);
  // Omitted summands count as zero.
  AbelianResult r = sin_base_member_abelian({1, -1}, {AbelianSet{{3, 3}}, AbelianSet{{-1, 1}}}, 2);
  REQUIRE(r.found);
  REQUIRE(r.summands.size() == 1);
  CHECK(r.summands[0].index == 2);
  CHECK(r.summands[0].sign == -1);
  AbelianResult two = sin_base_member_abelian({2, -2}, {AbelianSet{{1, -1}}, AbelianSet{{-1, 1}}}, 2);
  CHECK(two.found);
  CHECK(two.summands.size() == 2);

  CHECK(sin_base_member(Word(), {}, 0, {}).found);
  SymResult c = sin_base_member(W("b^-1 a b"), {S({"a"})}, 1, {W("b")});
  CHECK(c.found);
  CHECK_FALSE(sin_base_member(W("b^-1 a b"), {S({"a"})}, 1, {}).found);
}

TEST_CASE("Roelcke-Dierolf monotonicity") {
  std::vector<Word> samples = F2.words_up_to(6);
  std::set<Word> support = {Word(), W("b")};
  std::vector<PhiMap> phi = {PhiMap(S({"a"})), PhiMap(S({"a"}))};
  CHECK(rd_monotone_check(phi, phi, samples, 2, support).holds);
  std::vector<PhiMap> psi = {PhiMap(S({"a", "a a"})), PhiMap(S({"a", "a a"}))};
  MonotoneReport rep = rd_monotone_check(phi, psi, samples, 2, support);
  CHECK(rep.holds);
  CHECK(rep.checked == samples.size());
  std::vector<PhiMap> one_point = {PhiMap(S({"a"}), {{W("b"), S({"a", "b"})}}), PhiMap(S({"a"}))};
  CHECK(rd_monotone_check(phi, one_point, samples, 2, support).holds);
  CHECK_THROWS_AS(rd_monotone_check(psi, phi, samples, 2, support), GroupError);
}

TEST_CASE("intersection filter base") {
  ChainFilter f1{{S({"a"}), S({"a", "b"}), S({"a", "b", "a b"})}, 0};
  ChainFilter f2{{S({"b^-1"}), S({"b^-1", "a^-1"})}, 1};
  f1.validate();
  f2.validate();
  CHECK_THROWS_AS((ChainFilter{{S({"a", "b"}), S({"a"})}, 0}.validate()), GroupError);
  CHECK(intersection_base({f1, f2}, {{0}, {0, 0}}) == S({"a", "b^-1"}));
  CHECK(intersection_base({f1, f2}, {{5}, {0, 1}}) == S({"a", "b", "a b", "b^-1", "a^-1"}));
}
