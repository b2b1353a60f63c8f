#include "doctest.h"

#include "omega/checks/rng.hpp"
#include "omega/order.hpp"

#include <algorithm>

using namespace omega;

namespace {

FinitePoset subsets_of(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) names.push_back("s" + std::to_string(m));
  return FinitePoset::from_predicate(names, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

PosetMap total(const std::vector<std::size_t>& v) { return PosetMap(v.begin(), v.end()); }

// Codes of the prefixes of a branch, straight from the bijection: the code
// of w is sum over i of 2^i over the bits of 1w, minus one.
std::set<Integer> oracle_codes(const Branch& b, std::size_t depth) {
  std::set<Integer> out;
  Integer x = 1;
  out.insert(0);
  for (std::size_t i = 0; i < depth; ++i) {
    x = 2 * x + (b.bit(i) ? 1 : 0);
    out.insert(x - 1);
  }
  return out;
}

Branch random_branch(checks::Rng& rng, std::size_t max_size) {
  Branch b;
  const long total_size = rng.range(1, static_cast<long>(max_size));
  const long pre = rng.range(0, total_size - 1);
  for (long i = 0; i < pre; ++i) b.preperiod += rng.coin() ? '1' : '0';
  for (long i = pre; i < total_size; ++i) b.period += rng.coin() ? '1' : '0';
  return b;
}

}  // namespace

TEST_CASE("posets are validated") {
  CHECK_NOTHROW(FinitePoset({"x", "y"}, {{0, 0}, {1, 1}, {0, 1}}));
  CHECK_THROWS_AS(FinitePoset({"x", "y"}, {{0, 0}}), OrderError);
  CHECK_THROWS_AS(FinitePoset({"x", "y"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}), OrderError);
  CHECK_THROWS_AS(FinitePoset({"x", "y", "z"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}), OrderError);
  CHECK_THROWS_AS(FinitePoset({"x", "x"}, {{0, 0}, {1, 1}}), OrderError);
  FinitePoset c = FinitePoset::chain(4);
  CHECK(c.maximal() == std::vector<std::size_t>{3});
  CHECK(c.index("2") == 2);
  CHECK(subsets_of(2).maximal() == std::vector<std::size_t>{3});
}

TEST_CASE("monotone and cofinal checks") {
  FinitePoset p = subsets_of(3);
  std::vector<std::size_t> id(p.size());
  for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
  CHECK(check_monotone(total(id), p, p).holds);
  CHECK(check_cofinal(total(id), p, p).holds);

  FinitePoset c = FinitePoset::chain(4);
  PosetMap constant = total({1, 1, 1, 1});
  CHECK(check_monotone(constant, c, c).holds);
  MapVerdict v = check_cofinal(constant, c, c);
  CHECK_FALSE(v.holds);
  CHECK(v.witness == std::vector<std::size_t>{2});
  MapVerdict m = check_monotone(total({0, 2, 1, 3}), c, c);
  CHECK_FALSE(m.holds);
  CHECK(m.witness == std::vector<std::size_t>{1, 2});

  CHECK_THROWS_AS(check_monotone(PosetMap{0, std::nullopt, 1, 2}, c, c), PartialMap);
  CHECK_THROWS_AS(check_cofinal(total({0, 1}), c, c), PartialMap);
  CHECK_THROWS_AS(check_cofinal(total({0, 1, 2, 9}), c, c), PartialMap);
}

TEST_CASE("semilattice extension") {
  std::vector<PointSet> v = {{1, 2}, {2, 3}, {1, 2, 3, 4}};
  CHECK(semilattice_extend(v, {0}) == PointSet{1, 2});
  CHECK(semilattice_extend(v, {0, 1}) == PointSet{2});
  CHECK_THROWS_AS(semilattice_extend(v, {}), OrderError);
  CHECK(semilattice_extend(v, {}, PointSet{9}) == PointSet{9});
  CHECK_THROWS_AS(semilattice_extend(v, {5}), OrderError);

  // Antitone, over every pair of index sets.
  for (std::size_t s = 1; s < 8; ++s)
    for (std::size_t t = 1; t < 8; ++t) {
      if ((s & ~t) != 0) continue;
      IndexSet a, b;
      for (std::size_t k = 0; k < 3; ++k) {
        if (s >> k & 1) a.insert(k);
        if (t >> k & 1) b.insert(k);
      }
      PointSet ra = semilattice_extend(v, a), rb = semilattice_extend(v, b);
      CHECK(std::includes(ra.begin(), ra.end(), rb.begin(), rb.end()));
    }

  SemilatticeInstance inst = semilattice_instance(v);
  CHECK(inst.domain.size() == 7);
  CHECK(check_monotone(inst.map, inst.domain, inst.target).holds);
  CHECK(check_cofinal(inst.map, inst.domain, inst.target).holds);
  // The generated family: {1,2}, {2,3}, {1,2,3,4}, {2}.
  CHECK(inst.family.size() == 4);

  checks::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<PointSet> w(static_cast<std::size_t>(rng.range(3, 4)));
    for (auto& s : w)
      for (long p = 0; p < 6; ++p)
        if (rng.coin()) s.insert(p);
    SemilatticeInstance in = semilattice_instance(w);
    CHECK(check_monotone(in.map, in.domain, in.target).holds);
    CHECK(check_cofinal(in.map, in.domain, in.target).holds);
  }
}

TEST_CASE("branches and prefix codes") {
  CHECK(prefix_code("") == 0);
  CHECK(prefix_code("0") == 1);
  CHECK(prefix_code("1") == 2);
  CHECK(prefix_code("00") == 3);
  CHECK(prefix_code("11") == 6);
  for (int k = 0; k < 200; ++k) CHECK(prefix_code(prefix_decode(k)) == k);

  Branch b = parse_branch("01(10)");
  CHECK(b.prefix(7) == "0110101");
  CHECK(parse_branch("011(01)").canonical() == b);
  CHECK(parse_branch("0(1111)").canonical().to_string() == "0(1)");
  CHECK(parse_branch("1(1111)").canonical().to_string() == "(1)");
  CHECK(same_sequence(parse_branch("(0101)"), parse_branch("0(10)")));
  CHECK_FALSE(same_sequence(parse_branch("(01)"), parse_branch("(10)")));
  CHECK_THROWS_AS(parse_branch("01"), OrderError);
  CHECK_THROWS_AS(parse_branch("0()"), OrderError);
  CHECK_THROWS_AS(parse_branch("(2)"), OrderError);
  CHECK(disambiguation_depth({parse_branch("01(10)"), parse_branch("(011)")}) == 2 + 6 + 3);

  // Canonical forms agree with long prefix comparison.
  checks::Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    Branch x = random_branch(rng, 6), y = random_branch(rng, 6);
    CHECK(same_sequence(x, y) == (x.prefix(200) == y.prefix(200)));
  }
}

TEST_CASE("ad_join examples") {
  std::vector<Branch> fam = {parse_branch("(0)"), parse_branch("(1)"), parse_branch("(01)")};
  const std::size_t d = disambiguation_depth(fam);
  CHECK(ad_join(fam, {0}, d).leq(ad_join(fam, {0, 1}, d)));
  CHECK_FALSE(ad_join(fam, {0}, d).leq(ad_join(fam, {1}, d)));
  CHECK_FALSE(ad_join(fam, {1}, d).leq(ad_join(fam, {0}, d)));
  CHECK_FALSE(ad_join(fam, {0, 2}, d).leq(ad_join(fam, {0, 1}, d)));
  CHECK(ad_join(fam, {}, d).prefixes.empty());
  CHECK_THROWS_AS(ad_join(fam, {0}, d - 1), OrderError);
  CHECK_THROWS_AS(ad_join({parse_branch("(0)"), parse_branch("0(0)")}, {0}, 10), OrderError);
  CHECK_THROWS_AS(ad_join(fam, {3}, d), OrderError);
  // Codes match the bijection computed independently.
  std::set<Integer> want = oracle_codes(fam[0], d);
  auto got = ad_join(fam, {0}, d).codes();
  CHECK(std::set<Integer>(got.begin(), got.end()) == want);
}

TEST_CASE("ad_join is an order embedding on random families") {
  checks::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Branch> fam;
    const std::size_t want = static_cast<std::size_t>(rng.range(2, 16));
    while (fam.size() < want) {
      Branch b = random_branch(rng, 8);
      bool fresh = true;
      for (const auto& f : fam) fresh = fresh && !same_sequence(f, b);
      if (fresh) fam.push_back(b);
    }
    const std::size_t d = disambiguation_depth(fam);
    for (int pair = 0; pair < 40; ++pair) {
      IndexSet s, t;
      for (std::size_t k = 0; k < fam.size(); ++k) {
        if (rng.below(3) == 0) s.insert(k);
        if (rng.below(2) == 0) t.insert(k);
      }
      CHECK(ad_join(fam, s, d).leq(ad_join(fam, t, d)) == branch_subset(fam, s, t));
    }
  }
}

TEST_CASE("tukey_to_monotone examples") {
  FinitePoset c = FinitePoset::chain(5);
  ChainMap id = {0, 1, 2, 3, 4};
  std::vector<std::size_t> f = tukey_to_monotone(id, c);
  CHECK(f == std::vector<std::size_t>{1, 2, 3, 4, 4});
  CHECK(check_monotone(total(f), c, c).holds);
  CHECK(check_cofinal(total(f), c, c).holds);

  // Subsets of {0..3}; g(eta) = {0..eta-1}.
  FinitePoset p = subsets_of(4);
  ChainMap g = {0, 1, 3, 7, 15};
  std::vector<std::size_t> h = tukey_to_monotone(g, p);
  FinitePoset tau = FinitePoset::chain(5);
  for (std::size_t a = 0; a < 16; ++a) {
    std::size_t len = 0;
    while (len < 4 && (a >> len & 1)) ++len;
    CHECK(h[a] == std::min<std::size_t>(4, len + 1));
  }
  CHECK(check_monotone(total(h), p, tau).holds);
  CHECK(check_cofinal(total(h), p, tau).holds);
  auto cert = find_tukey_certificate(g, p);
  REQUIRE(cert);
  CHECK(check_tukey_certificate(g, p, *cert));
  CHECK_FALSE(check_tukey_certificate(g, p, TukeyCertificate{{0, 0, 0, 0}}));

  // Constant g: two values only.
  std::vector<std::size_t> k = tukey_to_monotone({5, 5, 5, 5}, p);
  CHECK(std::set<std::size_t>(k.begin(), k.end()) == std::set<std::size_t>{0, 3});
  // The capped formula reaches the top, so on the truncation this map is
  // cofinal and monotone.
  const FinitePoset four = FinitePoset::chain(4);
  CHECK(check_monotone(total(k), p, four).holds);
  CHECK(check_cofinal(total(k), p, four).holds);
  CHECK_THROWS_AS(tukey_to_monotone({}, p), PartialMap);
  CHECK_THROWS_AS(tukey_to_monotone({16}, p), PartialMap);
}

TEST_CASE("sequences of naturals") {
  FnSeq a({3, 1, 4, 0, 0});
  CHECK(a.horizon() == 3);
  CHECK(a == FnSeq({3, 1, 4}));
  CHECK(a.at(10) == 0);
  CHECK(parse_fnseq("3 1 4") == a);
  CHECK(parse_fnseq("3 1 4 ; 2") == FnSeq({3, 1, 4}, 2));
  CHECK_THROWS_AS(parse_fnseq("3 -1"), OrderError);
  CHECK(a.leq(FnSeq({3, 2, 4})));
  CHECK_FALSE(a.leq(FnSeq({3, 0, 9})));
  CHECK_FALSE(FnSeq(std::vector<unsigned long>{}, 2).leq(FnSeq({5, 5, 5}, 1)));
  CHECK(a.join(FnSeq({0, 7}, 1)) == FnSeq({3, 7, 4}, 1));
  CHECK(a.to_string() == "[3, 1, 4, .., then 0]");
}

TEST_CASE("diagonal witness") {
  std::vector<FnSeq> a = {FnSeq({0, 1}), FnSeq({2, 0})};
  FnSeq z = diagonal_witness(a);
  CHECK(z == FnSeq({1, 1}));
  CHECK(check_diagonal(z, a));
  CHECK_FALSE(z.leq_upto(a[0], 2));
  CHECK_FALSE(z.leq_upto(a[1], 2));
  CHECK(diagonal_witness({FnSeq({5})}) == FnSeq({6}));
  std::vector<FnSeq> zeros(4, FnSeq());
  CHECK(diagonal_witness(zeros) == FnSeq({1, 1, 1, 1}));
  CHECK_FALSE(check_diagonal(FnSeq({1, 0}), a));
}

TEST_CASE("box neighbourhoods") {
  BoxNbhd box(FnSeq({1, 2, 4}, 1));
  CHECK(box.contains({{1, Rational(2, 5)}, {2, Rational(1, 10)}}));
  CHECK_FALSE(box.contains({{1, Rational(1, 2)}}));
  CHECK_FALSE(box.contains({{0, Rational(-1)}}));
  CHECK(box.contains({}));
  CHECK_THROWS_AS(BoxNbhd(FnSeq({1, 0, 2}, 1)), OrderError);
  CHECK_THROWS_AS(BoxNbhd(FnSeq({1, 2})), OrderError);

  std::vector<FnSeq> family;
  for (unsigned long k = 1; k <= 2000; k *= 10) family.push_back(FnSeq({k}, 1));
  BoxCertificate c = box_unbounded_cert(family, 0, 1000);
  CHECK(c.members == std::vector<std::size_t>{3});
  CHECK(c.bound == Rational(1, 1000));
  CHECK(certificate_forces(c, family, {{0, Rational(1, 1001)}}));
  CHECK(certificate_forces(c, family, {{0, Rational(1, 1000)}}));  // outside the box
  CHECK_THROWS_AS(box_unbounded_cert(family, 0, 5000), OrderError);
}
