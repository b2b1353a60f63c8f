#include "omega/checks/suites.hpp"

#include "omega/checks/field_samples.hpp"
#include "omega/checks/group_lemmas.hpp"
#include "omega/checks/matrix_oracle.hpp"
#include "omega/checks/rng.hpp"
#include "omega/group.hpp"
#include "omega/matrix.hpp"
#include "omega/order.hpp"
#include "omega/reduced_power.hpp"
#include "omega/uniformity.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace omega::checks {

namespace {

std::string repro(const SuiteReport& r, const std::string& what) {
  return "seed=" + std::to_string(r.seed) + " case=" + std::to_string(r.cases) + " " + what;
}

// ------------------------------------------------------------- field

std::string str(const FieldElement& x) { return x.to_string(); }

}  // namespace

SuiteReport suite_field(std::uint64_t seed, unsigned scale) {
  SuiteReport rep = make_report("field-axioms", seed, scale);
  Rng master(seed);
  FieldSampleShape shape;  // height 3, degree 4
  const FieldElement zero(0), one(1);

  Rng laws = master.fork(1);
  const std::size_t samples = 10000 * scale;
  for (std::size_t i = 0; i < samples; ++i) {
    const FieldElement a = random_element(laws, shape);
    const FieldElement b = random_element(laws, shape);
    const FieldElement c = random_nonzero(laws, shape);
    const FieldElement ab = a * b;
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && ab * c == a * (b * c) && ab == b * a &&
              a * (b + c) == ab + a * c && a + zero == a && a * one == a && a + (-a) == zero && a - b == a + (-b) &&
              c * c.inverse() == one && (a / c) * c == a;
    // Order: trichotomy and antisymmetry of compare, transitivity, and
    // compatibility with + and *.
    const auto ab_cmp = compare(a, b), ba_cmp = compare(b, a), bc_cmp = compare(b, c), ac_cmp = compare(a, c);
    ok = ok && (ab_cmp == 0) == (a == b) && (ab_cmp < 0) == (ba_cmp > 0);
    if (ab_cmp <= 0 && bc_cmp <= 0) ok = ok && ac_cmp <= 0;
    if (ab_cmp < 0) ok = ok && a + c < b + c;
    ok = ok && ab.sign() == a.sign() * b.sign();
    if (c.sign() > 0 && ab_cmp < 0) ok = ok && a * c < b * c;
    rep.check(ok, "laws " + str(a) + " | " + str(b) + " | " + str(c),
              repro(rep, "field laws fail for a=" + str(a) + " b=" + str(b) + " c=" + str(c)));
  }

  // n a0 < 1 for every n: a0 is infinitesimal.
  const FieldElement a0 = FieldElement::variable(0);
  std::size_t archimedes_failures = 0;
  for (long n = 1; n <= 10000; ++n) {
    const FieldElement x = FieldElement(n) * a0;
    if (!(x < one && x > zero)) {
      ++archimedes_failures;
      rep.fail(repro(rep, std::to_string(n) + " a0 is not in (0, 1)"));
    }
  }
  rep.record("n a0 < 1 for n <= 10000: " + std::to_string(archimedes_failures) + " failures");
  rep.fact("non_archimedean_n", "10000");

  Rng pairs = master.fork(2);
  const std::size_t oracle_pairs = 1000 * scale;
  for (std::size_t i = 0; i < oracle_pairs; ++i) {
    const FieldElement a = random_element(pairs, shape);
    const FieldElement b = random_element(pairs, shape);
    const bool ok = compare(a, b) == oracle_compare(to_raw(a), to_raw(b));
    rep.check(ok, "oracle " + str(a) + " | " + str(b), repro(rep, "compare disagrees with substitution for a=" + str(a) + " b=" + str(b)));
  }
  rep.fact("law_samples", std::to_string(samples));
  rep.fact("oracle_pairs", std::to_string(oracle_pairs));
  return rep;
}

// ------------------------------------------------------------ matrix

SuiteReport suite_matrix(std::uint64_t seed, unsigned scale) {
  SuiteReport rep = make_report("matrix-shrink", seed, scale);
  Rng master(seed);
  const std::vector<std::string> fixed = {"1", "1/2", "3/7", "2", "a0", "a0^2", "a1/a0", "a0*a1", "1/3 - a0", "a2"};
  FieldSampleShape shape;
  shape.max_terms = 2;
  for (std::size_t n : {2u, 3u}) {
    Rng rng = master.fork(n);
    const std::size_t count = 1000 * scale;
    std::size_t infinitesimal = 0;
    for (std::size_t k = 0; k < count; ++k) {
      FieldElement eps;
      if (k % 2 == 0) {
        eps = parse_field(fixed[rng.below(fixed.size())]);
      } else {
        eps = random_nonzero(rng, shape).abs();
      }
      if (eps.is_infinitesimal()) ++infinitesimal;
      const FieldElement delta = shrink_radius(eps, n);
      const Matrix a = random_in_ball(rng, n, delta);
      const Matrix b = random_in_ball(rng, n, delta);
      const bool in_ball = ball_member(a, delta) && ball_member(b, delta);
      const bool invertible = !determinant(a).is_zero() && !determinant(b).is_zero();
      const bool sound = ball_member(mat_mul(a, b), eps);
      rep.check(in_ball && invertible && sound, "GL" + std::to_string(n) + " eps=" + str(eps) + " delta=" + str(delta),
                repro(rep, "shrink_radius(" + str(eps) + ", " + std::to_string(n) + ") is unsound"));
    }
    rep.fact("GL" + std::to_string(n) + "_pairs", std::to_string(count));
    rep.fact("GL" + std::to_string(n) + "_infinitesimal_radii", std::to_string(infinitesimal));
  }
  return rep;
}

// ----------------------------------------------------- reduced power

namespace {

EventualSeq random_seq(Rng& rng) {
  std::vector<Rational> num;
  const long deg = rng.range(0, 2);
  for (long k = 0; k <= deg; ++k) num.push_back(rng.range(-9, 9));
  UPoly den(1);
  for (long k = rng.range(0, 2); k > 0; --k) den = den * UPoly({Rational(rng.range(0, 5)), Rational(1)});
  std::vector<Rational> prefix;
  for (long k = rng.range(0, 3); k > 0; --k) prefix.push_back(Rational(rng.range(-9, 9), rng.range(1, 9)));
  return EventualSeq(prefix, RationalFunction(UPoly(num), den));
}

Rational capped(const Rational& x) {
  Rational a = abs(x);
  return a < 1 ? a : Rational(1);
}

}  // namespace

SuiteReport suite_reduced_power(std::uint64_t seed, unsigned scale) {
  SuiteReport rep = make_report("reduced-power", seed, scale);
  Rng rng = Rng(seed).fork(1);
  const std::size_t samples = 1000 * scale;
  for (std::size_t i = 0; i < samples; ++i) {
    const EventualSeq x = random_seq(rng), y = random_seq(rng), z = random_seq(rng);
    const StarValue dxy = star_metric(x, y);
    bool ok = dxy == star_metric(y, x) && compare_ev(dxy, Rational(0)) >= 0 &&
              (compare_ev(dxy, Rational(0)) == 0) == equivalent(x, y) && compare_ev(dxy, Rational(1)) <= 0 &&
              star_metric(x, x) == EventualSeq() &&
              compare_ev(star_metric(x, z), dxy + star_metric(y, z)) <= 0 && star_metric(x + z, y + z) == dxy;
    // Coordinates straight from the definition.
    for (std::size_t k = 1; k <= 12 && ok; ++k) ok = dxy.at(k) == capped(x.at(k) - y.at(k));
    rep.check(ok, "metric " + x.to_string() + " | " + y.to_string() + " | " + z.to_string(),
              repro(rep, "metric axioms fail for x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string()));
  }

  // g_n: partial sums 1 - 2^-i, frozen from index n on; eps_n = 2^(2-n).
  std::vector<Ball> balls;
  std::vector<std::size_t> cuts;
  for (long n = 1; n <= 20; ++n) {
    std::vector<Rational> prefix;
    for (long i = 1; i <= n; ++i) prefix.push_back(1 - pow2(-i));
    balls.push_back({EventualSeq(prefix, RationalFunction(1 - pow2(-n))), pow2(2 - n)});
    if (n > 1) cuts.push_back(static_cast<std::size_t>(3 * n));
  }
  const InterleaveResult r = interleave(balls, cuts);
  for (std::size_t n = 0; n < balls.size(); ++n) {
    const StarValue d = star_metric(r.h, balls[n].center);
    bool ok = compare_ev(d, balls[n].radius) < 0;
    const std::size_t from = r.certificates.at(n).holds_from;
    for (std::size_t i = from; i < from + 100 && ok; ++i)
      ok = capped(r.h.at(i) - balls[n].center.at(i)) < balls[n].radius.at(i);
    rep.check(ok, "interleave n=" + std::to_string(n + 1) + " d=" + d.to_string() + " from=" + std::to_string(from),
              repro(rep, "star_metric(h, g_" + std::to_string(n + 1) + ") is not below eps"));
  }
  rep.fact("metric_samples", std::to_string(samples));
  rep.fact("interleave_instances", std::to_string(balls.size()));
  rep.fact("h", r.h.to_string());
  return rep;
}

// ---------------------------------------------------------- RD lemmas

SuiteReport suite_rd_lemmas(std::uint64_t seed, unsigned scale) {
  SuiteReport rep = make_report("rd-lemmas", seed, scale);
  LemmaShape shape;
  shape.configs *= scale;
  for (const auto& name : lemma_names()) {
    const SuiteReport r = run_lemma(name, seed, shape);
    rep.cases += r.cases - 1;
    rep.record(name + " cases=" + std::to_string(r.cases) + " digest=" + hex(r.digest));
    rep.failure_count += r.failure_count;
    for (const auto& f : r.failures)
      if (rep.failures.size() < SuiteReport::kMaxListed) rep.failures.push_back(name + ": " + f);
    rep.fact(name + ".cases", std::to_string(r.cases));
    for (const auto& [k, v] : r.facts) rep.fact(name + "." + k, v);
  }
  return rep;
}

// --------------------------------------------------------- abelian SIN

namespace {

// Shortest paths over random positive rational weights: a metric on 5
// points.
std::vector<std::vector<Rational>> random_metric(Rng& rng, std::size_t n) {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) d[x][y] = d[y][x] = Rational(rng.range(1, 40), rng.range(1, 4));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (d[x][k] + d[k][y] < d[x][y]) d[x][y] = d[x][k] + d[k][y];
  return d;
}

std::string word_text(const AbelianWord& w) {
  std::string s = "(";
  for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + std::to_string(w[j]);
  return s + ")";
}

// Every sum of one choice per set (omitted, +v or -v), by explicit tuples.
// Members of i(V) have coordinates in {-1, 0, 1}, so a sum of at most four
// stays in [-4, 4]^rank and packs into a base-9 code.
std::set<AbelianWord> brute_sums(const std::vector<AbelianSet>& vs, std::size_t rank) {
  if (vs.size() > 4) throw std::invalid_argument("brute_sums handles at most four sets");
  std::vector<long> place(rank, 1);
  for (std::size_t j = 1; j < rank; ++j) place[j] = place[j - 1] * 9;
  const long cells = place.back() * 9;
  long origin = 0;
  for (auto p : place) origin += 4 * p;
  std::vector<std::vector<long>> choices;
  for (const auto& v : vs) {
    std::vector<long> c{0};
    for (const auto& a : v) {
      long code = 0;
      for (std::size_t j = 0; j < rank; ++j) {
        if (a[j] < -1 || a[j] > 1) throw std::invalid_argument("brute_sums needs coordinates in {-1, 0, 1}");
        code += a[j] * place[j];
      }
      c.push_back(code);
      c.push_back(-code);
    }
    choices.push_back(std::move(c));
  }
  std::vector<char> seen(static_cast<std::size_t>(cells), 0);
  std::vector<std::size_t> pick(vs.size(), 0);
  while (true) {
    long code = origin;
    for (std::size_t n = 0; n < vs.size(); ++n) code += choices[n][pick[n]];
    seen[static_cast<std::size_t>(code)] = 1;
    std::size_t n = 0;
    while (n < vs.size() && ++pick[n] == choices[n].size()) pick[n++] = 0;
    if (n == vs.size()) break;
  }
  std::set<AbelianWord> out;
  for (long code = 0; code < cells; ++code) {
    if (!seen[static_cast<std::size_t>(code)]) continue;
    AbelianWord w(rank);
    for (std::size_t j = 0; j < rank; ++j) w[j] = (code / place[j]) % 9 - 4;
    out.insert(std::move(w));
  }
  return out;
}

bool certificate_sums(const AbelianResult& r, const AbelianWord& w, const std::vector<AbelianSet>& vs) {
  AbelianWord s(w.size(), 0);
  std::set<std::size_t> used;
  for (const auto& t : r.summands) {
    if (t.index == 0 || t.index > r.horizon || !used.insert(t.index).second) return false;
    if (!vs[t.index - 1].count(t.element) || (t.sign != 1 && t.sign != -1)) return false;
    for (std::size_t j = 0; j < s.size(); ++j) s[j] += t.sign * t.element[j];
  }
  return s == w;
}

}  // namespace

SuiteReport suite_abelian_sin(std::uint64_t seed, unsigned scale) {
  SuiteReport rep = make_report("abelian-sin", seed, scale);
  Rng master(seed);
  const std::size_t points = 5, configs = 100 * scale;
  std::size_t brute_words = 0, max_sums = 0;
  for (std::size_t c = 0; c < configs; ++c) {
    Rng rng = master.fork(c);
    const auto d = random_metric(rng, points);
    // Radii: decreasing, drawn around the distances so relations vary.
    std::vector<Rational> distances;
    for (std::size_t x = 0; x < points; ++x)
      for (std::size_t y = x + 1; y < points; ++y) distances.push_back(d[x][y]);
    std::sort(distances.begin(), distances.end());
    std::vector<Rational> radii;
    for (std::size_t n = 0; n < 4; ++n) radii.push_back(distances[rng.below(6)] + Rational(rng.range(0, 1), 2));
    std::sort(radii.rbegin(), radii.rend());
    std::vector<PairRelation> rel;
    std::vector<AbelianSet> sets;
    for (const auto& r : radii) {
      rel.push_back(threshold_relation(d, r));
      sets.push_back(i_of_entourage_abelian(rel.back()));
    }

    // Horizon 1: x - y is accepted exactly for pairs of the entourage.
    bool ok = true;
    std::string bad;
    for (std::size_t x = 0; x < points && ok; ++x)
      for (std::size_t y = 0; y < points && ok; ++y) {
        if (x == y) continue;
        AbelianWord w(points, 0);
        w[x] += 1;
        w[y] -= 1;
        const AbelianResult r = sin_base_member_abelian(w, {sets[0]}, 1);
        ok = r.found == (rel[0].pairs.count({x, y}) > 0) && (!r.found || certificate_sums(r, w, {sets[0]}));
        if (!ok) bad = "pair " + std::to_string(x) + "," + std::to_string(y);
      }

    // Horizons 1 to 4, each against every explicit tuple of summands.
    std::size_t sum_count = 0;
    for (std::size_t horizon = 1; horizon <= 4 && ok; ++horizon) {
      const std::vector<AbelianSet> used(sets.begin(), sets.begin() + static_cast<long>(horizon));
      const std::set<AbelianWord> sums = brute_sums(used, points);
      sum_count = sums.size();
      std::vector<AbelianWord> targets(sums.begin(), sums.end());
      for (int k = 0; k < 40; ++k) {
        AbelianWord w(points, 0);
        for (auto& x : w) x = rng.range(-4, 4);
        targets.push_back(w);
      }
      for (const auto& w : targets) {
        if (!ok) break;
        ++brute_words;
        const AbelianResult r = sin_base_member_abelian(w, used, horizon);
        ok = r.found == (sums.count(w) > 0) && (!r.found || certificate_sums(r, w, used));
        if (!ok) bad = "word " + word_text(w) + " at horizon " + std::to_string(horizon);
      }
    }
    max_sums = std::max(max_sums, sum_count);
    rep.check(ok, "config " + std::to_string(c) + " sums=" + std::to_string(sum_count),
              repro(rep, "config " + std::to_string(c) + ": " + bad));
  }
  rep.fact("configs", std::to_string(configs));
  rep.fact("max_horizon", "4");
  rep.fact("largest_sum_set", std::to_string(max_sums));
  rep.fact("words_checked", std::to_string(brute_words));
  return rep;
}

// -------------------------------------------------------------- order

namespace {

Branch random_branch(Rng& rng, std::size_t max_size) {
  Branch b;
  const long total = rng.range(1, static_cast<long>(max_size));
  const long pre = rng.range(0, total - 1);
  for (long i = 0; i < pre; ++i) b.preperiod += rng.coin() ? '1' : '0';
  for (long i = pre; i < total; ++i) b.period += rng.coin() ? '1' : '0';
  return b;
}

// One representative per relation on 0..n-1 that is compatible with the
// natural order (x <= y only if x <= y as numbers): every finite poset has
// such a labelling.
std::vector<FinitePoset> small_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) slots.emplace_back(x, y);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
  std::vector<FinitePoset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (std::size_t k = 0; k < n; ++k) le[k][k] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) le[slots[s].first][slots[s].second] = 1;
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x)
      for (std::size_t y = 0; y < n && transitive; ++y)
        for (std::size_t z = 0; z < n && transitive; ++z)
          if (le[x][y] && le[y][z] && !le[x][z]) transitive = false;
    if (transitive) out.push_back(FinitePoset::from_predicate(names, [&](std::size_t a, std::size_t b) { return le[a][b] != 0; }));
  }
  return out;
}

}  // namespace

SuiteReport suite_order(std::uint64_t seed, unsigned scale) {
  SuiteReport rep = make_report("order", seed, scale);
  Rng master(seed);

  // Almost disjoint joins: all pairs of subsets of 6 branches.
  Rng brng = master.fork(1);
  const std::size_t families = 5 * scale;
  for (std::size_t f = 0; f < families; ++f) {
    std::vector<Branch> fam;
    while (fam.size() < 6) {
      Branch b = random_branch(brng, 8);
      bool fresh = true;
      for (const auto& o : fam) fresh = fresh && !same_sequence(o, b);
      if (fresh) fam.push_back(b);
    }
    const std::size_t depth = disambiguation_depth(fam);
    std::vector<AdJoin> joins;
    std::vector<IndexSet> subsets;
    for (std::size_t m = 0; m < 64; ++m) {
      IndexSet s;
      for (std::size_t k = 0; k < 6; ++k)
        if (m >> k & 1) s.insert(k);
      joins.push_back(ad_join(fam, s, depth));
      subsets.push_back(std::move(s));
    }
    std::size_t bad = 0;
    for (std::size_t s = 0; s < 64; ++s)
      for (std::size_t t = 0; t < 64; ++t)
        if (joins[s].leq(joins[t]) != branch_subset(fam, subsets[s], subsets[t])) ++bad;
    std::string names;
    for (const auto& b : fam) names += b.to_string() + " ";
    rep.check(bad == 0, "ad-join " + names + "depth=" + std::to_string(depth),
              repro(rep, "ad_join is not an order embedding on " + names));
  }

  // Tukey to monotone: every poset with at most 5 elements, every g.
  std::size_t poset_count = 0, map_count = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto posets = small_posets(n);
    poset_count += posets.size();
    for (const auto& d : posets) {
      std::size_t bad = 0;
      for (std::size_t tau = 1; tau <= 5; ++tau) {
        const FinitePoset chain = FinitePoset::chain(tau);
        ChainMap g(tau, 0);
        while (true) {
          ++map_count;
          const auto f = tukey_to_monotone(g, d);
          const PosetMap fm(f.begin(), f.end());
          const bool mono = check_monotone(fm, d, chain).holds;
          const bool cof = check_cofinal(fm, d, chain).holds;
          const auto cert = find_tukey_certificate(g, d);
          if (!mono || !cof || cof != (cert && check_tukey_certificate(g, d, *cert))) ++bad;
          std::size_t k = 0;
          while (k < tau && ++g[k] == n) g[k++] = 0;
          if (k == tau) break;
        }
      }
      std::string rel;
      for (auto [x, y] : d.relation())
        if (x != y) rel += std::to_string(x) + "<" + std::to_string(y) + " ";
      rep.check(bad == 0, "tukey n=" + std::to_string(n) + " " + rel, repro(rep, "tukey_to_monotone fails on poset " + rel));
    }
  }
  rep.fact("ad_join_families", std::to_string(families));
  rep.fact("ad_join_branches", "6");
  rep.fact("posets", std::to_string(poset_count));
  rep.fact("tukey_maps", std::to_string(map_count));

  // Diagonal witness: every diagonal with values <= 9 for tau <= 6; the
  // off-diagonal entries are drawn at random.
  Rng drng = master.fork(2);
  std::size_t diagonal_families = 0;
  for (std::size_t tau = 1; tau <= 6; ++tau) {
    std::vector<unsigned long> diag(tau, 0);
    std::size_t bad = 0, count = 0;
    while (true) {
      std::vector<FnSeq> a;
      for (std::size_t b = 0; b < tau; ++b) {
        std::vector<unsigned long> v(tau);
        for (std::size_t x = 0; x < tau; ++x) v[x] = x == b ? diag[b] : drng.below(10);
        a.emplace_back(std::move(v));
      }
      const FnSeq z = diagonal_witness(a);
      bool ok = check_diagonal(z, a);
      for (std::size_t x = 0; x < tau && ok; ++x) ok = z.at(x) == diag[x] + 1;
      if (!ok) ++bad;
      ++count;
      std::size_t k = 0;
      while (k < tau && ++diag[k] == 10) diag[k++] = 0;
      if (k == tau) break;
    }
    rep.check(bad == 0, "diagonal tau=" + std::to_string(tau) + " families=" + std::to_string(count),
              repro(rep, "diagonal certificate fails at tau=" + std::to_string(tau)));
    diagonal_families += count;
  }
  rep.fact("diagonal_families", std::to_string(diagonal_families));

  // Box monotonicity on the grid {k/12 : |k| <= 12}^3, f <= g in {1,2,3}^3.
  std::vector<SparseVector> grid;
  for (long i = -12; i <= 12; ++i)
    for (long j = -12; j <= 12; ++j)
      for (long k = -12; k <= 12; ++k) {
        SparseVector x;
        if (i) x[0] = Rational(i, 12);
        if (j) x[1] = Rational(j, 12);
        if (k) x[2] = Rational(k, 12);
        grid.push_back(std::move(x));
      }
  std::vector<FnSeq> fs;
  std::vector<std::vector<char>> member;
  for (unsigned long p = 1; p <= 3; ++p)
    for (unsigned long q = 1; q <= 3; ++q)
      for (unsigned long r = 1; r <= 3; ++r) {
        fs.emplace_back(std::vector<unsigned long>{p, q, r}, 1);
        const BoxNbhd box(fs.back());
        std::vector<char> m;
        for (const auto& x : grid) m.push_back(box.contains(x));
        member.push_back(std::move(m));
      }
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = 0; b < fs.size(); ++b) {
      if (!fs[a].leq(fs[b])) continue;
      std::size_t bad = 0;
      for (std::size_t x = 0; x < grid.size(); ++x)
        if (member[b][x] && !member[a][x]) ++bad;
      rep.check(bad == 0, "box " + fs[a].to_string() + " <= " + fs[b].to_string(),
                repro(rep, "box of " + fs[b].to_string() + " is not inside the box of " + fs[a].to_string()));
    }
  rep.fact("box_grid_points", std::to_string(grid.size()));
  return rep;
}

// --------------------------------------------------------- uniformity

namespace {

// Largest a in 0..cap with dist < 2^-a, or -1.
int threshold(const Rational& dist, int cap) {
  int a = -1;
  while (a < cap && dist < dyadic(static_cast<unsigned long>(a + 1))) ++a;
  return a;
}

}  // namespace

SuiteReport suite_uniformity(std::uint64_t seed, unsigned scale) {
  SuiteReport rep = make_report("uniformity", seed, scale);
  Rng master(seed);
  const MetricSpace s = convergent_sequence(100, {{0}, {0, 1}, {0, 2}, {0, 3}});
  s.validate();
  const std::size_t m = s.compacts.size();
  const int top = 6;

  // A pair lies in U_alpha iff alpha(n) <= its threshold for some n; pairs
  // with the same threshold profile behave alike.
  std::set<std::vector<int>> profiles;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (x == y) continue;
      std::vector<int> p;
      for (std::size_t n = 1; n <= m; ++n) p.push_back(threshold(distance_to_compact(s, n, x, y), top + 1));
      profiles.insert(std::move(p));
    }
  auto member = [&](const std::vector<int>& p, const std::vector<unsigned long>& alpha) {
    for (std::size_t n = 0; n < m; ++n)
      if (static_cast<int>(alpha[n]) <= p[n]) return true;
    return false;
  };
  std::vector<std::vector<unsigned long>> alphas;
  {
    std::vector<unsigned long> a(m, 0);
    while (true) {
      alphas.push_back(a);
      std::size_t k = 0;
      while (k < m && ++a[k] == top + 1) a[k++] = 0;
      if (k == m) break;
    }
  }
  // Profiles against the direct membership test on sampled alphas.
  Rng arng = master.fork(1);
  for (int k = 0; k < 40; ++k) {
    const auto& a = alphas[arng.below(alphas.size())];
    const AlphaTruncation at{a, std::nullopt};
    const Entourage e = u_alpha(s, at);
    bool ok = e.reflexive() && e.symmetric();
    for (std::size_t x = 0; x < s.size() && ok; ++x)
      for (std::size_t y = 0; y < s.size() && ok; ++y) {
        if (x == y) continue;
        std::vector<int> p;
        for (std::size_t n = 1; n <= m; ++n) p.push_back(threshold(distance_to_compact(s, n, x, y), top + 1));
        ok = e.contains(x, y) == member(p, a);
      }
    rep.check(ok, "profile audit " + at.to_string(), repro(rep, "profile membership disagrees with u_alpha at " + at.to_string()));
  }
  std::size_t comparable = 0;
  for (const auto& a : alphas) {
    std::size_t bad = 0;
    for (const auto& b : alphas) {
      bool le = true;
      for (std::size_t n = 0; n < m && le; ++n) le = a[n] <= b[n];
      if (!le) continue;
      ++comparable;
      for (const auto& p : profiles)
        if (member(p, b) && !member(p, a)) ++bad;
    }
    const AlphaTruncation at{a, std::nullopt};
    rep.check(bad == 0, "monotone " + at.to_string(), repro(rep, "U_beta escapes U_alpha for alpha=" + at.to_string()));
  }
  rep.fact("points", std::to_string(s.size()));
  rep.fact("alpha_length", std::to_string(m));
  rep.fact("alpha_max", std::to_string(top));
  rep.fact("alpha_pairs", std::to_string(comparable));
  rep.fact("pair_profiles", std::to_string(profiles.size()));

  // Cofinal search against random open diagonal neighbourhoods.
  Rng orng = master.fork(2);
  const std::size_t searches = 50 * scale;
  rep.fact("cofinal_searches", std::to_string(searches));
  for (std::size_t k = 0; k < searches; ++k) {
    DiagonalNbhd o;
    const Rational base(1, orng.range(1, 64));
    for (std::size_t x = 0; x < s.size(); ++x) {
      Rational r = base * Rational(orng.range(1, 100), 100);
      if (orng.below(8) == 0) r = Rational(1, 100000);  // nearly isolates x
      o.radii.push_back(r);
    }
    const CofinalSearch found = base_cofinal_search(s, o);
    bool ok = found.alpha.has_value();
    if (ok) {
      // Audit from the definition of O, pair by pair.
      for (std::size_t x = 0; x < s.size() && ok; ++x)
        for (std::size_t y = 0; y < s.size() && ok; ++y) {
          if (!u_alpha_member(s, *found.alpha, x, y)) continue;
          bool in_o = x == y;
          for (std::size_t c = 0; c < s.size() && !in_o; ++c) in_o = s.d[x][c] < o.radii[c] && s.d[y][c] < o.radii[c];
          ok = in_o;
        }
    }
    std::optional<unsigned long> shift;
    if (ok) {
      shift = composition_search(s, *found.alpha);
      ok = shift.has_value();
    }
    rep.check(ok, "cofinal " + std::to_string(k) + " alpha=" + (found.alpha ? found.alpha->to_string() : "none") +
                      " shift=" + (shift ? std::to_string(*shift) : "none"),
              repro(rep, "cofinal search " + std::to_string(k) + " failed"));
  }

  // Countable base on the convergent sequence with 50 naturals.
  const CountableSpace cs = convergent_countable(50);
  cs.validate();
  Rng crng = master.fork(3);
  for (int k = 0; k < 40; ++k) {
    std::vector<unsigned long> f(cs.size()), g(cs.size());
    for (std::size_t x = 0; x < cs.size(); ++x) {
      f[x] = crng.below(55);
      g[x] = f[x] + crng.below(6);
    }
    const Entourage ef = countable_base(cs, f), eg = countable_base(cs, g);
    rep.check(ef.reflexive() && ef.symmetric() && eg.subset_of(ef), "countable " + std::to_string(k),
              repro(rep, "countable base is not monotone at sample " + std::to_string(k)));
  }
  return rep;
}

// ------------------------------------------------------------ registry

const std::vector<SuiteInfo>& suite_list() {
  static const std::vector<SuiteInfo> list = {
      {"field-axioms", "field and order laws, non-archimedean bound, substitution oracle"},
      {"matrix-shrink", "shrink_radius soundness in GL2 and GL3"},
      {"reduced-power", "metric axioms, translation invariance, geometric interleave"},
      {"rd-lemmas", "symmetry, squaring, conjugation, Birkhoff-Kakutani, intersection filter"},
      {"abelian-sin", "SIN base membership against brute-force sums"},
      {"order", "branch joins, Tukey-to-monotone, diagonal witness, boxes"},
      {"uniformity", "U_alpha monotonicity, cofinal search, countable base"},
  };
  return list;
}

std::string suite_names() {
  std::string out;
  for (const auto& s : suite_list()) out += (out.empty() ? "" : ", ") + s.name;
  return out;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, unsigned scale) {
  static const std::map<std::string, std::function<SuiteReport(std::uint64_t, unsigned)>> table = {
      {"field-axioms", suite_field},   {"matrix-shrink", suite_matrix}, {"reduced-power", suite_reduced_power},
      {"rd-lemmas", suite_rd_lemmas},  {"abelian-sin", suite_abelian_sin}, {"order", suite_order},
      {"uniformity", suite_uniformity},
  };
  auto it = table.find(name);
  if (it == table.end()) throw UnknownSuite("unknown suite '" + name + "'; known suites: " + suite_names());
  if (scale == 0) throw std::invalid_argument("scale must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r = it->second(seed, scale);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ------------------------------------------------------------- output

namespace {

void sort_reports(std::vector<SuiteReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const SuiteReport& a, const SuiteReport& b) { return a.suite < b.suite; });
}

std::string command(const SuiteReport& r) {
  return "omegalab suite " + r.suite + " --seed " + std::to_string(r.seed) + " --scale " + std::to_string(r.scale);
}

}  // namespace

std::string reports_json(std::vector<SuiteReport> reports, bool timing) {
  sort_reports(reports);
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["scale"] = r.scale;
    j["cases"] = r.cases;
    j["passed"] = r.passed();
    j["failure_count"] = r.failure_count;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) j["failures"].push_back(f);
    j["facts"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.facts) j["facts"][k] = v;
    j["case_digest"] = hex(r.digest);
    j["reproduce"] = command(r);
    if (timing) j["seconds"] = r.seconds;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string reports_markdown(std::vector<SuiteReport> reports, bool timing) {
  sort_reports(reports);
  std::string out = timing ? "| suite | result | cases | failures | seed | seconds |\n|---|---|---|---|---|---|\n"
                           : "| suite | result | cases | failures | seed |\n|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    out += "| " + r.suite + " | " + (r.passed() ? "PASS" : "FAIL") + " | " + std::to_string(r.cases) + " | " +
           std::to_string(r.failure_count) + " | " + std::to_string(r.seed) + " |";
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.2f |", r.seconds);
      out += buf;
    }
    out += "\n";
  }
  for (const auto& r : reports) {
    if (r.passed()) continue;
    out += "\n### " + r.suite + "\n\nReproduce with `" + command(r) + "`.\n\n";
    for (const auto& f : r.failures) out += "- " + f + "\n";
    if (r.failure_count > r.failures.size())
      out += "- ... " + std::to_string(r.failure_count - r.failures.size()) + " more\n";
  }
  return out;
}

}  // namespace omega::checks
