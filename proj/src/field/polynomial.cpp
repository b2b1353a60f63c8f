#include "omega/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace omega {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t j, Exponent power) {
  Monomial m;
  m.e_[j] = power;
  return m;
}

bool Monomial::is_one() const {
  for (auto e : e_)
    if (e) return false;
  return true;
}

int Monomial::top_variable() const {
  for (std::size_t j = kMaxVariables; j-- > 0;)
    if (e_[j]) return static_cast<int>(j);
  return -1;
}

unsigned Monomial::max_exponent() const {
  unsigned m = 0;
  for (auto e : e_) m = std::max<unsigned>(m, e);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t j = 0; j < kMaxVariables; ++j) r.e_[j] = static_cast<Exponent>(e_[j] + o.e_[j]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t j = 0; j < kMaxVariables; ++j)
    if (e_[j] > o.e_[j]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t j = 0; j < kMaxVariables; ++j) r.e_[j] = static_cast<Exponent>(o.e_[j] - e_[j]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t j = 0; j < kMaxVariables; ++j) r.e_[j] = std::min(a.e_[j], b.e_[j]);
  return r;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_before(const Term& a, const Term& b) { return more_dominant(a.mono, b.mono); }

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(std::size_t j) { return monomial(Monomial::variable(j), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coef += t.coef;
    else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

int Polynomial::top_variable() const {
  int v = -1;
  for (const auto& t : terms_) v = std::max(v, t.mono.top_variable());
  return v;
}

unsigned Polynomial::degree_in(std::size_t j) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[j]);
  return d;
}

unsigned Polynomial::max_exponent() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.max_exponent());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, k = 0;
  while (i < terms_.size() && k < o.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[k];
    if (more_dominant(a.mono, b.mono)) {
      r.terms_.push_back(a);
      ++i;
    } else if (more_dominant(b.mono, a.mono)) {
      r.terms_.push_back(b);
      ++k;
    } else {
      Rational c = a.coef + b.coef;
      if (c != 0) r.terms_.push_back({a.mono, std::move(c)});
      ++i;
      ++k;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; k < o.terms_.size(); ++k) r.terms_.push_back(o.terms_[k]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono).scaled(o.terms_[0].coef);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].mono).scaled(terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
  return from_terms(std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return Polynomial{};
  if (o.is_constant()) return scaled(1 / o.terms_[0].coef);
  for (std::size_t j = 0; j < kMaxVariables; ++j)
    if (o.degree_in(j) > degree_in(j)) return std::nullopt;
  if (o.terms_.size() == 1) {
    const Term& d = o.terms_[0];
    Polynomial q = *this;
    for (auto& t : q.terms_) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      t.mono = d.mono.quotient_of(t.mono);
      t.coef /= d.coef;
    }
    return q;
  }
  // Lex order (the reverse of dominance) is a well-order, so repeatedly
  // cancelling the lex-leading term terminates.
  const Term& lead = o.lex_leading();
  Polynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& r = rem.lex_leading();
    if (!lead.mono.divides(r.mono)) return std::nullopt;
    Term t{lead.mono.quotient_of(r.mono), r.coef / lead.coef};
    rem = rem - o.times_monomial(t.mono).scaled(t.coef);
    quotient.push_back(std::move(t));
  }
  return from_terms(std::move(quotient));
}

std::vector<Polynomial> Polynomial::split(std::size_t j) const {
  std::vector<Polynomial> out(degree_in(j) + 1);
  for (const auto& t : terms_) {
    Term s = t;
    unsigned k = s.mono[j];
    s.mono[j] = 0;
    out[k].terms_.push_back(std::move(s));
  }
  return out;
}

Polynomial Polynomial::join(const std::vector<Polynomial>& coeffs, std::size_t j) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_) {
      Term s = t;
      s.mono[j] = static_cast<Monomial::Exponent>(s.mono[j] + k);
      all.push_back(std::move(s));
    }
  return from_terms(std::move(all));
}

Polynomial Polynomial::normalized() const {
  if (is_zero() || terms_[0].coef == 1) return *this;
  return scaled(1 / terms_[0].coef);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < kMaxVariables; ++j) {
      if (!t.mono[j]) continue;
      if (!mono.empty()) mono += "*";
      mono += "a" + std::to_string(j);
      if (t.mono[j] > 1) mono += "^" + std::to_string(t.mono[j]);
    }
    if (mono.empty())
      out += omega::to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += omega::to_string(c) + "*" + mono;
  }
  return out;
}

// --------------------------------------------------------------------- gcd

namespace {

using Coeffs = std::vector<Polynomial>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Polynomial content_of(const Coeffs& c) {
  Polynomial g;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    g = gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

Coeffs divide_all(const Coeffs& c, const Polynomial& d) {
  if (d.is_one()) return c;
  Coeffs out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(*x.divide_exact(d));
  return out;
}

// Primitive part with respect to the main variable, scaled so that its
// leading coefficient has most dominant coefficient 1.
Coeffs primitive(const Coeffs& c) {
  Coeffs p = divide_all(c, content_of(c));
  const Rational lc = p.back().dominant().coef;
  if (lc != 1)
    for (auto& x : p) x = x.scaled(1 / lc);
  return p;
}

// A sparse pseudo-remainder: the result is a multiple of the classical
// pseudo-remainder by a factor free of the main variable, which the
// subsequent primitive-part step removes.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const Polynomial& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    Polynomial la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x = x * lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational x = t.coef;
    for (std::size_t j = 0; j < point.size(); ++j)
      for (unsigned k = 0; k < t.mono[j]; ++k) x *= point[j];
    sum += x;
  }
  return sum;
}

using UCoeffs = std::vector<Rational>;

void trim(UCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::size_t univariate_gcd_degree(UCoeffs a, UCoeffs b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // a <- a mod b
    while (a.size() >= b.size()) {
      const Rational q = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Upper bound on the degree in the main variable of gcd(a, b), from images
// at integer points where neither leading coefficient vanishes.  Primitive
// inputs with bound 0 are coprime.
std::size_t gcd_degree_bound(const Coeffs& a, const Coeffs& b, std::size_t v) {
  std::size_t best = std::min(a.size(), b.size()) - 1;
  static constexpr long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (long attempt = 0; attempt < 3 && best > 0; ++attempt) {
    std::vector<Rational> point(v);
    for (std::size_t j = 0; j < v; ++j) point[j] = kPrimes[(j + 4 * attempt) % 12] + attempt;
    if (evaluate(a.back(), point) == 0 || evaluate(b.back(), point) == 0) continue;
    UCoeffs ua, ub;
    for (const auto& x : a) ua.push_back(evaluate(x, point));
    for (const auto& x : b) ub.push_back(evaluate(x, point));
    best = std::min(best, univariate_gcd_degree(std::move(ua), std::move(ub)));
  }
  return best;
}

// ------------------------------------------------------- heuristic gcd
//
// Integer polynomials: evaluate the main variable at a large integer xi,
// take the gcd of the images recursively, and read a candidate back off the
// balanced xi-adic digits.  A primitive candidate dividing both inputs is
// their gcd (Char, Geddes and Gonnet); otherwise xi grows, and after a few
// tries the caller falls back to the PRS.

constexpr std::size_t kHeuristicBits = 200000;

Integer content_z(const Polynomial& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer norm_z(const Polynomial& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    Integer c = t.coef.get_num();
    if (c < 0) c = -c;
    if (c > m) m = c;
  }
  return m;
}

// Clears denominators and the integer content.
Polynomial integer_primitive(const Polynomial& p) {
  Integer l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  Polynomial q = p.scaled(Rational(l));
  return q.scaled(Rational(1) / Rational(content_z(q)));
}

Polynomial evaluate_at(const Polynomial& p, std::size_t v, const Integer& xi) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), xi.get_mpz_t(), t.mono[v]);
    Monomial m = t.mono;
    m[v] = 0;
    out.push_back({m, t.coef * Rational(power)});
  }
  return Polynomial::from_terms(std::move(out));
}

// Digits of h in base xi, balanced into (-xi/2, xi/2], as coefficients of
// a_v^0, a_v^1, ...
Polynomial xi_adic(Polynomial h, std::size_t v, const Integer& xi) {
  std::vector<Term> out;
  const Integer half = xi / 2;
  for (unsigned k = 0; !h.is_zero(); ++k) {
    if (k >= 1u << 15) return Polynomial();
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coef.get_num_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.push_back({t.mono, Rational(r)});
    }
    Polynomial g = Polynomial::from_terms(digit);
    h = (h - g).scaled(Rational(1) / Rational(xi));
    for (auto t : g.terms()) {
      t.mono[v] = static_cast<Monomial::Exponent>(k);
      out.push_back(std::move(t));
    }
  }
  return Polynomial::from_terms(std::move(out));
}

// Set while gcd_prs runs, so its recursive calls skip the heuristic too.
thread_local bool prs_only = false;

std::optional<Polynomial> heuristic_gcd(const Polynomial& f0, const Polynomial& g0) {
  const Integer cf = content_z(f0), cg = content_z(g0);
  Integer c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const Polynomial f = f0.scaled(Rational(1) / Rational(cf));
  const Polynomial g = g0.scaled(Rational(1) / Rational(cg));
  if (f.is_constant() || g.is_constant()) return Polynomial(Rational(c));
  const std::size_t v = static_cast<std::size_t>(std::max(f.top_variable(), g.top_variable()));
  const Integer nf = norm_z(f), ng = norm_z(g);
  Integer xi = 2 * (nf < ng ? nf : ng) + 29;
  const std::size_t deg = std::max(f.degree_in(v), g.degree_in(v)) + 1;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > kHeuristicBits) return std::nullopt;
    const Polynomial ff = evaluate_at(f, v, xi), gg = evaluate_at(g, v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      const auto h = heuristic_gcd(ff, gg);
      if (!h) return std::nullopt;
      Polynomial cand = xi_adic(*h, v, xi);
      if (!cand.is_zero()) {
        cand = cand.scaled(Rational(1) / Rational(content_z(cand)));
        if (f.divide_exact(cand) && g.divide_exact(cand)) return cand.scaled(Rational(c));
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.size() == 1 || b.size() == 1) {
    const Polynomial& mono = a.size() == 1 ? a : b;
    const Polynomial& other = a.size() == 1 ? b : a;
    Monomial g = mono.dominant().mono;
    for (const auto& t : other.terms()) g = Monomial::gcd(g, t.mono);
    return Polynomial::monomial(g, 1);
  }
  if (!prs_only)
    if (auto h = heuristic_gcd(integer_primitive(a), integer_primitive(b))) return h->normalized();
  const int va = a.top_variable();
  const int vb = b.top_variable();
  const std::size_t v = static_cast<std::size_t>(std::max(va, vb));
  if (va != vb) {
    // The polynomial without the main variable only meets the content of
    // the other one.
    const Polynomial& with = va > vb ? a : b;
    const Polynomial& without = va > vb ? b : a;
    return gcd(without, content_of(with.split(v)));
  }
  if (a == b) return a.normalized();

  Coeffs ca = a.split(v);
  Coeffs cb = b.split(v);
  Polynomial cont = gcd(content_of(ca), content_of(cb));
  Coeffs pa = primitive(ca);
  Coeffs pb = primitive(cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  const std::size_t bound = gcd_degree_bound(pa, pb, v);
  if (bound == 0) return cont.normalized();
  if (bound == pb.size() - 1) {
    // The gcd can only be pb itself.
    Polynomial jb = Polynomial::join(pb, v);
    if (Polynomial::join(pa, v).divide_exact(jb)) return (cont * jb).normalized();
  }
  for (;;) {
    Coeffs r = pseudo_remainder(pa, pb);
    if (r.empty()) break;
    if (r.size() == 1) {
      pb = Coeffs{Polynomial(1)};
      break;
    }
    pa = std::move(pb);
    pb = primitive(r);
  }
  return (cont * Polynomial::join(pb, v)).normalized();
}

Polynomial gcd_prs(const Polynomial& a, const Polynomial& b) {
  struct Guard {
    bool saved = prs_only;
    Guard() { prs_only = true; }
    ~Guard() { prs_only = saved; }
  } guard;
  return gcd(a, b);
}

}  // namespace omega
