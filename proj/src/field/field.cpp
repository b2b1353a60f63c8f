#include "omega/field.hpp"

#include "omega/expr.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

namespace omega {

namespace {

std::atomic<std::size_t> g_max_height{kMaxVariables};
std::atomic<unsigned> g_max_degree{32};

std::size_t needed_height(const Polynomial& p) { return static_cast<std::size_t>(p.top_variable() + 1); }

bool needs_parens(const Polynomial& p) {
  if (p.size() != 1) return true;
  const Term& t = p.dominant();
  if (t.mono.is_one()) return t.coef.get_den() != 1;
  return t.coef != 1;
}

}  // namespace

FieldLimits field_limits() { return {g_max_height.load(), g_max_degree.load()}; }

void set_field_limits(FieldLimits limits) {
  if (limits.max_height == 0 || limits.max_height > kMaxVariables)
    throw std::invalid_argument("tower height limit must lie in 1.." + std::to_string(kMaxVariables));
  g_max_height = limits.max_height;
  g_max_degree = limits.max_degree;
}

FieldElement::FieldElement(const Rational& c) : num_(c) {}

FieldElement FieldElement::variable(std::size_t j) {
  if (j >= field_limits().max_height)
    throw LimitExceeded("variable a" + std::to_string(j) + " exceeds the tower height limit");
  FieldElement x;
  x.num_ = Polynomial::variable(j);
  x.height_ = j + 1;
  return x;
}

FieldElement FieldElement::fraction(const Polynomial& num, const Polynomial& den, std::size_t height) {
  FieldElement x;
  x.num_ = num;
  x.den_ = den;
  x.height_ = height;
  x.canonicalize();
  return x;
}

FieldElement FieldElement::lifted(std::size_t height) const {
  FieldElement x = *this;
  if (height > field_limits().max_height) throw LimitExceeded("tower height " + std::to_string(height) + " exceeds the limit");
  x.height_ = std::max(height_, height);
  return x;
}

void FieldElement::canonicalize(bool reduce) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Polynomial(1);
  } else if (reduce && !den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  const Rational lc = den_.dominant().coef;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  const FieldLimits lim = field_limits();
  height_ = std::max({height_, needed_height(num_), needed_height(den_)});
  if (height_ > lim.max_height)
    throw LimitExceeded("tower height " + std::to_string(height_) + " exceeds the limit " + std::to_string(lim.max_height));
  if (std::max(num_.max_exponent(), den_.max_exponent()) > lim.max_degree)
    throw LimitExceeded("degree exceeds the limit " + std::to_string(lim.max_degree));
}

FieldElement FieldElement::operator-() const {
  FieldElement x = *this;
  x.num_ = -x.num_;
  return x;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement r;
  r.height_ = std::max(a.height_, b.height_);
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    r.canonicalize();
    return r;
  }
  Polynomial g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    // Coprime denominators: the sum is already in lowest terms.
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize(false);
    return r;
  }
  Polynomial ad = *a.den_.divide_exact(g);
  Polynomial bd = *b.den_.divide_exact(g);
  r.num_ = a.num_ * bd + b.num_ * ad;
  r.den_ = ad * b.den_;
  // The numerator is already coprime to ad and bd, so only g can cancel.
  Polynomial h = gcd(r.num_, g);
  if (!h.is_one() && !r.num_.is_zero()) {
    r.num_ = *r.num_.divide_exact(h);
    r.den_ = *r.den_.divide_exact(h);
  }
  r.canonicalize(false);
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement r;
  r.height_ = std::max(a.height_, b.height_);
  if (a.is_zero() || b.is_zero()) {
    r.canonicalize();
    return r;
  }
  Polynomial g1 = gcd(a.num_, b.den_);
  Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial an = g1.is_one() ? a.num_ : *a.num_.divide_exact(g1);
  Polynomial bd = g1.is_one() ? b.den_ : *b.den_.divide_exact(g1);
  Polynomial bn = g2.is_one() ? b.num_ : *b.num_.divide_exact(g2);
  Polynomial ad = g2.is_one() ? a.den_ : *a.den_.divide_exact(g2);
  r.num_ = an * bn;
  r.den_ = ad * bd;
  r.canonicalize(false);
  return r;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  FieldElement r;
  r.num_ = den_;
  r.den_ = num_;
  r.height_ = height_;
  // Already coprime; only the scale of the new denominator changes.
  r.canonicalize(false);
  return r;
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result(1);
  result.height_ = height_;
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::strong_ordering compare(const FieldElement& a, const FieldElement& b) {
  // Denominators are positive (dominant coefficient 1), so the sign of
  // a - b is the sign of the cross difference of numerators.
  Polynomial diff = a.numerator() * b.denominator() - b.numerator() * a.denominator();
  if (diff.is_zero()) return std::strong_ordering::equal;
  return diff.dominant().coef > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) { return compare(a, b); }

LeadingTerm FieldElement::leading_term() const {
  if (is_zero()) throw FieldError("leading term of zero");
  const Term& n = num_.dominant();
  const Term& d = den_.dominant();
  LeadingTerm lt;
  lt.exponents.resize(height_);
  for (std::size_t j = 0; j < height_; ++j) lt.exponents[j] = long(n.mono[j]) - long(d.mono[j]);
  lt.coefficient = n.coef / d.coef;
  return lt;
}

bool FieldElement::is_infinitesimal() const {
  LeadingTerm lt = leading_term();
  for (std::size_t j = lt.exponents.size(); j-- > 0;)
    if (lt.exponents[j] != 0) return lt.exponents[j] > 0;
  return false;
}

std::string FieldElement::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (needs_parens(num_)) n = "(" + n + ")";
  if (needs_parens(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

std::size_t FieldElement::hash() const { return std::hash<std::string>{}(to_string()); }

FieldElement parse_field(std::string_view text) {
  ExprSemantics<FieldElement> sem{
      [](const Integer& z) { return FieldElement(Rational(z)); },
      [](std::string_view name) -> std::optional<FieldElement> {
        if (name.size() == 2 && name[0] == 'a' && name[1] >= '0' && name[1] <= '7')
          return FieldElement::variable(static_cast<std::size_t>(name[1] - '0'));
        return std::nullopt;
      },
      [](const FieldElement& x, long e) { return x.pow(e); }};
  return parse_expression(text, sem);
}

}  // namespace omega
