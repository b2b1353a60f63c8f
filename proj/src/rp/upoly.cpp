#include "omega/upoly.hpp"

#include "omega/expr.hpp"

#include <algorithm>

namespace omega {

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational v = 0;
  for (std::size_t k = c_.size(); k-- > 0;) v = v * x + c_[k];
  return v;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.c_.size(); ++k) {
    if (k < a.c_.size()) r.c_[k] += a.c_[k];
    if (k < b.c_.size()) r.c_[k] += b.c_[k];
  }
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  UPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UPoly rem = a;
  UPoly quot;
  if (a.degree() >= b.degree()) quot.c_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Rational q = rem.lc() / b.lc();
    quot.c_[shift] = q;
    for (std::size_t k = 0; k < b.c_.size(); ++k) rem.c_[k + shift] -= q * b.c_[k];
    rem.c_.pop_back();
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

UPoly UPoly::monic() const {
  if (is_zero() || lc() == 1) return *this;
  UPoly r = *this;
  const Rational l = lc();
  for (auto& x : r.c_) x /= l;
  return r;
}

Integer UPoly::root_bound() const {
  if (degree() <= 0) return 0;
  Rational m = 0;
  for (std::size_t k = 0; k + 1 < c_.size(); ++k) m = std::max(m, omega::abs(c_[k] / lc()));
  // floor(1 + m) + 1 > 1 + m.
  const Rational t = m + 1;
  return Integer(t.get_num() / t.get_den()) + 1;
}

std::string UPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    Rational c = c_[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string mono;
    if (k > 0) mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
    if (mono.empty())
      out += omega::to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += omega::to_string(c) + "*" + mono;
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = UPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return;
  UPoly g = gcd(num, den);
  UPoly n = UPoly::divmod(num, g).first;
  UPoly d = UPoly::divmod(den, g).first;
  const Rational l = d.lc();
  num_ = n * UPoly(1 / l);
  den_ = d.monic();
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_(x) / d;
}

int RationalFunction::eventual_sign() const { return is_zero() ? 0 : sign(num_.lc()); }

Integer RationalFunction::settled_from() const { return std::max(num_.root_bound(), den_.root_bound()); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (den_ == UPoly(Rational(1))) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  auto needs_parens = [](const UPoly& p) {
    const auto& c = p.coeffs();
    if (c.size() - std::count(c.begin(), c.end(), 0) > 1) return true;
    return p.degree() == 0 ? p.lc().get_den() != 1 : p.lc() != 1;
  };
  if (needs_parens(num_)) n = "(" + n + ")";
  if (needs_parens(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFunction pow(const RationalFunction& x, long e) {
  if (e < 0) return pow(RationalFunction(1) / x, -e);
  RationalFunction r(1), b = x;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

RationalFunction parse_rational_function(std::string_view text) {
  ExprSemantics<RationalFunction> sem{
      [](const Integer& z) { return RationalFunction(Rational(z)); },
      [](std::string_view name) -> std::optional<RationalFunction> {
        if (name == "n") return RationalFunction(UPoly::n());
        return std::nullopt;
      },
      [](const RationalFunction& x, long e) { return pow(x, e); }};
  return parse_expression(text, sem);
}

}  // namespace omega
