#include "omega/checks/substitution_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace omega::checks {

namespace {

unsigned max_exponent(const RawPoly& p) {
  unsigned m = 0;
  for (const auto& t : p)
    for (auto e : t.exponents) m = std::max(m, e);
  return m;
}

}  // namespace

TPoly substitute(const RawPoly& p, std::uint64_t base) {
  TPoly out;
  for (const auto& t : p) {
    std::uint64_t degree = 0;
    std::uint64_t weight = base;
    for (auto e : t.exponents) {
      degree += e * weight;
      weight *= base;
    }
    out[degree] += t.coef;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TPoly multiply(const TPoly& a, const TPoly& b) {
  TPoly out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) out[da + db] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TPoly subtract(const TPoly& a, const TPoly& b) {
  TPoly out = a;
  for (const auto& [d, c] : b) out[d] -= c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int lowest_sign(const TPoly& p) { return p.empty() ? 0 : sgn(p.begin()->second); }

std::strong_ordering oracle_compare(const RawFraction& a, const RawFraction& b) {
  // Exponents in the cross products never exceed the sum of the two maxima.
  const unsigned bound = std::max(max_exponent(a.num), max_exponent(a.den)) +
                         std::max(max_exponent(b.num), max_exponent(b.den));
  const std::uint64_t base = bound + 1;
  std::size_t vars = 0;
  for (const auto* p : {&a.num, &a.den, &b.num, &b.den})
    for (const auto& t : *p) vars = std::max(vars, t.exponents.size());
  std::uint64_t top = 1;
  for (std::size_t j = 0; j <= vars; ++j) {
    if (top > (std::uint64_t(1) << 40) / base) throw std::overflow_error("substitution degree overflow");
    top *= base;
  }
  TPoly an = substitute(a.num, base), ad = substitute(a.den, base);
  TPoly bn = substitute(b.num, base), bd = substitute(b.den, base);
  int s = lowest_sign(subtract(multiply(an, bd), multiply(bn, ad))) * lowest_sign(multiply(ad, bd));
  if (s == 0) return std::strong_ordering::equal;
  return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace omega::checks
