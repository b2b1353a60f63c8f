#include "omega/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace omega {

// ---------------------------------------------------------------- posets

FinitePoset::FinitePoset(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& leq)
    : names_(std::move(elements)), rel_(names_.size() * names_.size(), 0) {
  const std::size_t n = names_.size();
  {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != n) throw OrderError("poset elements must be distinct");
  }
  for (auto [x, y] : leq) {
    if (x >= n || y >= n) throw OrderError("order relation mentions an unknown element");
    rel_[x * n + y] = 1;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!this->leq(x, x)) throw OrderError("order is not reflexive at " + names_[x]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && this->leq(x, y) && this->leq(y, x))
        throw OrderError("order is not antisymmetric at " + names_[x] + ", " + names_[y]);
      if (!this->leq(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (this->leq(y, z) && !this->leq(x, z))
          throw OrderError("order is not transitive at " + names_[x] + ", " + names_[y] + ", " + names_[z]);
    }
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
  return from_predicate(std::move(names), [](std::size_t a, std::size_t b) { return a <= b; });
}

std::size_t FinitePoset::index(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return k;
  throw OrderError("unknown poset element '" + std::string(name) + "'");
}

std::vector<std::size_t> FinitePoset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    bool top = true;
    for (std::size_t y = 0; y < size() && top; ++y) top = y == x || !leq(x, y);
    if (top) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::relation() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (leq(x, y)) out.emplace_back(x, y);
  return out;
}

namespace {

void require_total(const PosetMap& f, const FinitePoset& d, const FinitePoset& e) {
  if (f.size() != d.size()) throw PartialMap("map covers " + std::to_string(f.size()) + " of " + std::to_string(d.size()) + " elements");
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!f[x]) throw PartialMap("map is undefined at " + d.names()[x]);
    if (*f[x] >= e.size()) throw PartialMap("map sends " + d.names()[x] + " outside the target");
  }
}

}  // namespace

MapVerdict check_monotone(const PosetMap& f, const FinitePoset& d, const FinitePoset& e) {
  require_total(f, d, e);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y)
      if (d.leq(x, y) && !e.leq(*f[x], *f[y])) return {false, {x, y}};
  return {};
}

MapVerdict check_cofinal(const PosetMap& f, const FinitePoset& d, const FinitePoset& e) {
  require_total(f, d, e);
  for (std::size_t t = 0; t < e.size(); ++t) {
    bool below = false;
    for (std::size_t x = 0; x < d.size() && !below; ++x) below = e.leq(t, *f[x]);
    if (!below) return {false, {t}};
  }
  return {};
}

// ------------------------------------------------ semilattice extension

PointSet semilattice_extend(const std::vector<PointSet>& v, const IndexSet& s, const std::optional<PointSet>& universe) {
  if (s.empty()) {
    if (universe) return *universe;
    throw OrderError("semilattice extension of the empty index set needs a universe");
  }
  for (auto k : s)
    if (k >= v.size()) throw OrderError("index " + std::to_string(k) + " is outside the family");
  PointSet out = v[*s.begin()];
  for (auto k : s) {
    PointSet next;
    std::set_intersection(out.begin(), out.end(), v[k].begin(), v[k].end(), std::inserter(next, next.end()));
    out = std::move(next);
  }
  return out;
}

namespace {

std::string set_name(const IndexSet& s) {
  std::string out = "{";
  for (auto k : s) out += (out.size() > 1 ? "," : "") + std::to_string(k);
  return out + "}";
}

std::string set_name(const PointSet& s) {
  std::string out = "{";
  for (auto k : s) out += (out.size() > 1 ? "," : "") + std::to_string(k);
  return out + "}";
}

}  // namespace

SemilatticeInstance semilattice_instance(const std::vector<PointSet>& v) {
  if (v.empty() || v.size() > 16) throw OrderError("semilattice instances take 1 to 16 sets");
  std::vector<IndexSet> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << v.size()); ++mask) {
    IndexSet s;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (mask >> k & 1) s.insert(k);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  // Closure of v under finite intersections, built without the extension.
  std::set<PointSet> closed(v.begin(), v.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<PointSet> cur(closed.begin(), closed.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        PointSet c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(c, c.end()));
        grew |= closed.insert(std::move(c)).second;
      }
  }
  std::vector<PointSet> family(closed.begin(), closed.end());

  std::vector<std::string> dn, tn;
  for (const auto& s : subsets) dn.push_back(set_name(s));
  for (const auto& p : family) tn.push_back(set_name(p));
  FinitePoset domain = FinitePoset::from_predicate(dn, [&](std::size_t a, std::size_t b) {
    return std::includes(subsets[b].begin(), subsets[b].end(), subsets[a].begin(), subsets[a].end());
  });
  FinitePoset target = FinitePoset::from_predicate(tn, [&](std::size_t a, std::size_t b) {
    return std::includes(family[a].begin(), family[a].end(), family[b].begin(), family[b].end());
  });
  PosetMap map;
  for (const auto& s : subsets) {
    const PointSet img = semilattice_extend(v, s);
    map.push_back(static_cast<std::size_t>(std::lower_bound(family.begin(), family.end(), img) - family.begin()));
  }
  return {std::move(subsets), std::move(family), std::move(domain), std::move(target), std::move(map)};
}

// ----------------------------------------------------- branch joins

void Branch::validate() const {
  if (period.empty()) throw OrderError("branch period must be nonempty");
  for (char c : preperiod + period)
    if (c != '0' && c != '1') throw OrderError("branch bits must be 0 or 1");
}

bool Branch::bit(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i] == '1';
  return period[(i - preperiod.size()) % period.size()] == '1';
}

std::string Branch::prefix(std::size_t len) const {
  std::string out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out += bit(i) ? '1' : '0';
  return out;
}

Branch Branch::canonical() const {
  validate();
  Branch b = *this;
  const std::size_t q = b.period.size();
  for (std::size_t d = 1; d <= q; ++d) {
    if (q % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < q && ok; ++i) ok = b.period[i] == b.period[i - d];
    if (ok) {
      b.period.resize(d);
      break;
    }
  }
  while (!b.preperiod.empty() && b.preperiod.back() == b.period.back()) {
    b.preperiod.pop_back();
    std::rotate(b.period.rbegin(), b.period.rbegin() + 1, b.period.rend());
  }
  return b;
}

std::string Branch::to_string() const { return preperiod + "(" + period + ")"; }

Branch parse_branch(std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.find(')');
  if (open == std::string_view::npos || close != text.size() - 1 || close < open)
    throw OrderError("branch must look like pre(period), got '" + std::string(text) + "'");
  Branch b{std::string(text.substr(0, open)), std::string(text.substr(open + 1, close - open - 1))};
  b.validate();
  return b;
}

bool same_sequence(const Branch& a, const Branch& b) { return a.canonical() == b.canonical(); }

Integer prefix_code(std::string_view bits) {
  Integer x = 1;
  for (char c : bits) {
    if (c != '0' && c != '1') throw OrderError("prefix bits must be 0 or 1");
    x = 2 * x + (c == '1' ? 1 : 0);
  }
  return x - 1;
}

std::string prefix_decode(const Integer& code) {
  if (code < 0) throw OrderError("prefix codes are nonnegative");
  const Integer x = code + 1;
  std::string s = x.get_str(2);
  return s.substr(1);
}

std::size_t disambiguation_depth(const std::vector<Branch>& family) {
  std::size_t pre = 0, per = 0, l = 1;
  for (const auto& b : family) {
    b.validate();
    pre = std::max(pre, b.preperiod.size());
    per = std::max(per, b.period.size());
    l = std::lcm(l, b.period.size());
  }
  return pre + l + per;
}

std::vector<Integer> AdJoin::codes() const {
  std::vector<Integer> out;
  for (const auto& p : prefixes) out.push_back(prefix_code(p));
  std::sort(out.begin(), out.end());
  return out;
}

bool AdJoin::leq(const AdJoin& other) const {
  if (depth != other.depth) throw OrderError("joins truncated at different depths");
  return std::includes(other.prefixes.begin(), other.prefixes.end(), prefixes.begin(), prefixes.end());
}

AdJoin ad_join(const std::vector<Branch>& family, const IndexSet& chosen, std::size_t depth) {
  const std::size_t need = disambiguation_depth(family);
  if (depth < need)
    throw OrderError("depth " + std::to_string(depth) + " is below the disambiguation depth " + std::to_string(need));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (same_sequence(family[i], family[j]))
        throw OrderError("branches " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  AdJoin out;
  out.depth = depth;
  for (auto k : chosen) {
    if (k >= family.size()) throw OrderError("branch index " + std::to_string(k) + " is outside the family");
    const std::string full = family[k].prefix(depth);
    for (std::size_t len = 0; len <= depth; ++len) out.prefixes.insert(full.substr(0, len));
  }
  return out;
}

bool branch_subset(const std::vector<Branch>& family, const IndexSet& s, const IndexSet& t) {
  for (auto r : s) {
    bool hit = false;
    for (auto u : t) hit = hit || same_sequence(family.at(r), family.at(u));
    if (!hit) return false;
  }
  return true;
}

// -------------------------------------------------- Tukey to monotone

std::vector<std::size_t> tukey_to_monotone(const ChainMap& g, const FinitePoset& d) {
  if (g.empty()) throw PartialMap("the chain must be nonempty");
  for (auto x : g)
    if (x >= d.size()) throw PartialMap("g leaves the poset");
  const std::size_t tau = g.size();
  std::vector<std::size_t> f(d.size(), 0);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t eta = tau; eta-- > 0;)
      if (d.leq(g[eta], x)) {
        f[x] = std::min(tau - 1, eta + 1);
        break;
      }
  return f;
}

bool check_tukey_certificate(const ChainMap& g, const FinitePoset& d, const TukeyCertificate& c) {
  if (g.empty() || c.bounds.size() != g.size() - 1) return false;
  for (std::size_t xi = 0; xi < c.bounds.size(); ++xi)
    if (c.bounds[xi] >= d.size() || g[xi] >= d.size() || !d.leq(g[xi], c.bounds[xi])) return false;
  return true;
}

std::optional<TukeyCertificate> find_tukey_certificate(const ChainMap& g, const FinitePoset& d) {
  if (g.empty()) return std::nullopt;
  TukeyCertificate c;
  for (std::size_t xi = 0; xi + 1 < g.size(); ++xi) {
    std::optional<std::size_t> found;
    for (std::size_t x = 0; x < d.size() && !found; ++x)
      if (g[xi] < d.size() && d.leq(g[xi], x)) found = x;
    if (!found) return std::nullopt;
    c.bounds.push_back(*found);
  }
  return c;
}

// ------------------------------------------------ sequences of naturals

FnSeq::FnSeq(std::vector<unsigned long> values, unsigned long tail) : v_(std::move(values)), tail_(tail) {
  while (!v_.empty() && v_.back() == tail_) v_.pop_back();
}

bool FnSeq::leq(const FnSeq& o) const {
  const std::size_t n = std::max(horizon(), o.horizon());
  return leq_upto(o, n) && tail_ <= o.tail_;
}

bool FnSeq::leq_upto(const FnSeq& o, std::size_t n) const {
  for (std::size_t i = 0; i < n; ++i)
    if (at(i) > o.at(i)) return false;
  return true;
}

FnSeq FnSeq::join(const FnSeq& o) const {
  const std::size_t n = std::max(horizon(), o.horizon());
  std::vector<unsigned long> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::max(at(i), o.at(i));
  return FnSeq(std::move(v), std::max(tail_, o.tail_));
}

std::string FnSeq::to_string() const {
  std::string out = "[";
  for (auto x : v_) out += std::to_string(x) + ", ";
  return out + (v_.empty() ? "" : ".., ") + "then " + std::to_string(tail_) + "]";
}

FnSeq parse_fnseq(std::string_view text) {
  std::string body(text);
  unsigned long tail = 0;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    std::istringstream t(body.substr(semi + 1));
    if (!(t >> tail)) throw OrderError("sequence tail must be a natural number");
    std::string rest;
    if (t >> rest) throw OrderError("unexpected text after the sequence tail");
    body.resize(semi);
  }
  std::vector<unsigned long> v;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw OrderError("sequence entries must be natural numbers, got '" + tok + "'");
    v.push_back(std::stoul(tok));
  }
  return FnSeq(std::move(v), tail);
}

FnSeq diagonal_witness(const std::vector<FnSeq>& a) {
  std::vector<unsigned long> z;
  for (std::size_t x = 0; x < a.size(); ++x) z.push_back(a[x].at(x) + 1);
  return FnSeq(std::move(z), 0);
}

bool check_diagonal(const FnSeq& z, const std::vector<FnSeq>& a) {
  for (std::size_t b = 0; b < a.size(); ++b)
    if (z.at(b) <= a[b].at(b) || z.leq_upto(a[b], a.size())) return false;
  return true;
}

// ----------------------------------------------------------------- boxes

BoxNbhd::BoxNbhd(FnSeq f) : f_(std::move(f)) {
  if (f_.tail() == 0) throw OrderError("box radii need f >= 1; the tail is 0");
  for (std::size_t b = 0; b < f_.horizon(); ++b)
    if (f_.at(b) == 0) throw OrderError("box radii need f >= 1; f(" + std::to_string(b) + ") = 0");
}

bool BoxNbhd::contains(const SparseVector& x) const {
  for (const auto& [b, v] : x)
    if (abs(v) * Rational(f_.at(b)) >= 1) return false;
  return true;
}

BoxCertificate box_unbounded_cert(const std::vector<FnSeq>& family, std::size_t beta, unsigned long k) {
  if (k == 0) throw OrderError("certificate threshold must be positive");
  BoxCertificate c{beta, k, {}, Rational(1, k)};
  for (std::size_t m = 0; m < family.size(); ++m)
    if (family[m].at(beta) >= k) c.members.push_back(m);
  if (c.members.empty())
    throw OrderError("no family member reaches " + std::to_string(k) + " at coordinate " + std::to_string(beta));
  return c;
}

bool certificate_forces(const BoxCertificate& c, const std::vector<FnSeq>& family, const SparseVector& x) {
  for (auto m : c.members)
    if (!BoxNbhd(family.at(m)).contains(x)) return true;
  auto it = x.find(c.beta);
  return it == x.end() || abs(it->second) < c.bound;
}

}  // namespace omega
