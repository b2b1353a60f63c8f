#include "omega/uniformity.hpp"

#include <algorithm>

namespace omega {

// ------------------------------------------------------------- relations

Entourage Entourage::diagonal(std::size_t points) {
  Entourage e(points);
  for (std::size_t x = 0; x < points; ++x) e.insert(x, x);
  return e;
}

bool Entourage::reflexive() const {
  for (std::size_t x = 0; x < n_; ++x)
    if (!contains(x, x)) return false;
  return true;
}

bool Entourage::symmetric() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y)
      if (contains(x, y) != contains(y, x)) return false;
  return true;
}

bool Entourage::subset_of(const Entourage& o) const { return !first_outside(o); }

std::optional<std::pair<std::size_t, std::size_t>> Entourage::first_outside(const Entourage& o) const {
  if (o.n_ != n_) throw UniformityError("entourages on different point sets");
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (contains(x, y) && !o.contains(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

Entourage Entourage::compose(const Entourage& o) const {
  if (o.n_ != n_) throw UniformityError("entourages on different point sets");
  Entourage out(n_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      if (!contains(x, y)) continue;
      for (std::size_t z = 0; z < n_; ++z)
        if (o.contains(y, z)) out.insert(x, z);
    }
  return out;
}

std::size_t Entourage::pair_count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

// --------------------------------------------------------------- spaces

void MetricSpace::validate() const {
  const std::size_t n = size();
  if (d.size() != n) throw UniformityError("distance matrix has the wrong size");
  for (const auto& row : d)
    if (row.size() != n) throw UniformityError("distance matrix has the wrong size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if ((x == y) != (d[x][y] == 0) || d[x][y] < 0)
        throw UniformityError("d(" + names[x] + ", " + names[y] + ") breaks positivity");
      if (d[x][y] != d[y][x]) throw UniformityError("d is not symmetric at " + names[x] + ", " + names[y]);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (d[x][z] > d[x][y] + d[y][z])
          throw UniformityError("triangle inequality fails at " + names[x] + ", " + names[y] + ", " + names[z]);
  for (const auto& k : compacts) {
    if (k.empty()) throw UniformityError("compact sets must be nonempty");
    for (auto p : k)
      if (p >= n) throw UniformityError("compact set mentions an unknown point");
  }
  for (auto p : limit_points) {
    bool covered = false;
    for (const auto& k : compacts) covered = covered || std::find(k.begin(), k.end(), p) != k.end();
    if (!covered) throw UniformityError("limit point " + names.at(p) + " lies in no compact set");
  }
}

MetricSpace convergent_sequence(std::size_t n_max, std::vector<std::vector<std::size_t>> compacts) {
  MetricSpace s;
  std::vector<Rational> pos{Rational(0)};
  s.names.push_back("0");
  for (std::size_t k = 1; k <= n_max; ++k) {
    pos.push_back(Rational(1, k));
    s.names.push_back(k == 1 ? "1" : "1/" + std::to_string(k));
  }
  s.d.assign(pos.size(), std::vector<Rational>(pos.size()));
  for (std::size_t x = 0; x < pos.size(); ++x)
    for (std::size_t y = 0; y < pos.size(); ++y) s.d[x][y] = abs(pos[x] - pos[y]);
  s.compacts = std::move(compacts);
  s.limit_points = {0};
  return s;
}

MetricSpace metric_fan(std::size_t spokes, std::size_t n_max) {
  MetricSpace s;
  s.names.push_back("apex");
  std::vector<std::pair<std::size_t, Rational>> where{{0, Rational(0)}};
  for (std::size_t sp = 1; sp <= spokes; ++sp)
    for (std::size_t k = 1; k <= n_max; ++k) {
      s.names.push_back("s" + std::to_string(sp) + ":1/" + std::to_string(k));
      where.emplace_back(sp, Rational(1, k));
    }
  const std::size_t n = where.size();
  s.d.assign(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& [sx, rx] = where[x];
      const auto& [sy, ry] = where[y];
      s.d[x][y] = (sx == sy || sx == 0 || sy == 0) ? Rational(abs(rx - ry)) : Rational(rx + ry);
    }
  s.compacts = {{0}};
  s.limit_points = {0};
  return s;
}

// ------------------------------------------------------------ U_alpha

unsigned long AlphaTruncation::at(std::size_t n) const {
  if (n == 0) throw UniformityError("alpha is indexed from 1");
  if (n <= values.size()) return values[n - 1];
  if (tail) return *tail;
  throw UniformityError("alpha has no entry for K_" + std::to_string(n) + " and no tail");
}

bool AlphaTruncation::leq(const AlphaTruncation& o, std::size_t upto) const {
  for (std::size_t n = 1; n <= upto; ++n)
    if (at(n) > o.at(n)) return false;
  return true;
}

std::string AlphaTruncation::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? ", " : "") + std::to_string(values[k]);
  if (tail) out += std::string(values.empty() ? "" : "; ") + "then " + std::to_string(*tail);
  return out + ")";
}

Rational dyadic(unsigned long a) {
  Integer den = 1;
  den <<= a;
  return Rational(Integer(1), den);
}

Rational distance_to_compact(const MetricSpace& s, std::size_t n, std::size_t x, std::size_t y) {
  const auto& k = s.compacts.at(n - 1);
  Rational best = -1;
  for (auto p : k) {
    const Rational& a = s.d[x][p];
    const Rational& b = s.d[y][p];
    const Rational m = a < b ? b : a;
    if (best < 0 || m < best) best = m;
  }
  return best;
}

bool u_alpha_member(const MetricSpace& s, const AlphaTruncation& alpha, std::size_t x, std::size_t y) {
  if (x >= s.size() || y >= s.size()) throw UniformityError("point out of range");
  // Resolve every entry first so a short alpha is reported even on the
  // diagonal.
  std::vector<Rational> eps;
  for (std::size_t n = 1; n <= s.compacts.size(); ++n) eps.push_back(dyadic(alpha.at(n)));
  if (x == y) return true;
  for (std::size_t n = 1; n <= s.compacts.size(); ++n)
    if (distance_to_compact(s, n, x, y) < eps[n - 1]) return true;
  return false;
}

Entourage u_alpha(const MetricSpace& s, const AlphaTruncation& alpha) {
  Entourage e(s.size());
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (u_alpha_member(s, alpha, x, y)) e.insert(x, y);
  return e;
}

BaseMonotoneVerdict base_monotone_check(const MetricSpace& s, const AlphaTruncation& alpha, const AlphaTruncation& beta) {
  if (!alpha.leq(beta, s.compacts.size())) throw UniformityError("monotone check needs alpha <= beta");
  BaseMonotoneVerdict v;
  if (auto bad = u_alpha(s, beta).first_outside(u_alpha(s, alpha))) {
    v.holds = false;
    v.counterexample = bad;
  }
  return v;
}

Entourage DiagonalNbhd::pairs(const MetricSpace& s) const {
  if (radii.size() != s.size()) throw UniformityError("one radius per point is required");
  for (const auto& r : radii)
    if (r <= 0) throw UniformityError("radii must be positive");
  Entourage e = Entourage::diagonal(s.size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    std::vector<std::size_t> ball;
    for (std::size_t x = 0; x < s.size(); ++x)
      if (s.d[x][c] < radii[c]) ball.push_back(x);
    for (auto x : ball)
      for (auto y : ball) e.insert(x, y);
  }
  return e;
}

CofinalSearch base_cofinal_search(const MetricSpace& s, const DiagonalNbhd& o, unsigned long resolution) {
  CofinalSearch out;
  out.resolution = resolution;
  const Entourage target = o.pairs(s);
  AlphaTruncation alpha;
  for (const auto& k : s.compacts) {
    Rational slack = o.radii.at(k.front());
    for (auto p : k)
      if (o.radii.at(p) < slack) slack = o.radii[p];
    out.slack.push_back(slack);
    unsigned long a = 0;
    while (a <= resolution && dyadic(a) > slack) ++a;
    if (a > resolution) return out;
    alpha.values.push_back(a);
  }
  if (!u_alpha(s, alpha).subset_of(target)) return out;
  out.alpha = std::move(alpha);
  return out;
}

std::optional<unsigned long> composition_search(const MetricSpace& s, const AlphaTruncation& alpha, unsigned long max_shift) {
  const Entourage base = u_alpha(s, alpha);
  for (unsigned long c = 0; c <= max_shift; ++c) {
    AlphaTruncation shifted;
    for (std::size_t n = 1; n <= s.compacts.size(); ++n) shifted.values.push_back(alpha.at(n) + c);
    const Entourage u = u_alpha(s, shifted);
    if (u.compose(u).subset_of(base)) return c;
  }
  return std::nullopt;
}

// ------------------------------------------------------ countable spaces

const std::set<std::size_t>& CountableSpace::at(std::size_t x, unsigned long k) const {
  const auto& chain = bases.at(x);
  return chain[std::min<std::size_t>(k, chain.size() - 1)];
}

void CountableSpace::validate() const {
  if (bases.size() != size()) throw UniformityError("one base chain per point is required");
  for (std::size_t x = 0; x < size(); ++x) {
    const auto& chain = bases[x];
    if (chain.empty()) throw UniformityError("base chain of " + names[x] + " is empty");
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (!chain[k].count(x)) throw UniformityError("i_" + names[x] + "(" + std::to_string(k) + ") misses its point");
      for (auto p : chain[k])
        if (p >= size()) throw UniformityError("base set mentions an unknown point");
      if (k > 0 && !std::includes(chain[k - 1].begin(), chain[k - 1].end(), chain[k].begin(), chain[k].end()))
        throw UniformityError("base chain of " + names[x] + " is not decreasing");
    }
  }
}

CountableSpace convergent_countable(std::size_t n) {
  CountableSpace s;
  for (std::size_t m = 0; m < n; ++m) {
    s.names.push_back(std::to_string(m));
    s.bases.push_back({{m}});
  }
  s.names.push_back("top");
  std::vector<std::set<std::size_t>> chain;
  for (std::size_t k = 0; k <= n; ++k) {
    std::set<std::size_t> tail{n};
    for (std::size_t m = k; m < n; ++m) tail.insert(m);
    chain.push_back(std::move(tail));
  }
  s.bases.push_back(std::move(chain));
  return s;
}

Entourage countable_base(const CountableSpace& s, const std::vector<unsigned long>& f) {
  if (f.size() != s.size()) throw UniformityError("f needs one entry per point");
  Entourage e(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    const auto& nb = s.at(x, f[x]);
    for (auto a : nb)
      for (auto b : nb) e.insert(a, b);
  }
  return e;
}

}  // namespace omega
