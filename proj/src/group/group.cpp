#include "omega/group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace omega {

// ------------------------------------------------------------------ words

Word Word::generator(std::size_t gen, int exp) {
  Word w;
  w.k_.push_back(static_cast<std::uint16_t>(2 * gen + (exp < 0 ? 1 : 0)));
  return w;
}

Word Word::inverse() const {
  Word w;
  w.k_.reserve(k_.size());
  for (std::size_t i = k_.size(); i-- > 0;) w.k_.push_back(k_[i] ^ 1);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  for (auto c : b.k_) {
    if (!r.k_.empty() && r.k_.back() == (c ^ 1))
      r.k_.pop_back();
    else
      r.k_.push_back(c);
  }
  return r;
}

Word Word::conjugated_by(const Word& g) const { return g.inverse() * *this * g; }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.k_.size() != b.k_.size()) return a.k_.size() <=> b.k_.size();
  return a.k_ <=> b.k_;
}

Word reduce(const std::vector<Letter>& letters, std::size_t rank) {
  Word r;
  for (const auto& l : letters) {
    if (l.gen >= rank) throw GroupError("unknown generator id " + std::to_string(l.gen));
    if (l.exp != 1 && l.exp != -1) throw GroupError("letter exponents must be +1 or -1");
    const auto c = static_cast<std::uint16_t>(2 * l.gen + (l.exp < 0 ? 1 : 0));
    if (!r.k_.empty() && r.k_.back() == (c ^ 1))
      r.k_.pop_back();
    else
      r.k_.push_back(c);
  }
  return r;
}

SubsetSpec inverse_set(const SubsetSpec& s) {
  SubsetSpec out;
  for (const auto& w : s) out.insert(w.inverse());
  return out;
}

bool is_symmetric(const SubsetSpec& s) { return inverse_set(s) == s; }

std::size_t max_length(const SubsetSpec& s) {
  std::size_t m = 0;
  for (const auto& w : s) m = std::max(m, w.length());
  return m;
}

// ------------------------------------------------------------ FreeGroup

FreeGroup::FreeGroup(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || n == "e") throw GroupError("invalid generator name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') throw GroupError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw GroupError("duplicate generator name '" + n + "'");
  }
  if (names_.size() > 4096) throw GroupError("too many generators");
}

FreeGroup FreeGroup::standard(std::size_t rank) {
  static const std::string letters = "abcdfghijklmnopqrstuvwxyz";
  std::vector<std::string> names;
  for (std::size_t j = 0; j < rank; ++j)
    names.push_back(rank <= letters.size() ? std::string(1, letters[j]) : "g" + std::to_string(j));
  return FreeGroup(std::move(names));
}

std::size_t FreeGroup::id(std::string_view name) const {
  for (std::size_t j = 0; j < names_.size(); ++j)
    if (names_[j] == name) return j;
  throw GroupError("unknown generator '" + std::string(name) + "'");
}

Word FreeGroup::parse(std::string_view text) const {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    const auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    long power = 1;
    if (caret != std::string::npos) {
      const std::string p = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        power = std::stol(p, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != p.size() || power == 0 || power > 64 || power < -64)
        throw GroupError("bad exponent in '" + tok + "'");
    }
    const std::size_t g = id(name);
    for (long k = 0; k < (power < 0 ? -power : power); ++k) letters.push_back({g, power < 0 ? -1 : 1});
  }
  return reduce(letters, rank());
}

std::string FreeGroup::format(const Word& w) const {
  if (w.is_identity()) return "e";
  std::string out;
  for (auto c : w.codes()) {
    if (!out.empty()) out += ' ';
    out += names_.at(c / 2);
    if (c & 1) out += "^-1";
  }
  return out;
}

SubsetSpec FreeGroup::parse_set(const std::vector<std::string>& words) const {
  SubsetSpec s;
  for (const auto& w : words) s.insert(parse(w));
  return s;
}

std::vector<Word> FreeGroup::words_up_to(std::size_t max_len) const {
  std::vector<Word> out{Word()};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len && rank() > 0; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t c = 0; c < 2 * rank(); ++c) {
        Word next = out[i] * Word::generator(c / 2, c & 1 ? -1 : 1);
        if (next.length() == len) out.push_back(std::move(next));
      }
    begin = end;
  }
  return out;
}

// ------------------------------------------------------------- products

SubsetSpec product_set(const std::vector<SubsetSpec>& bs, const SymConfig& cfg) {
  if (bs.size() > cfg.max_factors)
    throw GroupError("product of " + std::to_string(bs.size()) + " sets exceeds the cap " + std::to_string(cfg.max_factors));
  SubsetSpec acc{Word()};
  for (const auto& b : bs) {
    SubsetSpec next;
    for (const auto& p : acc)
      for (const auto& x : b) next.insert(p * x);
    acc = std::move(next);
  }
  return acc;
}

namespace {

struct StateHash {
  std::size_t operator()(const std::pair<Word, std::uint32_t>& s) const {
    std::size_t h = s.second * 0x9E3779B97F4A7C15ull;
    for (auto c : s.first.codes()) h = (h ^ c) * 0x100000001B3ull;
    return h;
  }
};

class SymSearch {
 public:
  SymSearch(const std::vector<SubsetSpec>& bs, std::size_t n) : bs_(bs), n_(n) {
    for (std::size_t j = 0; j < n; ++j) maxlen_.push_back(max_length(bs[j]));
  }

  bool run(const Word& w) { return step(w, 0); }

  std::vector<std::size_t> order;
  std::vector<Word> factors;

 private:
  bool step(const Word& r, std::uint32_t mask) {
    const std::uint32_t full = (std::uint32_t(1) << n_) - 1;
    if (mask == full) return r.is_identity();
    std::size_t reach = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (!(mask >> j & 1)) reach += maxlen_[j];
    if (r.length() > reach) return false;
    if (failed_.count({r, mask})) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (mask >> j & 1) continue;
      for (const auto& b : bs_[j]) {
        order.push_back(j + 1);
        factors.push_back(b);
        if (step(b.inverse() * r, mask | (std::uint32_t(1) << j))) return true;
        order.pop_back();
        factors.pop_back();
      }
    }
    failed_.insert({r, mask});
    return false;
  }

  const std::vector<SubsetSpec>& bs_;
  std::size_t n_;
  std::vector<std::size_t> maxlen_;
  std::unordered_set<std::pair<Word, std::uint32_t>, StateHash> failed_;
};

void check_horizon(const std::vector<SubsetSpec>& bs, std::size_t horizon, const SymConfig& cfg) {
  if (horizon > cfg.max_factors)
    throw GroupError("horizon " + std::to_string(horizon) + " exceeds the cap " + std::to_string(cfg.max_factors));
  if (horizon > bs.size())
    throw GroupError("horizon " + std::to_string(horizon) + " needs that many sets, got " + std::to_string(bs.size()));
}

}  // namespace

SymResult sym_member(const Word& w, const std::vector<SubsetSpec>& bs, std::size_t horizon, const SymConfig& cfg) {
  check_horizon(bs, horizon, cfg);
  SymResult r;
  r.horizon = horizon;
  if (horizon == 0) {
    r.found = w.is_identity();
    return r;
  }
  for (std::size_t n = 1; n <= horizon; ++n) {
    SymSearch s(bs, n);
    if (s.run(w)) {
      r.found = true;
      r.n = n;
      r.order = std::move(s.order);
      r.factors = std::move(s.factors);
      return r;
    }
  }
  return r;
}

bool check_certificate(const Word& w, const std::vector<SubsetSpec>& bs, const SymResult& r) {
  if (!r.found) return false;
  if (r.n == 0) return r.horizon == 0 && w.is_identity();
  if (r.n > r.horizon || r.order.size() != r.n || r.factors.size() != r.n) return false;
  std::vector<std::size_t> sorted = r.order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < r.n; ++k)
    if (sorted[k] != k + 1) return false;
  Word p;
  for (std::size_t k = 0; k < r.n; ++k) {
    if (r.order[k] > bs.size() || !bs[r.order[k] - 1].count(r.factors[k])) return false;
    p = p * r.factors[k];
  }
  return p == w;
}

SubsetSpec sym_set(const std::vector<SubsetSpec>& bs, std::size_t horizon, std::size_t max_len, const SymConfig& cfg) {
  check_horizon(bs, horizon, cfg);
  SubsetSpec out;
  if (horizon == 0) {
    out.insert(Word());
    return out;
  }
  std::vector<std::size_t> maxlen;
  for (std::size_t j = 0; j < horizon; ++j) maxlen.push_back(max_length(bs[j]));

  // Each node of the traversal is a sequence of distinct indices; its
  // products are computed once and extended by every child.
  std::function<void(const SubsetSpec&, std::uint32_t, std::size_t)> visit = [&](const SubsetSpec& prods,
                                                                              std::uint32_t mask,
                                                                              std::size_t depth) {
    if (depth > 0 && mask == (std::uint32_t(1) << depth) - 1)
      for (const auto& p : prods)
        if (p.length() <= max_len) out.insert(p);
    if (depth == horizon) return;
    for (std::size_t j = 0; j < horizon; ++j) {
      if (mask >> j & 1) continue;
      const std::uint32_t next_mask = mask | (std::uint32_t(1) << j);
      std::size_t slack = 0;
      for (std::size_t i = 0; i < horizon; ++i)
        if (!(next_mask >> i & 1)) slack += maxlen[i];
      SubsetSpec next;
      for (const auto& p : prods)
        for (const auto& b : bs[j]) {
          Word q = p * b;
          if (q.length() <= max_len + slack) next.insert(std::move(q));
        }
      if (!next.empty()) visit(next, next_mask, depth + 1);
    }
  };
  visit(SubsetSpec{Word()}, 0, 0);
  return out;
}

// ------------------------------------------------------------- Phi maps

const SubsetSpec& PhiMap::at(const Word& g) const {
  auto it = exceptions_.find(g);
  return it == exceptions_.end() ? default_ : it->second;
}

PhiMap PhiMap::right_translate(const Word& h) const {
  std::map<Word, SubsetSpec> moved;
  const Word hinv = h.inverse();
  for (const auto& [k, s] : exceptions_) moved[k * hinv] = s;
  return PhiMap(default_, std::move(moved));
}

namespace {

bool subset(const SubsetSpec& a, const SubsetSpec& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

bool pointwise_leq(const PhiMap& phi, const PhiMap& psi) {
  if (!subset(phi.fallback(), psi.fallback())) return false;
  for (const auto* m : {&phi.exceptions(), &psi.exceptions()})
    for (const auto& [g, s] : *m)
      if (!subset(phi.at(g), psi.at(g))) return false;
  return true;
}

SubsetSpec v_phi(const PhiMap& phi, const std::set<Word>& support) {
  SubsetSpec out;
  for (const auto& g : support) {
    const SubsetSpec& s = phi.at(g);
    for (const auto& x : s) {
      out.insert(x.conjugated_by(g));
      out.insert(x.inverse().conjugated_by(g));
    }
  }
  return out;
}

// ----------------------------------------------------------- entourages

bool PairRelation::reflexive() const {
  for (std::size_t x = 0; x < points; ++x)
    if (!pairs.count({x, x})) return false;
  return true;
}

bool PairRelation::symmetric() const {
  for (const auto& [x, y] : pairs)
    if (!pairs.count({y, x})) return false;
  return true;
}

PairRelation threshold_relation(const std::vector<std::vector<Rational>>& d, const Rational& r) {
  PairRelation v;
  v.points = d.size();
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (d[x].size() != d.size()) throw GroupError("distance matrix must be square");
    for (std::size_t y = 0; y < d.size(); ++y)
      if (d[x][y] < r) v.pairs.insert({x, y});
  }
  return v;
}

namespace {

void validate(const PairRelation& v) {
  for (const auto& [x, y] : v.pairs)
    if (x >= v.points || y >= v.points) throw GroupError("relation mentions a point outside the space");
  if (!v.reflexive()) throw GroupError("entourage is not reflexive");
  if (!v.symmetric()) throw GroupError("entourage is not symmetric");
}

}  // namespace

SubsetSpec i_of_entourage(const PairRelation& v) {
  validate(v);
  SubsetSpec out;
  for (const auto& [x, y] : v.pairs) {
    const Word gx = Word::generator(x), gy = Word::generator(y);
    out.insert(gx.inverse() * gy);
    out.insert(gx * gy.inverse());
  }
  return out;
}

AbelianSet i_of_entourage_abelian(const PairRelation& v) {
  validate(v);
  AbelianSet out;
  for (const auto& [x, y] : v.pairs) {
    AbelianWord w(v.points, 0);
    w[y] += 1;
    w[x] -= 1;
    out.insert(w);
    for (auto& c : w) c = -c;
    out.insert(w);
  }
  return out;
}

std::string format_abelian(const FreeGroup& names, const AbelianWord& w) {
  std::string out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0) continue;
    const long c = w[j];
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const long m = c < 0 ? -c : c;
    if (m != 1) out += std::to_string(m) + "*";
    out += names.names().at(j);
  }
  return out.empty() ? "0" : out;
}

namespace {

long l1(const AbelianWord& w) {
  long s = 0;
  for (auto c : w) s += c < 0 ? -c : c;
  return s;
}

long l1_distance(const AbelianWord& a, const AbelianWord& b) {
  long s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] > b[j] ? a[j] - b[j] : b[j] - a[j];
  return s;
}

}  // namespace

AbelianResult sin_base_member_abelian(const AbelianWord& w, const std::vector<AbelianSet>& vs, std::size_t horizon) {
  if (horizon > vs.size()) throw GroupError("horizon exceeds the number of sets");
  for (std::size_t n = 0; n < horizon; ++n)
    for (const auto& v : vs[n])
      if (v.size() != w.size()) throw GroupError("abelian words of different rank");
  std::vector<long> reach(horizon + 1, 0);  // largest L1 norm still addable after step n
  for (std::size_t n = horizon; n-- > 0;) {
    long m = 0;
    for (const auto& v : vs[n]) m = std::max(m, l1(v));
    reach[n] = reach[n + 1] + m;
  }

  struct Step {
    AbelianWord prev;
    int sign;  // 0 for an omitted summand
    AbelianWord element;
  };
  std::vector<std::map<AbelianWord, Step>> layers(horizon + 1);
  const AbelianWord zero(w.size(), 0);
  layers[0][zero] = {zero, 0, {}};
  for (std::size_t n = 0; n < horizon; ++n) {
    for (const auto& [s, _] : layers[n]) {
      auto offer = [&](AbelianWord next, int sign, const AbelianWord& v) {
        if (l1_distance(next, w) > reach[n + 1]) return;
        layers[n + 1].emplace(std::move(next), Step{s, sign, v});
      };
      offer(s, 0, {});
      for (const auto& v : vs[n]) {
        AbelianWord plus = s, minus = s;
        for (std::size_t j = 0; j < s.size(); ++j) {
          plus[j] += v[j];
          minus[j] -= v[j];
        }
        offer(std::move(plus), 1, v);
        offer(std::move(minus), -1, v);
      }
    }
  }

  AbelianResult r;
  r.horizon = horizon;
  if (!layers[horizon].count(w)) return r;
  r.found = true;
  AbelianWord cur = w;
  for (std::size_t n = horizon; n > 0; --n) {
    const Step& st = layers[n].at(cur);
    if (st.sign != 0) r.summands.insert(r.summands.begin(), {n, st.sign, st.element});
    cur = st.prev;
  }
  return r;
}

SymResult sin_base_member(const Word& w, const std::vector<SubsetSpec>& vs, std::size_t horizon,
                          const std::set<Word>& support, const SymConfig& cfg) {
  std::set<Word> conj = support;
  conj.insert(Word());
  std::vector<SubsetSpec> ws;
  for (std::size_t n = 0; n < std::min(horizon, vs.size()); ++n) {
    SubsetSpec u;
    for (const auto& g : conj)
      for (const auto& x : vs[n]) u.insert(x.conjugated_by(g));
    ws.push_back(std::move(u));
  }
  return sym_member(w, ws, horizon, cfg);
}

// -------------------------------------------------- intersection filter

SubsetSpec ChainFilter::at(const std::vector<unsigned>& alpha) const {
  if (chain.empty()) throw GroupError("empty filter chain");
  const std::size_t a = coordinate < alpha.size() ? alpha[coordinate] : 0;
  return chain[std::min(a, chain.size() - 1)];
}

void ChainFilter::validate() const {
  if (chain.empty()) throw GroupError("empty filter chain");
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    if (!subset(chain[k], chain[k + 1])) throw GroupError("filter chain is not increasing at step " + std::to_string(k));
}

SubsetSpec intersection_base(const std::vector<ChainFilter>& filters, const std::vector<std::vector<unsigned>>& f) {
  if (f.size() != filters.size()) throw GroupError("one index sequence per filter is required");
  SubsetSpec out;
  for (std::size_t n = 0; n < filters.size(); ++n) {
    const SubsetSpec s = filters[n].at(f[n]);
    out.insert(s.begin(), s.end());
  }
  return out;
}

// --------------------------------------------------------- monotonicity

MonotoneReport rd_monotone_check(const std::vector<PhiMap>& phi, const std::vector<PhiMap>& psi,
                                 const std::vector<Word>& samples, std::size_t horizon,
                                 const std::set<Word>& support, const SymConfig& cfg) {
  if (phi.size() != psi.size()) throw GroupError("Phi and Psi sequences differ in length");
  for (std::size_t n = 0; n < phi.size(); ++n)
    if (!pointwise_leq(phi[n], psi[n])) throw GroupError("Phi_" + std::to_string(n + 1) + " <= Psi_" + std::to_string(n + 1) + " fails");
  std::vector<SubsetSpec> vphi, vpsi;
  for (std::size_t n = 0; n < std::min(horizon, phi.size()); ++n) {
    vphi.push_back(v_phi(phi[n], support));
    vpsi.push_back(v_phi(psi[n], support));
  }
  MonotoneReport rep;
  for (const auto& w : samples) {
    ++rep.checked;
    if (!sym_member(w, vphi, horizon, cfg).found) continue;
    if (!sym_member(w, vpsi, horizon, cfg).found) {
      rep.holds = false;
      rep.counterexample = w;
      return rep;
    }
  }
  return rep;
}

}  // namespace omega
