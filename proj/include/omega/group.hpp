#pragma once

// Words in finitely generated free and free-abelian groups, and the
// Roelcke-Dierolf neighbourhood calculus on them: symmetric products
// sym<B_n>, the conjugation unions V_Phi, i(V) for entourages, and
// truncated membership.  Truncation is one-sided: a Yes carries a
// factorization that can be checked; NoUpTo(N) only rules out products of
// at most N factors.

#include "omega/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omega {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Letters are encoded as 2 * generator + (1 for an inverse), so the code
// order is a < a^-1 < b < b^-1 < ...
struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // +1 or -1
};

class Word {
 public:
  Word() = default;

  static Word generator(std::size_t gen, int exp = 1);

  bool is_identity() const { return k_.empty(); }
  std::size_t length() const { return k_.size(); }
  const std::vector<std::uint16_t>& codes() const { return k_; }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  // g^-1 w g
  Word conjugated_by(const Word& g) const;

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex: shorter first, then by letter code.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  friend Word reduce(const std::vector<Letter>& letters, std::size_t rank);
  std::vector<std::uint16_t> k_;
};

// Free reduction; throws GroupError for a generator id >= rank.
Word reduce(const std::vector<Letter>& letters, std::size_t rank);

using SubsetSpec = std::set<Word>;

SubsetSpec inverse_set(const SubsetSpec& s);
bool is_symmetric(const SubsetSpec& s);
std::size_t max_length(const SubsetSpec& s);

class FreeGroup {
 public:
  explicit FreeGroup(std::vector<std::string> names);
  // Generators a, b, c, ... (or g0, g1, ... past 26).
  static FreeGroup standard(std::size_t rank);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t id(std::string_view name) const;  // throws GroupError

  // Whitespace-separated tokens "x" or "x^-1"; "e" is the identity.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;
  SubsetSpec parse_set(const std::vector<std::string>& words) const;

  // All reduced words of length <= max_len in shortlex order.
  std::vector<Word> words_up_to(std::size_t max_len) const;

 private:
  std::vector<std::string> names_;
};

// ----------------------------------------------------------- products

struct SymConfig {
  std::size_t max_factors = 8;
};

// {reduce(b_1 ... b_n) : b_i in B_i}; throws GroupError past the cap.
SubsetSpec product_set(const std::vector<SubsetSpec>& bs, const SymConfig& cfg = {});

struct SymResult {
  bool found = false;
  std::size_t horizon = 0;
  std::size_t n = 0;                // number of factors when found
  std::vector<std::size_t> order;   // sigma(1..n), 1-based set indices
  std::vector<Word> factors;        // factors[k] in B_{order[k]}
};

// Membership of w in the union over 1 <= n <= N and sigma in S_n of
// B_sigma(1) ... B_sigma(n), using B_1..B_N.  At N = 0 the truncation is
// {e}.  Searches n in increasing order, and within n the set indices and
// set elements in increasing order, so the certificate is deterministic.
SymResult sym_member(const Word& w, const std::vector<SubsetSpec>& bs, std::size_t horizon,
                     const SymConfig& cfg = {});

// Independent check of a Yes certificate.
bool check_certificate(const Word& w, const std::vector<SubsetSpec>& bs, const SymResult& r);

// Every member of the horizon-N truncation of length <= max_len.  Prefix
// products are shared across permutations through the depth-first
// traversal of index sequences.
SubsetSpec sym_set(const std::vector<SubsetSpec>& bs, std::size_t horizon, std::size_t max_len,
                   const SymConfig& cfg = {});

// ------------------------------------------------------------ Phi maps

class PhiMap {
 public:
  PhiMap() = default;
  explicit PhiMap(SubsetSpec fallback, std::map<Word, SubsetSpec> exceptions = {})
      : default_(std::move(fallback)), exceptions_(std::move(exceptions)) {}

  const SubsetSpec& at(const Word& g) const;
  const SubsetSpec& fallback() const { return default_; }
  const std::map<Word, SubsetSpec>& exceptions() const { return exceptions_; }

  // Phi^h(g) = Phi(g h).
  PhiMap right_translate(const Word& h) const;

 private:
  SubsetSpec default_;
  std::map<Word, SubsetSpec> exceptions_;
};

// Phi(g) subset of Psi(g) for every g: the default covers all words off
// both exception lists.
bool pointwise_leq(const PhiMap& phi, const PhiMap& psi);

// Union over g in the support of g^-1 (Phi(g) u Phi(g)^-1) g.
SubsetSpec v_phi(const PhiMap& phi, const std::set<Word>& support);

// ---------------------------------------------------------- entourages

// A finite relation on points 0..points-1; point j is generator j.
struct PairRelation {
  std::size_t points = 0;
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  bool reflexive() const;
  bool symmetric() const;
};

// {(x, y) : d(x, y) < r}; d is a symmetric distance matrix.
PairRelation threshold_relation(const std::vector<std::vector<Rational>>& d, const Rational& r);

// i(V) = {x^-1 y} u {x y^-1} over (x, y) in V; throws GroupError unless V
// is reflexive and symmetric.
SubsetSpec i_of_entourage(const PairRelation& v);

// ------------------------------------------------------ abelian groups

using AbelianWord = std::vector<long>;  // one coordinate per generator
using AbelianSet = std::set<AbelianWord>;

AbelianSet i_of_entourage_abelian(const PairRelation& v);
std::string format_abelian(const FreeGroup& names, const AbelianWord& w);

struct AbelianSummand {
  std::size_t index = 0;  // 1-based set index
  int sign = 1;
  AbelianWord element;
};

struct AbelianResult {
  bool found = false;
  std::size_t horizon = 0;
  std::vector<AbelianSummand> summands;
};

// w = sum over n <= N of v_n with v_n in V_n u -V_n or omitted, decided by
// dynamic programming over partial sums.
AbelianResult sin_base_member_abelian(const AbelianWord& w, const std::vector<AbelianSet>& vs, std::size_t horizon);

// Free case: sym<(U_{g in support} g^-1 V_n g)_n> at horizon N.  The
// identity is always used as a conjugator.
SymResult sin_base_member(const Word& w, const std::vector<SubsetSpec>& vs, std::size_t horizon,
                          const std::set<Word>& support, const SymConfig& cfg = {});

// ------------------------------------------------- intersection filter

// A filter with an omega^omega-base presented by an increasing chain of
// sets: V(alpha) = chain[min(alpha[coordinate], chain.size() - 1)], which is
// monotone in alpha.  Entries of alpha past its length count as 0.
struct ChainFilter {
  std::vector<SubsetSpec> chain;
  std::size_t coordinate = 0;

  SubsetSpec at(const std::vector<unsigned>& alpha) const;
  // Throws GroupError unless the chain is increasing by inclusion.
  void validate() const;
};

// V(f) = union over n of V_n(f_n), a base set of the intersection filter.
SubsetSpec intersection_base(const std::vector<ChainFilter>& filters, const std::vector<std::vector<unsigned>>& f);

// ----------------------------------------------------- monotonicity

struct MonotoneReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<Word> counterexample;
};

// Throws GroupError unless phi[n] <= psi[n] pointwise for every n.  Then
// confirms that every sampled word in the Phi truncation is also in the Psi
// truncation at the same horizon and support.
MonotoneReport rd_monotone_check(const std::vector<PhiMap>& phi, const std::vector<PhiMap>& psi,
                                 const std::vector<Word>& samples, std::size_t horizon,
                                 const std::set<Word>& support, const SymConfig& cfg = {});

}  // namespace omega
