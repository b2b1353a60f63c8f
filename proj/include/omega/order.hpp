#pragma once

// Finite truncations of directed sets: posets with explicit order, maps
// between them, the semilattice extension of a family of sets, joins of
// almost disjoint prefix sets of binary branches, the Tukey-to-monotone
// conversion, diagonal witnesses and box neighbourhoods in the direct sum.

#include "omega/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omega {

class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PartialMap : public OrderError {
 public:
  using OrderError::OrderError;
};

class FinitePoset {
 public:
  // Throws OrderError unless the relation is reflexive, antisymmetric and
  // transitive on the listed elements.  Element names must be distinct.
  FinitePoset(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& leq);

  template <class Leq>
  static FinitePoset from_predicate(std::vector<std::string> elements, Leq leq) {
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = 0; j < elements.size(); ++j)
        if (leq(i, j)) rel.emplace_back(i, j);
    return FinitePoset(std::move(elements), rel);
  }
  // 0 < 1 < ... < n-1, named by their numbers.
  static FinitePoset chain(std::size_t n);

  std::size_t size() const { return names_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return rel_[x * names_.size() + y]; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index(std::string_view name) const;  // throws OrderError
  std::vector<std::size_t> maximal() const;
  std::vector<std::pair<std::size_t, std::size_t>> relation() const;

 private:
  std::vector<std::string> names_;
  std::vector<char> rel_;
};

// f[x] is the image of element x of the domain; nullopt marks a gap.
using PosetMap = std::vector<std::optional<std::size_t>>;

struct MapVerdict {
  bool holds = true;
  // Monotone: a pair x <= y with f(x) not <= f(y).  Cofinal: an e above
  // every image.
  std::vector<std::size_t> witness;
};

// Both throw PartialMap unless f is total on D with values in E.
MapVerdict check_monotone(const PosetMap& f, const FinitePoset& d, const FinitePoset& e);
MapVerdict check_cofinal(const PosetMap& f, const FinitePoset& d, const FinitePoset& e);

// ------------------------------------------------ semilattice extension

using IndexSet = std::set<std::size_t>;
using PointSet = std::set<long>;

// Intersection of v[k] over k in s.  An empty s gives the universe when one
// is supplied and throws OrderError otherwise.
PointSet semilattice_extend(const std::vector<PointSet>& v, const IndexSet& s,
                            const std::optional<PointSet>& universe = std::nullopt);

// Nonempty index sets under inclusion, mapped to the intersection-closed
// family generated by v, ordered by reverse inclusion.
struct SemilatticeInstance {
  std::vector<IndexSet> subsets;
  std::vector<PointSet> family;
  FinitePoset domain;
  FinitePoset target;
  PosetMap map;
};

SemilatticeInstance semilattice_instance(const std::vector<PointSet>& v);

// ----------------------------------------------------- branch joins

// The eventually periodic 0/1 sequence preperiod . period . period ...
struct Branch {
  std::string preperiod;
  std::string period;

  void validate() const;  // bits only, nonempty period
  bool bit(std::size_t i) const;
  std::string prefix(std::size_t len) const;
  // Shortest period, then shortest preperiod: equal sequences have equal
  // canonical forms.
  Branch canonical() const;
  std::string to_string() const;  // "pre(period)"

  friend bool operator==(const Branch&, const Branch&) = default;
};

Branch parse_branch(std::string_view text);  // "01(10)" or "(0)"
bool same_sequence(const Branch& a, const Branch& b);

// Binary strings to naturals: w -> (1w read in base 2) - 1, so "" -> 0,
// "0" -> 1, "1" -> 2, "00" -> 3.
Integer prefix_code(std::string_view bits);
std::string prefix_decode(const Integer& code);

// Longest preperiod + lcm of the periods + longest period.  Two distinct
// branches of the family differ before this depth.
std::size_t disambiguation_depth(const std::vector<Branch>& family);

// Join of the characteristic functions of A_r (prefix sets) over the chosen
// branches, kept as the set of prefixes of length <= depth.
struct AdJoin {
  std::size_t depth = 0;
  std::set<std::string> prefixes;

  std::vector<Integer> codes() const;
  // Pointwise order of the truncated 0/1 vectors; depths must agree.
  bool leq(const AdJoin& other) const;
};

// Throws OrderError when the family has repeated branches, an index is out
// of range, or depth is below the disambiguation depth of the family.
AdJoin ad_join(const std::vector<Branch>& family, const IndexSet& chosen, std::size_t depth);

// S within T by the branch criterion, comparing sequences exactly.
bool branch_subset(const std::vector<Branch>& family, const IndexSet& s, const IndexSet& t);

// -------------------------------------------------- Tukey to monotone

// g(eta) for eta = 0..tau-1, as elements of D.
using ChainMap = std::vector<std::size_t>;

// f(x) = min(tau - 1, 1 + max{eta : g(eta) <= x}), or 0 when no eta
// qualifies.  Throws PartialMap when g leaves D or tau = 0.
std::vector<std::size_t> tukey_to_monotone(const ChainMap& g, const FinitePoset& d);

// For each xi < tau - 1 an element bounds[xi] of D above g(xi): the
// boundedness data the cofinality argument consumes on a truncation.
struct TukeyCertificate {
  std::vector<std::size_t> bounds;
};

bool check_tukey_certificate(const ChainMap& g, const FinitePoset& d, const TukeyCertificate& c);
std::optional<TukeyCertificate> find_tukey_certificate(const ChainMap& g, const FinitePoset& d);

// ------------------------------------------------ sequences of naturals

// values[0..M) followed by tail forever.  Stored with trailing entries
// equal to the tail removed.
class FnSeq {
 public:
  FnSeq() = default;
  explicit FnSeq(std::vector<unsigned long> values, unsigned long tail = 0);

  unsigned long at(std::size_t i) const { return i < v_.size() ? v_[i] : tail_; }
  const std::vector<unsigned long>& values() const { return v_; }
  unsigned long tail() const { return tail_; }
  // Coordinates past this all equal the tail.
  std::size_t horizon() const { return v_.size(); }

  bool leq(const FnSeq& o) const;
  // Pointwise order on coordinates 0..n-1 only.
  bool leq_upto(const FnSeq& o, std::size_t n) const;
  FnSeq join(const FnSeq& o) const;
  std::string to_string() const;  // "[v0, v1, .., then t]"

  friend bool operator==(const FnSeq&, const FnSeq&) = default;

 private:
  std::vector<unsigned long> v_;
  unsigned long tail_ = 0;
};

FnSeq parse_fnseq(std::string_view text);  // "3 1 4" or "3 1 4 ; 0"

// z(x) = a_x(x) + 1 for x < tau = a.size(); zero beyond.
FnSeq diagonal_witness(const std::vector<FnSeq>& a);

// z(beta) > a_beta(beta) and z is not below a_beta on 0..tau-1, for every
// beta; the second part is checked by a full pointwise comparison.
bool check_diagonal(const FnSeq& z, const std::vector<FnSeq>& a);

// ----------------------------------------------------------------- boxes

using SparseVector = std::map<std::size_t, Rational>;

// {x : |x_beta| < 1 / f(beta) for beta in the support of x}.
class BoxNbhd {
 public:
  explicit BoxNbhd(FnSeq f);  // throws OrderError if some f(beta) = 0
  bool contains(const SparseVector& x) const;
  const FnSeq& f() const { return f_; }

 private:
  FnSeq f_;
};

// Members of the family with f(beta) >= k.  Lying in all their boxes forces
// |x_beta| < 1/k.
struct BoxCertificate {
  std::size_t beta = 0;
  unsigned long k = 1;
  std::vector<std::size_t> members;
  Rational bound;
};

// Throws OrderError when k = 0 or no member reaches k at beta.
BoxCertificate box_unbounded_cert(const std::vector<FnSeq>& family, std::size_t beta, unsigned long k);
// True when x is outside some member box or |x_beta| < bound.
bool certificate_forces(const BoxCertificate& c, const std::vector<FnSeq>& family, const SparseVector& x);

}  // namespace omega
