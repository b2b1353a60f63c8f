#pragma once

// Entourage bases indexed by sequences of naturals.  Metric spaces are
// finite point sets with exact rational distances standing in for the
// represented part of a space whose non-isolated points are covered by the
// finite sets K_1, K_2, ...  The entourage U_alpha is the union over n of
// the open 2^-alpha(n) neighbourhoods of {(k, k) : k in K_n} in X x X, with
// the max metric on the product.

#include "omega/rational.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace omega {

class UniformityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A relation on points 0..n-1.
class Entourage {
 public:
  Entourage() = default;
  explicit Entourage(std::size_t points) : n_(points), bits_(points * points, 0) {}
  static Entourage diagonal(std::size_t points);

  std::size_t points() const { return n_; }
  bool contains(std::size_t x, std::size_t y) const { return bits_[x * n_ + y]; }
  void insert(std::size_t x, std::size_t y) { bits_[x * n_ + y] = 1; }

  bool reflexive() const;
  bool symmetric() const;
  bool subset_of(const Entourage& o) const;
  // {(x, z) : (x, y) in this and (y, z) in o for some y}.
  Entourage compose(const Entourage& o) const;
  std::size_t pair_count() const;
  // First pair in this but not in o.
  std::optional<std::pair<std::size_t, std::size_t>> first_outside(const Entourage& o) const;

  friend bool operator==(const Entourage&, const Entourage&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

struct MetricSpace {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> d;
  std::vector<std::vector<std::size_t>> compacts;  // K_1, K_2, ...
  std::vector<std::size_t> limit_points;           // must lie in some K_n

  std::size_t size() const { return names.size(); }
  // Exact metric axioms on all triples, compacts in range, limit points
  // covered; throws UniformityError.
  void validate() const;
};

// {0} u {1/n : 1 <= n <= n_max} with the distance of the line.  Point 0 is
// the limit, point k is 1/k.  Default decomposition K_1 = {0}.
MetricSpace convergent_sequence(std::size_t n_max, std::vector<std::vector<std::size_t>> compacts = {{0}});

// `spokes` copies of {1/n : n <= n_max} glued at an apex (point 0).  Points
// on one spoke sit on a line; points on different spokes are at distance
// equal to the sum of their distances to the apex.
MetricSpace metric_fan(std::size_t spokes, std::size_t n_max);

// alpha(n) for n = 1..; entries past the list take the tail when present.
struct AlphaTruncation {
  std::vector<unsigned long> values;
  std::optional<unsigned long> tail;

  unsigned long at(std::size_t n) const;  // 1-based; throws UniformityError
  bool leq(const AlphaTruncation& o, std::size_t upto) const;
  std::string to_string() const;
};

// 2^-a as an exact rational.
Rational dyadic(unsigned long a);

// Distance in the max metric from (x, y) to the diagonal copy of K_n.
Rational distance_to_compact(const MetricSpace& s, std::size_t n, std::size_t x, std::size_t y);

bool u_alpha_member(const MetricSpace& s, const AlphaTruncation& alpha, std::size_t x, std::size_t y);
// U_alpha together with the diagonal.
Entourage u_alpha(const MetricSpace& s, const AlphaTruncation& alpha);

struct BaseMonotoneVerdict {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

// Requires alpha <= beta on K_1..K_m (UniformityError otherwise); checks
// U_beta within U_alpha pair by pair.
BaseMonotoneVerdict base_monotone_check(const MetricSpace& s, const AlphaTruncation& alpha, const AlphaTruncation& beta);

// O = diagonal u union over x of B(x, r_x)^2, with r_x > 0.
struct DiagonalNbhd {
  std::vector<Rational> radii;
  Entourage pairs(const MetricSpace& s) const;
};

struct CofinalSearch {
  std::optional<AlphaTruncation> alpha;  // empty: failure up to resolution
  unsigned long resolution = 0;
  std::vector<Rational> slack;           // min radius over K_n, per n
};

// alpha(n) is the least a <= resolution with 2^-a <= min over k in K_n of
// r_k; the result is then audited exactly against O.
CofinalSearch base_cofinal_search(const MetricSpace& s, const DiagonalNbhd& o, unsigned long resolution = 64);

// Least shift c <= max_shift with U_{alpha + c} o U_{alpha + c} inside
// U_alpha (diagonals included), or nullopt.
std::optional<unsigned long> composition_search(const MetricSpace& s, const AlphaTruncation& alpha,
                                                unsigned long max_shift = 8);

// ------------------------------------------------------ countable spaces

// i_x(k) = bases[x][min(k, size - 1)], a decreasing chain of sets each
// containing x.
struct CountableSpace {
  std::vector<std::string> names;
  std::vector<std::vector<std::set<std::size_t>>> bases;

  std::size_t size() const { return names.size(); }
  const std::set<std::size_t>& at(std::size_t x, unsigned long k) const;
  void validate() const;  // throws UniformityError
};

// Points 0..n-1 are the naturals, point n is the top; i_top(k) is the tail
// from k together with the top, and the naturals are isolated.
CountableSpace convergent_countable(std::size_t n);

// Union over x of i_x(f(x))^2; f has one entry per point.
Entourage countable_base(const CountableSpace& s, const std::vector<unsigned long>& f);

}  // namespace omega
