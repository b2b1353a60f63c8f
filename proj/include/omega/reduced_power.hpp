#pragma once

// A decidable fragment of the reduced power of (Q, min(|a - b|, 1)) over the
// cofinite filter: sequences indexed by i = 1, 2, ... that follow a rational
// function of the index beyond a finite prefix.  On this fragment the
// cofinite filter already settles every comparison, so no choice of
// ultrafilter is involved.

#include "omega/upoly.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace omega {

class MalformedTail : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EventualSeq {
 public:
  EventualSeq() = default;
  EventualSeq(const Rational& c) : tail_(c) {}  // NOLINT
  // prefix[k] is the value at index k + 1; the tail gives every later
  // value.  Throws MalformedTail when the tail has a pole at an index past
  // the prefix.  Trailing prefix entries that the tail reproduces are
  // dropped, so the representation of a sequence is unique.
  EventualSeq(std::vector<Rational> prefix, RationalFunction tail);

  const std::vector<Rational>& prefix() const { return prefix_; }
  const RationalFunction& tail() const { return tail_; }
  // 1-based.
  Rational at(std::size_t i) const;

  EventualSeq operator-() const;
  friend EventualSeq operator+(const EventualSeq& a, const EventualSeq& b);
  friend EventualSeq operator-(const EventualSeq& a, const EventualSeq& b);
  friend EventualSeq operator*(const EventualSeq& a, const EventualSeq& b);
  // Exact sequence equality (not the cofinite equivalence).
  friend bool operator==(const EventualSeq&, const EventualSeq&) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> prefix_;
  RationalFunction tail_;
};

// An element of the ordered reduced power: radii and metric values.
using StarValue = EventualSeq;

EventualSeq parse_eventual(const std::vector<std::string>& prefix, const std::string& tail);

// Order modulo the cofinite filter; equal iff the tails coincide.
std::strong_ordering compare_ev(const StarValue& x, const StarValue& y);
inline bool equivalent(const EventualSeq& x, const EventualSeq& y) { return compare_ev(x, y) == 0; }
const StarValue& ev_min(const StarValue& x, const StarValue& y);
const StarValue& ev_max(const StarValue& x, const StarValue& y);

// Coordinatewise min(|x_i - y_i|, 1).
StarValue star_metric(const EventualSeq& x, const EventualSeq& y);

// Least N >= 1 with x_i > 0 for every i >= N.  Requires x > 0 in the
// reduced power; throws std::invalid_argument otherwise.
std::size_t positive_from(const StarValue& x);

struct Ball {
  EventualSeq center;
  StarValue radius;
};

// Compares star_metric(h, center) with a radius: below it for membership
// certificates, above it for avoidance ones.  The strict inequality holds
// coordinatewise at every index from holds_from on.
struct Certificate {
  std::size_t instance = 0;  // 1-based
  StarValue distance;
  StarValue bound;
  std::size_t holds_from = 1;
};

class NestingError : public std::invalid_argument {
 public:
  NestingError(std::size_t instance, const std::string& what)
      : std::invalid_argument("instance " + std::to_string(instance) + ": " + what), instance_(instance) {}
  std::size_t instance() const { return instance_; }

 private:
  std::size_t instance_;
};

struct InterleaveResult {
  EventualSeq h;
  std::vector<Certificate> certificates;
};

// Instances g_1..g_N with radii eps_1..eps_N and N - 1 cuts
// t_1 < ... < t_{N-1}.  With U_0 = all indices and U_k = {i >= t_k},
// h_i = g_{k,i} on U_{k-1} \ U_k and h_i = g_{N,i} on U_{N-1}.  Checks
// eps_n > 0 and star_metric(g_{n+1}, g_n) + eps_{n+1} <= eps_n, throwing
// NestingError naming the first failing n, and certifies h in every ball.
InterleaveResult interleave(const std::vector<Ball>& instances, const std::vector<std::size_t>& cuts);

class InfeasibleAvoidance : public std::invalid_argument {
 public:
  InfeasibleAvoidance(std::size_t step, const std::string& what)
      : std::invalid_argument("forbidden ball " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct BaireResult {
  EventualSeq h;
  std::vector<Ball> chain;  // the nested balls, starting with the open set
  Certificate inside;       // h in the open ball
  std::vector<Certificate> avoids;  // distance to F_j exceeds its radius
};

// Open ball O and closed forbidden balls F_1..F_k.  Each step keeps the
// larger of the two pieces of the current interval left over by F_j and
// takes the middle half of it as the next ball.  Throws
// InfeasibleAvoidance when F_j covers the current ball.
BaireResult baire_witness(const Ball& open, const std::vector<Ball>& forbidden);

}  // namespace omega
