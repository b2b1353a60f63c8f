#include "omega/reduced_power.hpp"

#include <algorithm>

namespace omega {

namespace {

constexpr unsigned long kMaxScan = 10'000'000;

std::size_t to_index(const Integer& z) {
  if (z > kMaxScan) throw std::invalid_argument("index bound " + z.get_str() + " is beyond the scan limit");
  return z <= 0 ? 0 : static_cast<std::size_t>(z.get_ui());
}

}  // namespace

EventualSeq::EventualSeq(std::vector<Rational> prefix, RationalFunction tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  for (auto& q : prefix_) q.canonicalize();
  const std::size_t from = prefix_.size() + 1;
  const Integer bound = tail_.den().root_bound();
  if (bound > from) {
    if (bound - from > kMaxScan) throw MalformedTail("tail denominator too large to check for poles");
    const std::size_t end = static_cast<std::size_t>(bound.get_ui());
    for (std::size_t i = from; i < end; ++i)
      if (tail_.den()(Rational(static_cast<unsigned long>(i))) == 0)
        throw MalformedTail("tail " + tail_.to_string() + " has a pole at index " + std::to_string(i));
  }
  while (!prefix_.empty()) {
    const Rational i(static_cast<unsigned long>(prefix_.size()));
    if (tail_.den()(i) == 0 || tail_(i) != prefix_.back()) break;
    prefix_.pop_back();
  }
}

Rational EventualSeq::at(std::size_t i) const {
  if (i == 0) throw std::out_of_range("sequence indices start at 1");
  if (i <= prefix_.size()) return prefix_[i - 1];
  return tail_(Rational(static_cast<unsigned long>(i)));
}

namespace {

template <class Op>
EventualSeq combine(const EventualSeq& a, const EventualSeq& b, Op op) {
  const std::size_t len = std::max(a.prefix().size(), b.prefix().size());
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (std::size_t i = 1; i <= len; ++i) prefix.push_back(op(a.at(i), b.at(i)));
  return EventualSeq(std::move(prefix), op(a.tail(), b.tail()));
}

}  // namespace

EventualSeq EventualSeq::operator-() const {
  EventualSeq r = *this;
  for (auto& q : r.prefix_) q = -q;
  r.tail_ = -r.tail_;
  return r;
}

EventualSeq operator+(const EventualSeq& a, const EventualSeq& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

EventualSeq operator-(const EventualSeq& a, const EventualSeq& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

EventualSeq operator*(const EventualSeq& a, const EventualSeq& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

std::string EventualSeq::to_string() const {
  std::string out = "[";
  for (const auto& q : prefix_) out += omega::to_string(q) + ", ";
  return out + "then " + tail_.to_string() + "]";
}

EventualSeq parse_eventual(const std::vector<std::string>& prefix, const std::string& tail) {
  std::vector<Rational> values;
  for (const auto& s : prefix) values.push_back(parse_rational(s));
  return EventualSeq(std::move(values), parse_rational_function(tail));
}

std::strong_ordering compare_ev(const StarValue& x, const StarValue& y) {
  const int s = (x.tail() - y.tail()).eventual_sign();
  return s == 0 ? std::strong_ordering::equal : s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

const StarValue& ev_min(const StarValue& x, const StarValue& y) { return compare_ev(y, x) < 0 ? y : x; }
const StarValue& ev_max(const StarValue& x, const StarValue& y) { return compare_ev(y, x) > 0 ? y : x; }

StarValue star_metric(const EventualSeq& x, const EventualSeq& y) {
  const RationalFunction f = x.tail() - y.tail();
  RationalFunction tail;
  Integer settled = 0;
  if (!f.is_zero()) {
    const RationalFunction g = f.eventual_sign() > 0 ? f : -f;
    const RationalFunction over = g - RationalFunction(1);
    tail = over.eventual_sign() < 0 ? g : RationalFunction(1);
    settled = std::max(f.settled_from(), over.settled_from());
  }
  // Past `settled` the tail formula gives min(|x_i - y_i|, 1) exactly.
  const std::size_t len = std::max({x.prefix().size(), y.prefix().size(), to_index(settled)});
  std::vector<Rational> prefix;
  prefix.reserve(len);
  for (std::size_t i = 1; i <= len; ++i) prefix.push_back(std::min(omega::abs(x.at(i) - y.at(i)), Rational(1)));
  return EventualSeq(std::move(prefix), tail);
}

std::size_t positive_from(const StarValue& x) {
  if (x.tail().eventual_sign() <= 0) throw std::invalid_argument("sequence is not eventually positive");
  // The tail is positive from `start` on.
  std::size_t start = std::max(x.prefix().size() + 1, to_index(x.tail().settled_from()));
  start = std::max<std::size_t>(start, 1);
  while (start > 1 && x.at(start - 1) > 0) --start;
  return start;
}

InterleaveResult interleave(const std::vector<Ball>& instances, const std::vector<std::size_t>& cuts) {
  const std::size_t count = instances.size();
  if (count == 0) throw std::invalid_argument("interleave needs at least one instance");
  if (cuts.size() != count - 1)
    throw std::invalid_argument("expected " + std::to_string(count - 1) + " cut indices, got " + std::to_string(cuts.size()));
  for (std::size_t k = 0; k < cuts.size(); ++k)
    if (cuts[k] < 1 || (k > 0 && cuts[k] <= cuts[k - 1]))
      throw std::invalid_argument("cut indices must be positive and strictly increasing");

  for (std::size_t n = 0; n < count; ++n)
    if (compare_ev(instances[n].radius, Rational(0)) <= 0) throw NestingError(n + 1, "radius is not positive");
  for (std::size_t n = 0; n + 1 < count; ++n) {
    const StarValue lhs = star_metric(instances[n + 1].center, instances[n].center) + instances[n + 1].radius;
    if (compare_ev(lhs, instances[n].radius) > 0)
      throw NestingError(n + 1, "ball " + std::to_string(n + 2) + " is not nested in ball " + std::to_string(n + 1));
  }

  const EventualSeq& last = instances.back().center;
  const std::size_t last_cut = cuts.empty() ? 1 : cuts.back();
  const std::size_t len = std::max(last_cut - 1, last.prefix().size());
  std::vector<Rational> prefix;
  prefix.reserve(len);
  std::size_t k = 0;  // instance in use, 0-based
  for (std::size_t i = 1; i <= len; ++i) {
    while (k < cuts.size() && i >= cuts[k]) ++k;
    prefix.push_back(instances[k].center.at(i));
  }

  InterleaveResult out{EventualSeq(std::move(prefix), last.tail()), {}};
  for (std::size_t n = 0; n < count; ++n) {
    Certificate c;
    c.instance = n + 1;
    c.distance = star_metric(out.h, instances[n].center);
    c.bound = instances[n].radius;
    if (compare_ev(c.distance, c.bound) >= 0) throw std::logic_error("interleaved point escapes ball " + std::to_string(n + 1));
    c.holds_from = positive_from(c.bound - c.distance);
    out.certificates.push_back(std::move(c));
  }
  return out;
}

BaireResult baire_witness(const Ball& open, const std::vector<Ball>& forbidden) {
  const StarValue one(Rational(1));
  if (compare_ev(open.radius, Rational(0)) <= 0) throw std::invalid_argument("open ball radius must be positive");
  // Below 1 the capped metric is |x - y|, so balls are intervals.
  BaireResult out;
  out.chain.push_back({open.center, ev_min(open.radius, one)});
  const StarValue quarter(Rational(1, 4));
  const StarValue half(Rational(1, 2));
  for (std::size_t j = 0; j < forbidden.size(); ++j) {
    const Ball& f = forbidden[j];
    if (compare_ev(f.radius, Rational(0)) < 0) throw std::invalid_argument("forbidden ball radius is negative");
    if (compare_ev(f.radius, one) >= 0) throw InfeasibleAvoidance(j + 1, "a closed ball of radius 1 is the whole space");
    const Ball& cur = out.chain.back();
    const StarValue lo = cur.center - cur.radius;
    const StarValue hi = cur.center + cur.radius;
    const StarValue flo = f.center - f.radius;
    const StarValue fhi = f.center + f.radius;
    const bool left_ok = compare_ev(flo, lo) > 0;
    const bool right_ok = compare_ev(fhi, hi) < 0;
    if (!left_ok && !right_ok) throw InfeasibleAvoidance(j + 1, "it covers the current ball");
    const StarValue left_hi = ev_min(hi, flo);
    const StarValue right_lo = ev_max(lo, fhi);
    bool take_right = right_ok;
    if (left_ok && right_ok) take_right = compare_ev(hi - right_lo, left_hi - lo) >= 0;
    const StarValue a = take_right ? right_lo : lo;
    const StarValue b = take_right ? hi : left_hi;
    out.chain.push_back({(a + b) * half, (b - a) * quarter});
  }

  std::vector<std::size_t> cuts;
  for (std::size_t k = 1; k < out.chain.size(); ++k) cuts.push_back(k + 1);
  InterleaveResult il = interleave(out.chain, cuts);
  out.h = il.h;
  out.inside = il.certificates.front();
  out.inside.distance = star_metric(out.h, open.center);
  out.inside.bound = open.radius;
  if (compare_ev(out.inside.distance, out.inside.bound) >= 0) throw std::logic_error("witness escapes the open ball");
  out.inside.holds_from = positive_from(out.inside.bound - out.inside.distance);
  for (std::size_t j = 0; j < forbidden.size(); ++j) {
    Certificate c;
    c.instance = j + 1;
    c.distance = star_metric(out.h, forbidden[j].center);
    c.bound = forbidden[j].radius;
    if (compare_ev(c.distance, c.bound) <= 0) throw std::logic_error("witness meets forbidden ball " + std::to_string(j + 1));
    c.holds_from = positive_from(c.distance - c.bound);
    out.avoids.push_back(std::move(c));
  }
  return out;
}

}  // namespace omega
