#pragma once

// Seeded generator for the property suites.  Draws use plain modular
// reduction so sequences are identical across standard libraries.

#include <cstdint>
#include <random>

namespace omega::checks {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  // Inclusive range.
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (eng_() >> 17) & 1; }

  // Independent stream for a sub-case, so case k does not depend on how
  // many draws earlier cases made.
  Rng fork(std::uint64_t salt) { return Rng(eng_() ^ (salt * 0x9E3779B97F4A7C15ull)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace omega::checks
