#pragma once

// Outcome of one property suite.  The case digest is an FNV-1a hash over a
// textual record of every case, so two runs with the same seed and scale
// can be compared byte for byte.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omega::checks {

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  unsigned scale = 1;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // repro lines, first kMaxListed only
  std::vector<std::pair<std::string, std::string>> facts;
  std::uint64_t digest = 0xcbf29ce484222325ull;
  double seconds = 0;  // wall time; not part of the deterministic output

  static constexpr std::size_t kMaxListed = 20;

  void record(std::string_view text);
  // Records a case and, when ok is false, a failure with its repro line.
  void check(bool ok, std::string_view text, std::string_view repro);
  void fail(std::string repro);
  void fact(std::string name, std::string value) { facts.emplace_back(std::move(name), std::move(value)); }
  bool passed() const { return failure_count == 0 && cases > 0; }
};

SuiteReport make_report(std::string suite, std::uint64_t seed, unsigned scale = 1);

std::string hex(std::uint64_t x);

}  // namespace omega::checks
