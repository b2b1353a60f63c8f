#include "omega/checks/report.hpp"

#include <cstdio>

namespace omega::checks {

void SuiteReport::record(std::string_view text) {
  ++cases;
  for (unsigned char c : text) {
    digest ^= c;
    digest *= 0x100000001b3ull;
  }
  digest ^= 0xff;
  digest *= 0x100000001b3ull;
}

void SuiteReport::check(bool ok, std::string_view text, std::string_view repro) {
  record(text);
  if (!ok) fail(std::string(repro));
}

void SuiteReport::fail(std::string repro) {
  ++failure_count;
  if (failures.size() < kMaxListed) failures.push_back(std::move(repro));
}

SuiteReport make_report(std::string suite, std::uint64_t seed, unsigned scale) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.seed = seed;
  r.scale = scale;
  return r;
}

std::string hex(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace omega::checks
