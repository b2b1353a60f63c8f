#pragma once

// Named property suites.  Every suite draws all randomness from the seed;
// scale multiplies the sample counts (1 is the acceptance size).

#include "omega/checks/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace omega::checks {

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
};

const std::vector<SuiteInfo>& suite_list();
std::string suite_names();  // comma separated

// Throws UnknownSuite, listing the known names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, unsigned scale = 1);

SuiteReport suite_field(std::uint64_t seed, unsigned scale);
SuiteReport suite_matrix(std::uint64_t seed, unsigned scale);
SuiteReport suite_reduced_power(std::uint64_t seed, unsigned scale);
SuiteReport suite_rd_lemmas(std::uint64_t seed, unsigned scale);
SuiteReport suite_abelian_sin(std::uint64_t seed, unsigned scale);
SuiteReport suite_order(std::uint64_t seed, unsigned scale);
SuiteReport suite_uniformity(std::uint64_t seed, unsigned scale);

// JSON array of reports sorted by suite name.  Wall time is included only
// when timing is set, so the default output is reproducible byte for byte.
std::string reports_json(std::vector<SuiteReport> reports, bool timing = false);
// One table row per suite, then the failures with reproduction commands.
std::string reports_markdown(std::vector<SuiteReport> reports, bool timing = false);

}  // namespace omega::checks
