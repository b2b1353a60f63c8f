#pragma once

// Randomized, exhaustive-on-the-truncation checks of the containment lemmas
// behind the Roelcke-Dierolf base, on the free group of rank 2.

#include "omega/checks/report.hpp"
#include "omega/checks/rng.hpp"
#include "omega/group.hpp"

#include <string>
#include <vector>

namespace omega::checks {

struct LemmaShape {
  std::size_t configs = 200;   // random Phi configurations per lemma
  std::size_t max_len = 6;     // words checked have at most this length
  std::size_t max_factors = 4;
  std::size_t set_size = 3;    // Phi values are random sets of this size or less
};

Word random_word(Rng& rng, std::size_t rank, std::size_t min_len, std::size_t max_len);
SubsetSpec random_subset(Rng& rng, std::size_t rank, std::size_t max_size, std::size_t max_len);
PhiMap random_phi(Rng& rng, const LemmaShape& shape);
// Phi_1 >= Phi_2 >= ... pointwise.
std::vector<PhiMap> random_decreasing_phis(Rng& rng, std::size_t count, const LemmaShape& shape);

SuiteReport lemma_symmetry(std::uint64_t seed, const LemmaShape& shape);
SuiteReport lemma_squaring(std::uint64_t seed, const LemmaShape& shape);
SuiteReport lemma_conjugation(std::uint64_t seed, const LemmaShape& shape);
SuiteReport lemma_birkhoff_kakutani(std::uint64_t seed, const LemmaShape& shape);
SuiteReport lemma_intersection_filter(std::uint64_t seed, const LemmaShape& shape);

// Names accepted by run_lemma: symmetry, squaring, conjugation,
// birkhoff-kakutani, intersection-filter.
const std::vector<std::string>& lemma_names();
SuiteReport run_lemma(const std::string& name, std::uint64_t seed, const LemmaShape& shape);

}  // namespace omega::checks
