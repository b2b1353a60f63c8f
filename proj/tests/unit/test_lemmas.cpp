#include "doctest.h"

#include "omega/checks/group_lemmas.hpp"

using namespace omega;
using namespace omega::checks;

namespace {

LemmaShape small() {
  LemmaShape s;
  s.configs = 25;
  return s;
}

}  // namespace

TEST_CASE("lemma suites pass on a small sample") {
  for (const auto& name : lemma_names()) {
    SuiteReport r = run_lemma(name, 7, small());
    INFO(name);
    CHECK(r.cases == 25);
    CHECK(r.passed());
    for (const auto& f : r.failures) MESSAGE(f);
  }
  CHECK_THROWS_AS(run_lemma("nope", 1, small()), std::invalid_argument);
}

TEST_CASE("lemma suites are deterministic in the seed") {
  for (const auto& name : lemma_names()) {
    SuiteReport a = run_lemma(name, 11, small());
    SuiteReport b = run_lemma(name, 11, small());
    CHECK(a.digest == b.digest);
    CHECK(a.facts == b.facts);
  }
}

TEST_CASE("random decreasing Phi maps are pointwise decreasing") {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    auto phis = random_decreasing_phis(rng, 4, LemmaShape{});
    for (std::size_t n = 0; n + 1 < phis.size(); ++n) CHECK(pointwise_leq(phis[n + 1], phis[n]));
  }
}
