#include "doctest.h"

#include "omega/checks/matrix_oracle.hpp"
#include "omega/matrix.hpp"

using namespace omega;

namespace {

FieldElement F(const char* s) { return parse_field(s); }

checks::FieldSampleShape small_shape() {
  checks::FieldSampleShape s;
  s.height = 2;
  s.degree = 2;
  s.max_terms = 2;
  s.coef_bound = 9;
  return s;
}

}  // namespace

TEST_CASE("inverse examples") {
  CHECK(mat_inv(Matrix::identity(3)) == Matrix::identity(3));
  Matrix u = Matrix::elementary(2, 0, 1, F("a0"));
  CHECK(mat_inv(u) == Matrix::elementary(2, 0, 1, F("-a0")));
  Matrix s(2);
  s(0, 0) = F("a0");
  s(0, 1) = F("1");
  s(1, 0) = F("a0^2");
  s(1, 1) = F("a0");
  CHECK(determinant(s).is_zero());
  CHECK_THROWS_AS(mat_inv(s), SingularMatrix);
  CHECK_THROWS_AS(mat_inv(Matrix(2)), SingularMatrix);
}

TEST_CASE("pivoting handles a zero leading entry") {
  Matrix p(2);
  p(0, 1) = F("1");
  p(1, 0) = F("a1");
  p(1, 1) = F("3");
  CHECK(mat_mul(p, mat_inv(p)) == Matrix::identity(2));
  CHECK(determinant(p) == F("-a1"));
}

TEST_CASE("random 3x3 samples agree with the cofactor oracle") {
  checks::Rng rng(5);
  int tested = 0;
  for (int i = 0; i < 40; ++i) {
    Matrix a = checks::random_matrix(rng, 3, small_shape());
    FieldElement det = checks::leibniz_determinant(a);
    CHECK(determinant(a) == det);
    if (det.is_zero()) {
      CHECK_THROWS_AS(mat_inv(a), SingularMatrix);
      continue;
    }
    ++tested;
    Matrix inv = mat_inv(a);
    CHECK(mat_mul(a, inv) == Matrix::identity(3));
    CHECK(mat_mul(inv, a) == Matrix::identity(3));
    CHECK(inv == checks::cofactor_inverse(a));
  }
  CHECK(tested > 20);
}

// A GL3 sample whose determinant once stalled in gcd: every entry shares a
// degree-9 denominator in three variables.
TEST_CASE("a shared-denominator 3x3 sample") {
  const char* den = "(a0^4*a1 + 1421/1080*a0^4*a1^4)";
  const std::vector<std::string> num = {
      "a0^4*a1 + 99412/165165*a1^2 + 1421/1080*a0^4*a1^4 + 857/15015*a2^3",
      "94772/165165*a1^2 + 817/15015*a2^3",
      "23084/33033*a1^2 + 199/3003*a2^3",
      "97208/165165*a1^2 - 97208/165165*a1^3 + 838/15015*a2^3 - 838/15015*a1*a2^3",
      "a0^4*a1 - 812/11011*a1^2 + 1421/1080*a0^4*a1^4 - 7/1001*a2^3",
      "-58928/165165*a1^2 + 58928/165165*a0*a1^2 - 508/15015*a2^3 + 508/15015*a0*a2^3",
      "51272/165165*a1^2 + 442/15015*a2^3",
      "-16936/33033*a1^2 + 16936/33033*a0*a1^2 - 146/3003*a2^3 + 146/3003*a0*a2^3",
      "a0^4*a1 + 13224/55055*a1^2 - 13224/55055*a0*a1^2 + 1421/1080*a0^4*a1^4 + 114/5005*a2^3 - 114/5005*a0*a2^3",
  };
  Matrix a(3);
  for (std::size_t k = 0; k < 9; ++k) a(k / 3, k % 3) = F(("(" + num[k] + ")/" + den).c_str());
  const FieldElement det = determinant(a);
  CHECK(det == checks::leibniz_determinant(a));
  CHECK(mat_mul(a, mat_inv(a)) == Matrix::identity(3));
}

TEST_CASE("ball membership examples") {
  CHECK(ball_member(Matrix::identity(3), F("a0^5")));
  Matrix u = Matrix::elementary(2, 0, 1, F("a0"));
  CHECK_FALSE(ball_member(u, F("a0^2")));
  CHECK(ball_member(u, F("2*a0")));
  CHECK_FALSE(ball_member(u, F("a0")));
  CHECK_THROWS_AS(ball_member(u, F("0")), std::invalid_argument);
  CHECK_THROWS_AS(ball_member(u, F("-a0")), std::invalid_argument);
}

TEST_CASE("shrink radius examples") {
  CHECK(shrink_radius(F("1/2"), 2) == F("1/8"));
  CHECK(shrink_radius(F("a0"), 2) == F("a0/4"));
  CHECK(shrink_radius(F("1"), 1) == F("1/3"));
  CHECK(shrink_radius(F("5"), 1) == F("1/3"));
  CHECK_THROWS_AS(shrink_radius(F("0"), 1), std::invalid_argument);
}

TEST_CASE("products of B_delta members stay in B_eps") {
  checks::Rng rng(11);
  for (const char* e : {"1", "1/2", "a0", "a1^2/a0", "1/3 - a0"}) {
    FieldElement eps = F(e);
    for (std::size_t n : {1u, 2u, 3u}) {
      FieldElement delta = shrink_radius(eps, n);
      for (int k = 0; k < 15; ++k) {
        Matrix a = checks::random_in_ball(rng, n, delta);
        Matrix b = checks::random_in_ball(rng, n, delta);
        REQUIRE(ball_member(a, delta));
        REQUIRE(ball_member(b, delta));
        CHECK(ball_member(mat_mul(a, b), eps));
      }
    }
  }
}

TEST_CASE("the balls are linearly ordered by inclusion") {
  checks::Rng rng(3);
  const FieldElement radii[] = {F("1"), F("1/7"), F("a0"), F("3*a0"), F("a0^2"), F("a1")};
  for (const auto& e : radii)
    for (const auto& f : radii) {
      const FieldElement& small = e < f ? e : f;
      const FieldElement& large = e < f ? f : e;
      for (int k = 0; k < 10; ++k) {
        Matrix a = checks::random_in_ball(rng, 2, small);
        CHECK(ball_member(a, large));
      }
    }
}
