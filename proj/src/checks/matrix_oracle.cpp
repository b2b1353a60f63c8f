#include "omega/checks/matrix_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace omega::checks {

namespace {

Matrix minor_of(const Matrix& a, std::size_t row, std::size_t col) {
  const std::size_t n = a.dim();
  Matrix m(n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

}  // namespace

FieldElement leibniz_determinant(const Matrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    FieldElement term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= a(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Matrix cofactor_inverse(const Matrix& a) {
  const std::size_t n = a.dim();
  const FieldElement det = leibniz_determinant(a);
  if (det.is_zero()) throw SingularMatrix();
  if (n == 1) {
    Matrix m(1);
    m(0, 0) = det.inverse();
    return m;
  }
  Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement c = leibniz_determinant(minor_of(a, j, i)) / det;
      inv(i, j) = (i + j) % 2 ? -c : c;
    }
  return inv;
}

Matrix random_matrix(Rng& rng, std::size_t n, const FieldSampleShape& shape) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.below(3) != 0) m(i, j) = random_element(rng, shape);
  return m;
}

Matrix random_in_ball(Rng& rng, std::size_t n, const FieldElement& radius) {
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long bound = 1000;
      FieldElement q(Rational(rng.range(-bound, bound), bound + 1));
      if (rng.coin()) q *= FieldElement(1) - FieldElement::variable(rng.below(2));
      m(i, j) += q * radius;
    }
  return m;
}

}  // namespace omega::checks
