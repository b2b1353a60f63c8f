#include "omega/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace omega {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(1);
  return m;
}

Matrix Matrix::elementary(std::size_t n, std::size_t i, std::size_t j, const FieldElement& x) {
  Matrix m = identity(n);
  m(i, j) += x;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement s;
      for (std::size_t k = 0; k < n; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

namespace {

using Rows = std::vector<std::vector<FieldElement>>;

// Moves a row with a nonzero entry in column k to position k.  Returns
// false when there is none.
bool pivot(Rows& m, std::size_t k, int& swaps) {
  for (std::size_t r = k; r < m.size(); ++r) {
    if (m[r][k].is_zero()) continue;
    if (r != k) {
      std::swap(m[r], m[k]);
      ++swaps;
    }
    return true;
  }
  return false;
}

}  // namespace

FieldElement determinant(const Matrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return FieldElement(1);
  Rows m(n, std::vector<FieldElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  FieldElement prev(1);
  int swaps = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, swaps)) return FieldElement();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = FieldElement();
    }
    prev = m[k][k];
  }
  FieldElement det = m[n - 1][n - 1];
  return swaps % 2 ? -det : det;
}

Matrix mat_inv(const Matrix& a) {
  const std::size_t n = a.dim();
  Rows m(n, std::vector<FieldElement>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = FieldElement(1);
  }
  FieldElement prev(1);
  int swaps = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!pivot(m, k, swaps)) throw SingularMatrix();
    const FieldElement p = m[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const FieldElement f = m[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        m[i][j] = (p * m[i][j] - f * m[k][j]) / prev;
      }
      m[i][k] = FieldElement();
    }
    prev = p;
  }
  // The left block is now diagonal.
  Matrix inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement d = m[i][i].inverse();
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = m[i][n + j] * d;
  }
  return inv;
}

bool ball_member(const Matrix& a, const FieldElement& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("ball radius must be positive");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      FieldElement dev = i == j ? a(i, j) - FieldElement(1) : a(i, j);
      if (!(dev.abs() < eps)) return false;
    }
  return true;
}

FieldElement shrink_radius(const FieldElement& eps, std::size_t n) {
  if (eps.sign() <= 0) throw std::invalid_argument("ball radius must be positive");
  const FieldElement e = eps > FieldElement(1) ? FieldElement(1) : eps;
  return e / FieldElement(static_cast<long>(n + 2));
}

Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_field(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::string>> to_strings(const Matrix& m) {
  std::vector<std::vector<std::string>> rows(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i].push_back(m(i, j).to_string());
  return rows;
}

}  // namespace omega
