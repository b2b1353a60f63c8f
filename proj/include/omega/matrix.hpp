#pragma once

// Square matrices over the tower field and the ball base at the identity of
// GL_n: B_eps = { A : |A_ij - delta_ij| < eps for every entry }.

#include "omega/field.hpp"

#include <string>
#include <vector>

namespace omega {

class SingularMatrix : public FieldError {
 public:
  SingularMatrix() : FieldError("matrix is singular") {}
};

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  static Matrix identity(std::size_t n);
  // I + x * E_ij, with 0-based i, j.
  static Matrix elementary(std::size_t n, std::size_t i, std::size_t j, const FieldElement& x);

  std::size_t dim() const { return n_; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<FieldElement> a_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
// Fraction-free Gauss-Jordan on [A | I]; throws SingularMatrix.
Matrix mat_inv(const Matrix& a);
// Bareiss determinant.
FieldElement determinant(const Matrix& a);

// Throws std::invalid_argument unless eps > 0.
bool ball_member(const Matrix& a, const FieldElement& eps);

// delta = min(eps, 1) / (n + 2): products of two members of B_delta lie in
// B_eps, since the entrywise deviation is at most 2 delta + n delta^2.
FieldElement shrink_radius(const FieldElement& eps, std::size_t n);

// Rows of field-expression strings.
Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> to_strings(const Matrix& m);

}  // namespace omega
