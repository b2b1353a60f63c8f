#pragma once

// Reference linear algebra by cofactor expansion, sharing nothing with the
// elimination routines, plus matrix samplers.

#include "omega/checks/field_samples.hpp"
#include "omega/matrix.hpp"

namespace omega::checks {

FieldElement leibniz_determinant(const Matrix& a);
// Adjugate over determinant; throws SingularMatrix.
Matrix cofactor_inverse(const Matrix& a);

Matrix random_matrix(Rng& rng, std::size_t n, const FieldSampleShape& shape);
// Entries delta_ij + q * radius * s with |q| < 1 rational and s either 1 or
// a factor in (0, 1) of the tower, so the result lies in B_radius.
Matrix random_in_ball(Rng& rng, std::size_t n, const FieldElement& radius);

}  // namespace omega::checks
