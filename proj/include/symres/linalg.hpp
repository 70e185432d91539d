#pragma once

#include <optional>
#include <vector>

#include "symres/field.hpp"

namespace symres::linalg {

using Matrix = std::vector<std::vector<Scalar>>;

int rank(Matrix m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws TNotInvertible on singular input
Scalar determinant(Matrix m, const FieldSpec& field);

// basis of the right kernel {x : m x = 0}
std::vector<std::vector<Scalar>> kernel(const Matrix& m, int ncols, const FieldSpec& field);

// one solution of m x = rhs, or nullopt
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs,
                                         const FieldSpec& field);

}  // namespace symres::linalg
