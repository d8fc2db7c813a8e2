#pragma once

#include <optional>
#include <vector>

#include "witgen/rational.hpp"

namespace witgen {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;
using ZMatrix = std::vector<std::vector<Integer>>;

// Exact determinant of a square integer matrix (Bareiss fraction-free
// elimination).
Integer int_det(ZMatrix a);

struct LinearSolution {
  QVector x;
  Rational det;  // determinant of the coefficient matrix
};

// Exact Gaussian elimination; empty when the matrix is singular.
std::optional<LinearSolution> solve_square(QMatrix a, QVector b);

}  // namespace witgen
