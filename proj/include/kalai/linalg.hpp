#pragma once

#include <optional>
#include <vector>

#include "kalai/vec.hpp"

namespace kalai {

// Dense exact linear algebra over the rationals; all routines use fraction
// exact Gaussian elimination. Matrices are row vectors.
using Mat = std::vector<Vec>;

int rank(Mat a);

// Affine rank of a point set (dimension of its affine hull).
int affine_rank(const std::vector<Vec>& pts);

Rat det(Mat a);

// Solves a * x = b; empty when the system is inconsistent. For
// underdetermined systems returns one particular solution.
std::optional<Vec> solve(Mat a, Vec b);

// Column indices of a maximal independent set of columns (pivot columns).
std::vector<int> pivot_columns(Mat a);

// Minimizer of |b - a*x|_2 via the normal equations; requires the columns of
// a to be linearly independent.
Vec least_squares(const Mat& a, const Vec& b);

}  // namespace kalai
