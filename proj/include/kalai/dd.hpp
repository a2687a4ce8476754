#pragma once

#include "kalai/linalg.hpp"

namespace kalai {

// Double description method: extreme rays of the pointed polyhedral cone
// {y : a y <= 0}, with rays reported as primitive integer vectors (content 1,
// positive scaling). Rows are deduplicated and inserted in lexicographic
// order; adjacency of rays is decided by an exact rank test.
//
// Throws DegenerateInput when the cone is not pointed (rank a < dim), which
// callers translate into their own error.
std::vector<Vec> extreme_rays(Mat a);

// Scales v so its entries are coprime integers, keeping orientation.
// Zero stays zero.
Vec primitive(const Vec& v);

}  // namespace kalai
