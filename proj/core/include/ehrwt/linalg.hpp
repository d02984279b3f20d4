#pragma once

#include <span>
#include <vector>

#include "ehrwt/rational.hpp"

namespace ehrwt {

using RatMatrix = std::vector<RatVector>;

// Rank over Q.
std::size_t rank(RatMatrix rows);

// Dimension of the affine hull of the points; 0 for a single point.
// Precondition: points non-empty.
std::size_t affine_dimension(std::span<const RatVector> points);

// Scales a rational row (with its right-hand side) to a primitive integer
// row with the same sign. The zero row is returned as-is.
void make_primitive(RatVector& row, Rational& rhs);

}  // namespace ehrwt
