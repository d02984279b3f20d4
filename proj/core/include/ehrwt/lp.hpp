#pragma once

#include <optional>

#include "ehrwt/linalg.hpp"

namespace ehrwt {

// Exact feasibility of { y : A y = b, y >= 0 } via a phase-one simplex with
// Bland's rule. Returns a feasible y, or nullopt when the system is empty.
// Every row of A must have the same length.
std::optional<RatVector> find_nonnegative_solution(const RatMatrix& A,
                                                   const RatVector& b);

}  // namespace ehrwt
