#pragma once

#include <optional>

#include "hkz/ratlin.hpp"

namespace hkz {

/// Exact phase-one simplex: a basic solution of A x = b, x >= 0, or nullopt
/// when the system is infeasible. Uses Bland's rule (lowest-index entering
/// column, lowest-index leaving basic variable on ratio ties), so it always
/// terminates.
std::optional<RatVector> find_nonnegative_solution(const RatMatrix& a, std::span<const Rational> b);

}  // namespace hkz
