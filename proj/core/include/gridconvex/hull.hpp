#pragma once

#include <span>
#include <vector>

#include "gridconvex/geometry.hpp"

namespace gridconvex {

// Exact rational linear feasibility of { A x = b, x >= 0 }.
bool linear_feasible_eq(const std::vector<std::vector<Rational>>& A,
                        const std::vector<Rational>& b);

// True iff p lies in the convex hull of `points` (boundary included),
// decided exactly. Throws on dimension mismatch.
bool point_in_hull_d(const PointD& p, std::span<const PointD> points);

// True iff no point lies in the convex hull of the others. Requires at
// least d+1 points of common dimension d.
bool convex_position_d(std::span<const PointD> points);

}  // namespace gridconvex
