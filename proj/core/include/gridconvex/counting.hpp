#pragma once

#include <vector>

#include "gridconvex/errors.hpp"
#include "gridconvex/grid.hpp"

namespace gridconvex {

// Which polygons count: contained (no restriction), supported (each grid
// line at most once), all_lines (each line at least once), all_lines_once
// (each line exactly once).
enum class Regime { contained, supported, all_lines, all_lines_once };

// Every convex polygon (>= 3 vertices) of the regime exactly once, in
// canonical order: clockwise vertex lists starting at the topmost leftmost
// vertex, sorted lexicographically. Desk-scale guards: 4 coordinates per
// axis for the point-subset regimes (contained, all_lines), 7 for the
// bijection regimes (supported, all_lines_once).
std::vector<PolySeq> enumerate_polygons(const Grid2& grid, Regime regime,
                                        Convexity convexity, bool allow_large = false);

struct CountReport {
    std::size_t F = 0;      // contained, strict
    std::size_t G = 0;      // all lines used, strict
    std::size_t F_bar = 0;  // supported, strict
    std::size_t G_bar = 0;  // all lines used exactly once, strict
    std::size_t W = 0;      // contained, weakly convex
};

// Exact per-grid counts for the five regimes.
CountReport count_report(const Grid2& grid, bool allow_large = false);

}  // namespace gridconvex
