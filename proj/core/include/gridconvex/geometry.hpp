#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "gridconvex/rational.hpp"

namespace gridconvex {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2& a, const Point2& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    // Lexicographic by (x, y); used for canonical orders and tie-breaking.
    friend bool operator<(const Point2& a, const Point2& b) {
        int cx = cmp(a.x, b.x);
        if (cx != 0) return cx < 0;
        return a.y < b.y;
    }
};

struct PointD {
    std::vector<Rational> coords;

    std::size_t dim() const { return coords.size(); }
    friend bool operator==(const PointD& a, const PointD& b) { return a.coords == b.coords; }
    friend bool operator<(const PointD& a, const PointD& b) { return a.coords < b.coords; }
};

using Edge2 = std::pair<Point2, Point2>;

// Sign of the cross product (q-p) x (r-p): +1 left turn, 0 collinear,
// -1 right turn. Exact.
int orientation(const Point2& p, const Point2& q, const Point2& r);

// Compares slope(e1) against slope(e2) by cross-multiplication.
// Throws std::invalid_argument when an edge is vertical.
int slope_compare(const Edge2& e1, const Edge2& e2);

}  // namespace gridconvex
