#include "gridconvex/geometry.hpp"

#include <stdexcept>

namespace gridconvex {

int orientation(const Point2& p, const Point2& q, const Point2& r) {
    Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(cross);
}

int slope_compare(const Edge2& e1, const Edge2& e2) {
    Rational dx1 = e1.second.x - e1.first.x;
    Rational dy1 = e1.second.y - e1.first.y;
    Rational dx2 = e2.second.x - e2.first.x;
    Rational dy2 = e2.second.y - e2.first.y;
    if (dx1 == 0 || dx2 == 0)
        throw std::invalid_argument("slope_compare: vertical edge");
    // slope1 - slope2 has the sign of (dy1*dx2 - dy2*dx1) / (dx1*dx2).
    int s = sgn(dy1 * dx2 - dy2 * dx1);
    return s * sgn(dx1) * sgn(dx2);
}

}  // namespace gridconvex
