#include "gridconvex/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridconvex {

namespace {

// Cyclic sign changes of a component sequence, zeros skipped. A simple
// convex traversal crosses each axis direction exactly twice.
int cyclic_sign_changes(const std::vector<int>& signs) {
    std::vector<int> nz;
    for (int s : signs)
        if (s != 0) nz.push_back(s);
    if (nz.size() < 2) return 0;
    int changes = 0;
    for (std::size_t i = 0; i < nz.size(); ++i)
        if (nz[i] != nz[(i + 1) % nz.size()]) ++changes;
    return changes;
}

Rational twice_signed_area(std::span<const Point2> v) {
    Rational area(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        area += a.x * b.y - b.x * a.y;
    }
    return area;
}

bool convex_cycle(std::span<const Point2> v, bool allow_straight) {
    const std::size_t k = v.size();
    std::vector<Point2> dirs(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % k];
        if (a == b) return false;
        dirs[i] = Point2{b.x - a.x, b.y - a.y};
    }
    int turn_sign = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Point2& d1 = dirs[i];
        const Point2& d2 = dirs[(i + 1) % k];
        int cr = sgn(d1.x * d2.y - d1.y * d2.x);
        if (cr == 0) {
            if (!allow_straight) return false;
            // A zero turn must continue forward, not reverse.
            if (sgn(d1.x * d2.x + d1.y * d2.y) <= 0) return false;
            continue;
        }
        if (turn_sign == 0) turn_sign = cr;
        else if (cr != turn_sign) return false;
    }
    if (turn_sign == 0) return false;  // all collinear
    // Total turning of one revolution: each coordinate direction flips
    // exactly twice around the cycle.
    std::vector<int> sx(k), sy(k);
    for (std::size_t i = 0; i < k; ++i) {
        sx[i] = sgn(dirs[i].x);
        sy[i] = sgn(dirs[i].y);
    }
    if (cyclic_sign_changes(sx) != 2 || cyclic_sign_changes(sy) != 2) return false;
    if (allow_straight && sgn(twice_signed_area(v)) == 0) return false;
    return true;
}

}  // namespace

bool is_convex_polygon(const PolySeq& seq) {
    if (seq.vertices.size() < 3)
        throw std::invalid_argument("is_convex_polygon: need at least 3 vertices");
    return convex_cycle(seq.vertices, /*allow_straight=*/false);
}

bool is_weakly_convex_polygon(const PolySeq& seq) {
    if (seq.vertices.size() < 3)
        throw std::invalid_argument("is_weakly_convex_polygon: need at least 3 vertices");
    return convex_cycle(seq.vertices, /*allow_straight=*/true);
}

std::vector<Point2> convex_hull(std::span<const Point2> points) {
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto build = [&](auto begin, auto end) {
        std::vector<Point2> h;
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= 2 && orientation(h[h.size() - 2], h.back(), *it) <= 0)
                h.pop_back();
            h.push_back(*it);
        }
        return h;
    };
    std::vector<Point2> lower = build(pts.begin(), pts.end());
    std::vector<Point2> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());  // counterclockwise
    return canonical_cycle(lower);
}

std::vector<Point2> hull_boundary_cycle(std::span<const Point2> points) {
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return {};
    bool all_collinear = true;
    for (std::size_t i = 2; i < pts.size() && all_collinear; ++i)
        if (orientation(pts[0], pts[1], pts[i]) != 0) all_collinear = false;
    if (all_collinear) return {};
    auto build = [&](auto begin, auto end) {
        std::vector<Point2> h;
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= 2 && orientation(h[h.size() - 2], h.back(), *it) < 0)
                h.pop_back();
            h.push_back(*it);
        }
        return h;
    };
    std::vector<Point2> lower = build(pts.begin(), pts.end());
    std::vector<Point2> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return canonical_cycle(lower);
}

std::vector<Point2> canonical_cycle(std::span<const Point2> cycle) {
    std::vector<Point2> v(cycle.begin(), cycle.end());
    if (v.size() < 3) return v;
    if (sgn(twice_signed_area(v)) > 0) std::reverse(v.begin(), v.end());
    // Start at the topmost of the leftmost vertices.
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        int cx = cmp(v[i].x, v[best].x);
        if (cx < 0 || (cx == 0 && v[i].y > v[best].y)) best = i;
    }
    std::rotate(v.begin(), v.begin() + best, v.end());
    return v;
}

bool convex_position_2d(std::span<const Point2> points) {
    if (points.size() < 3)
        throw std::invalid_argument("convex_position_2d: need at least 3 points");
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return false;
    return convex_hull(pts).size() == pts.size();
}

ClassSet polygon_classes(const PolySeq& seq) {
    ClassSet out;
    const auto& v = seq.vertices;
    if (v.size() < 2) return classify(v);
    std::vector<Point2> rot(v.begin(), v.end());
    for (std::size_t r = 0; r < v.size(); ++r) {
        out = out | classify(rot);
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    return out;
}

}  // namespace gridconvex
