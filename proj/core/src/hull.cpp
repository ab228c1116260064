#include "gridconvex/hull.hpp"

#include <stdexcept>

namespace gridconvex {

// Phase-1 simplex with Bland's rule; exact pivots, no cycling.
bool linear_feasible_eq(const std::vector<std::vector<Rational>>& A,
                        const std::vector<Rational>& b) {
    const std::size_t rows = A.size();
    const std::size_t n = rows ? A[0].size() : 0;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(n + rows + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        bool flip = b[r] < 0;
        for (std::size_t j = 0; j < n; ++j) t[r][j] = flip ? Rational(-A[r][j]) : A[r][j];
        t[r][n + r] = 1;
        t[r][n + rows] = flip ? Rational(-b[r]) : b[r];
    }
    const std::size_t rhs = n + rows;
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = n + r;

    // Reduced costs for maximizing -(sum of artificials).
    std::vector<Rational> red(n + rows, Rational(0));
    Rational z(0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < n; ++j) red[j] += t[r][j];
        z -= t[r][rhs];
    }

    while (true) {
        std::size_t enter = n + rows;
        for (std::size_t j = 0; j < n + rows; ++j)
            if (red[j] > 0) { enter = j; break; }
        if (enter == n + rows) break;

        std::size_t leave = rows;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            if (leave == rows) { leave = r; continue; }
            Rational lhs = t[r][rhs] * t[leave][enter];
            Rational rhsv = t[leave][rhs] * t[r][enter];
            int c = cmp(lhs, rhsv);
            if (c < 0 || (c == 0 && basis[r] < basis[leave])) leave = r;
        }
        if (leave == rows) break;  // unbounded cannot happen in phase 1

        Rational piv = t[leave][enter];
        for (std::size_t j = 0; j <= rhs; ++j) t[leave][j] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rational f = t[r][enter];
            for (std::size_t j = 0; j <= rhs; ++j) t[r][j] -= f * t[leave][j];
        }
        Rational f = red[enter];
        for (std::size_t j = 0; j < n + rows; ++j) red[j] -= f * t[leave][j];
        z += f * t[leave][rhs];
        basis[leave] = enter;
    }
    return z == 0;
}

bool point_in_hull_d(const PointD& p, std::span<const PointD> points) {
    const std::size_t d = p.dim();
    if (d == 0 || points.empty()) return false;
    for (const PointD& q : points)
        if (q.dim() != d) throw std::invalid_argument("point_in_hull_d: dimension mismatch");
    const std::size_t m = points.size();
    std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(m));
    std::vector<Rational> b(d + 1);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < m; ++i) A[k][i] = points[i].coords[k];
        b[k] = p.coords[k];
    }
    for (std::size_t i = 0; i < m; ++i) A[d][i] = 1;
    b[d] = 1;
    return linear_feasible_eq(A, b);
}

bool convex_position_d(std::span<const PointD> points) {
    if (points.empty()) return false;
    const std::size_t d = points[0].dim();
    if (points.size() < d + 1)
        throw std::invalid_argument("convex_position_d: need at least d+1 points");
    std::vector<PointD> rest(points.size() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) rest[k++] = points[j];
        if (point_in_hull_d(points[i], rest)) return false;
    }
    return true;
}

}  // namespace gridconvex
