#pragma once

#include <span>
#include <vector>

#include "gridconvex/polygon.hpp"

namespace gridconvex {

// Cartesian-product grid X x Y. Coordinate sets are strictly increasing and
// duplicate-free; the grid's points are all pairs (x, y).
struct Grid2 {
    std::vector<Rational> x;
    std::vector<Rational> y;

    Grid2() = default;
    // Sorts the inputs; throws on duplicates or empty axes.
    Grid2(std::vector<Rational> xs, std::vector<Rational> ys);

    std::size_t nx() const { return x.size(); }
    std::size_t ny() const { return y.size(); }
    Point2 at(std::size_t i, std::size_t j) const { return Point2{x[i], y[j]}; }
    bool square() const { return x.size() == y.size(); }

    Grid2 reflected_x() const;  // x -> -x
    Grid2 reflected_y() const;  // y -> -y
};

// d-dimensional Cartesian product, one strictly increasing axis per
// dimension, d >= 2.
struct GridD {
    std::vector<std::vector<Rational>> axes;

    GridD() = default;
    explicit GridD(std::vector<std::vector<Rational>> ax);

    std::size_t dim() const { return axes.size(); }
    std::size_t point_count() const;
    std::vector<PointD> all_points() const;
};

// True iff every vertex is a grid point and no two vertices share an x- or
// y-coordinate.
bool is_supported(const Grid2& grid, const PolySeq& seq);

// True iff every vertex is a grid point (coordinates may repeat).
bool is_contained(const Grid2& grid, const PolySeq& seq);

}  // namespace gridconvex
