#pragma once

#include <cstdint>
#include <vector>

#include "gridconvex/errors.hpp"
#include "gridconvex/grid.hpp"
#include "gridconvex/md_set.hpp"

namespace gridconvex {

// 2^k x 2^k grid with X = {0..n-1} and Y the base-(2n) expansions of
// 0..n-1; supports no convex chain longer than k+1. Both axes are
// symmetric about their midpoint.
Grid2 upper_bound_grid(unsigned k);

// Slope interval (2*(2n)^(j-1), 2*(2n)^j) that every increasing pair with
// top differing bit j falls into.
std::pair<Rational, Rational> upper_bound_slope_interval(unsigned k, unsigned j);
// Highest bit position in which the base-(2n) digits of two Y values differ.
unsigned upper_bound_top_bit(const Grid2& grid, const Rational& y1, const Rational& y2);

// n points (a_i, b_j), i + j = n + 1 after normalizing both sets to
// decreasing differences by reflection: pairwise distinct coordinates, in
// convex position on A x B.
std::vector<Point2> md_antidiagonal(const MDSet& A, const MDSet& B);

// The d-dimensional simplex slice { p_v : sum v_i = n + d - 1 } plus the
// corner p_(1,...,1), in convex position on the product of the given MD
// sets (each normalized to decreasing differences per axis).
std::vector<PointD> md_product_convex(const std::vector<MDSet>& sets);

// Number of compositions of n + d - 1 into d parts from [1, n]; the size
// of the slice above without the corner.
std::size_t md_product_slice_size(std::size_t d, std::size_t n);

struct S3Grid {
    GridD grid;             // 2^j x 2^j x 2^i product
    unsigned attempts = 0;  // jitter retries consumed
};

// Recursive 3D grid: layer 0 is upper_bound_grid(j) at height 0, and each
// level stacks two copies separated by a huge integer plus seeded rational
// jitter. The result is certified generic: every line through >= 3 points
// is axis-parallel and every plane through >= 4 points is parallel to a
// coordinate axis. Throws ConstructionError when no jitter in the budget
// certifies.
S3Grid s3_grid(unsigned i, unsigned j, std::uint64_t seed);

// Exhaustive genericity check used by s3_grid (exposed for tests).
bool s3_generic(const GridD& grid);

struct CountingGrid {
    Grid2 grid;     // (2m+4) x (2m+4)
    std::size_t m = 0;
    Rational eps;   // offset of the duplicated medians

    std::size_t axis_size() const { return 2 * m + 4; }
    // Per-axis index layout (same for x and y, ascending):
    //   0: boundary, 1..m: lower choosable, m+1 and m+2: median pair,
    //   m+3..2m+2: upper choosable, 2m+3: boundary.
    std::size_t lower_boundary() const { return 0; }
    std::size_t median_lo() const { return m + 1; }
    std::size_t median_hi() const { return m + 2; }
    std::size_t upper_boundary() const { return 2 * m + 3; }
};

// The counting lower-bound grid: lower Y half n^1..n^(m+2) with n = 2m+3,
// upper half mirrored, both medians duplicated at offset eps = n^-(m+3);
// X analogous with unit spacing. The construction certifies the four turn
// properties (monotone triples in one half, at most one duplicated median
// per axis, turn towards that half's outside) and throws ConstructionError
// if certification fails.
CountingGrid counting_grid(std::size_t m);

// Supported convex polygon of size >= 5 on any 6x6 grid: strips the
// extreme coordinates, picks a corner-to-corner 3-chain of the inner 4x4
// grid, and attaches two outer vertices on the unused inner coordinates.
PolySeq pentagon_from_6x6(const Grid2& grid);

}  // namespace gridconvex
