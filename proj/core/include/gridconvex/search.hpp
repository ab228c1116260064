#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gridconvex/errors.hpp"
#include "gridconvex/grid.hpp"

namespace gridconvex {

struct SearchResult {
    std::size_t size = 0;
    PolySeq witness;
    ClassSet class_set;
    bool optimal = true;
};

// Indexed view of the grid's points with a cached orientation predicate.
// Point ids are xi * ny + yi; the sign table is built eagerly for grids of
// up to 80 points.
class GridPoints {
  public:
    explicit GridPoints(Grid2 grid);

    int count() const { return nx_ * ny_; }
    int xi(int id) const { return id / ny_; }
    int yi(int id) const { return id % ny_; }
    Point2 point(int id) const { return grid_.at(xi(id), yi(id)); }
    const Grid2& grid() const { return grid_; }
    int orient(int a, int b, int c) const;

  private:
    Grid2 grid_;
    int nx_, ny_;
    std::vector<std::int8_t> cache_;
};

// Edge of a chain as an ordered pair of point ids; a == b encodes the
// degenerate single-vertex edge.
struct CapEdge {
    int a = -1;
    int b = -1;
    bool degenerate() const { return a == b; }
    friend auto operator<=>(const CapEdge&, const CapEdge&) = default;
};

// Dynamic program for supported caps with x strictly increasing (cap_n),
// built from chain tables L (nw-chains ending in an edge) and R
// (ne-chains starting in an edge) and the pairwise table C(l, r): the
// maximum total size of an nw-chain ending in l and an ne-chain starting
// in r on disjoint y-coordinates. Values below 2 encode -infinity.
class CapSearch {
  public:
    explicit CapSearch(const Grid2& grid);

    // L(p1, p2): size of the largest nw-chain ending with vertices p1, p2,
    // or the single vertex p1 when p1 == p2. R is the ne-chain analogue.
    int chain_table_L(CapEdge l) const;
    int chain_table_R(CapEdge r) const;

    // C(l, r); kMinusInf for invalid configurations.
    int cap_table(CapEdge l, CapEdge r);

    // Maximum supported cap in cap_n with a deterministic witness.
    SearchResult max_cap();

    // True iff a supported cap in cap_n uses all n rows and columns.
    bool has_n_cap() const;

    // Reconstructs the chain pair realizing a finite C(l, r).
    std::pair<std::vector<int>, std::vector<int>> cap_table_witness(CapEdge l, CapEdge r);

    const GridPoints& points() const { return pts_; }

    static constexpr int kMinusInf = -1;

  private:
    int eval(CapEdge l, CapEdge r);
    bool valid_l(CapEdge l) const;
    bool valid_r(CapEdge r) const;

    GridPoints pts_;
    std::vector<int> chain_L_;   // by edge key
    std::vector<int> chain_R_;
    std::unordered_map<std::uint64_t, int> memo_;
};

// Exact maximum size of a supported convex chain over the four chain
// classes (Edelsbrunner-Guibas replaced by a pair DP over the grid points).
SearchResult max_supported_chain(const Grid2& grid);

// Exact maximum size of a supported convex cap over the four cap classes,
// via the C(l, r) recurrence on reflected grids.
SearchResult max_supported_cap(const Grid2& grid);

// O(n) decision: does some chain class contain a supported chain of size
// exactly n? Tests the two canonical diagonal pairings.
bool has_supported_n_chain(const Grid2& grid);

// Restricted C(l, r) decision for a supported cap of size exactly n in
// some cap class: level-by-level DP consuming y-coordinates bottom-up.
bool has_supported_n_cap(const Grid2& grid);

// Exact maximum number of grid points in convex position (coordinates may
// repeat), polynomial DP over anchors and angularly sorted candidates.
SearchResult max_contained_convex_polygon(const Grid2& grid);

// 1/2-approximation of the maximum supported convex polygon: takes the
// contained optimum, 2-colors the coordinate-conflict graph and keeps the
// larger class. With a cap-class filter, approximates the maximum
// supported cap of that class the same way. Result flagged approximate.
SearchResult approx_max_supported_polygon(const Grid2& grid,
                                          std::optional<ChainClass> cap_filter = std::nullopt);

// Brute-force ground truth: enumerates k-subsets of X and Y and bijections
// between them, k from n downward. Empty filter means convex position
// (polygon); otherwise membership in any class of the filter. Grids beyond
// 6 coordinates per axis are refused unless allow_large.
SearchResult oracle_max_supported(const Grid2& grid, ClassSet filter = ClassSet(),
                                  bool allow_large = false);

}  // namespace gridconvex
