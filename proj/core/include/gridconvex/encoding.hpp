#pragma once

#include <optional>
#include <vector>

#include "gridconvex/grid.hpp"

namespace gridconvex {

// Grid-line labels of a convex polygon: one value in {0,1,2,3} per line
// (0: no vertex, 3: several vertices, 1/2: one vertex, on the left/bottom
// cap or not), plus the row of the topmost leftmost vertex.
struct Encoding {
    std::vector<int> horizontal_labels;  // bottom to top
    std::vector<int> vertical_labels;    // left to right
    std::size_t leftmost_row = 0;

    friend bool operator==(const Encoding&, const Encoding&) = default;
};

// Labels for a strictly convex polygon contained in the grid; throws when
// the polygon is invalid or not contained.
Encoding encode_polygon(const Grid2& grid, const PolySeq& polygon);

// Inverse walk: rebuilds the unique polygon with this encoding by walking
// the four chains from the leftmost vertex, or nullopt when no polygon
// matches (the decoder is partial).
std::optional<PolySeq> decode_polygon(const Grid2& grid, const Encoding& encoding);

// Weakly convex record: the same labels (bounding-box lines may hold many
// vertices but still read 3) plus the at most eight extreme vertices on
// the bounding-box boundary.
std::pair<Encoding, std::vector<Point2>> encode_weak(const Grid2& grid,
                                                     const PolySeq& polygon);

}  // namespace gridconvex
