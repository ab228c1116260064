#pragma once

#include <span>
#include <vector>

#include "gridconvex/chain_class.hpp"
#include "gridconvex/geometry.hpp"

namespace gridconvex {

enum class SeqKind { chain, cap, closed_polygon };
enum class Convexity { strict, weak };

// Ordered vertex sequence with class tags. For closed polygons the stored
// order is the cyclic boundary order (canonical outputs use clockwise order
// starting at the topmost leftmost vertex).
struct PolySeq {
    std::vector<Point2> vertices;
    SeqKind kind = SeqKind::chain;
    Convexity convexity = Convexity::strict;

    friend bool operator==(const PolySeq& a, const PolySeq& b) {
        return a.vertices == b.vertices && a.kind == b.kind && a.convexity == b.convexity;
    }
};

// True iff the vertices, in the given cyclic order, form a strictly convex
// polygon: uniform nonzero turn sign and total turning of one revolution.
// Throws for fewer than 3 vertices.
bool is_convex_polygon(const PolySeq& seq);

// Weak variant: zero turns (straight angles) allowed, but no reversals,
// consistent cyclic order, positive area.
bool is_weakly_convex_polygon(const PolySeq& seq);

// True iff every point is a vertex of the convex hull of the set (no point
// inside the hull or interior to a hull edge). Requires >= 3 points.
bool convex_position_2d(std::span<const Point2> points);

// Strict convex hull of a point set, clockwise, starting at the topmost
// leftmost vertex. Collinear non-extreme points are not hull vertices.
std::vector<Point2> convex_hull(std::span<const Point2> points);

// Boundary cycle of the hull including points interior to hull edges,
// clockwise from the topmost leftmost point. Empty result when the points
// span no area. This is the canonical vertex order of a weakly convex
// polygon whose vertex set is `points`.
std::vector<Point2> hull_boundary_cycle(std::span<const Point2> points);

// Canonical clockwise cycle starting at the topmost leftmost vertex.
std::vector<Point2> canonical_cycle(std::span<const Point2> cycle);

// Classes containing the polygon read as a cap/chain from some starting
// rotation of its cyclic order (empty if none).
ClassSet polygon_classes(const PolySeq& seq);

}  // namespace gridconvex
