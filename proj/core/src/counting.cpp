#include "gridconvex/counting.hpp"

#include <algorithm>

namespace gridconvex {

namespace {

bool subset_regimes(Regime r) { return r == Regime::contained || r == Regime::all_lines; }

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Vertex cycle of the polygon with the given vertex set, or empty when the
// set is not in (weakly) convex position.
std::vector<Point2> polygon_cycle(const std::vector<Point2>& pts, Convexity convexity) {
    if (convexity == Convexity::strict) {
        std::vector<Point2> hull = convex_hull(pts);
        if (hull.size() != pts.size()) return {};
        return hull;
    }
    std::vector<Point2> cycle = hull_boundary_cycle(pts);
    if (cycle.size() != pts.size()) return {};
    return cycle;
}

bool covers_all_lines(const Grid2& grid, const std::vector<Point2>& verts) {
    std::vector<bool> xs(grid.nx(), false), ys(grid.ny(), false);
    for (const Point2& p : verts) {
        xs[std::lower_bound(grid.x.begin(), grid.x.end(), p.x) - grid.x.begin()] = true;
        ys[std::lower_bound(grid.y.begin(), grid.y.end(), p.y) - grid.y.begin()] = true;
    }
    return std::all_of(xs.begin(), xs.end(), [](bool b) { return b; }) &&
           std::all_of(ys.begin(), ys.end(), [](bool b) { return b; });
}

void enumerate_subset_regime(const Grid2& grid, Regime regime, Convexity convexity,
                             std::vector<PolySeq>& out) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < grid.nx(); ++i)
        for (std::size_t j = 0; j < grid.ny(); ++j) pts.push_back(grid.at(i, j));
    const std::size_t n = pts.size();
    std::vector<Point2> subset;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) < 3) continue;
        subset.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) subset.push_back(pts[i]);
        std::vector<Point2> cycle = polygon_cycle(subset, convexity);
        if (cycle.empty()) continue;
        if (regime == Regime::all_lines && !covers_all_lines(grid, cycle)) continue;
        PolySeq p;
        p.kind = SeqKind::closed_polygon;
        p.convexity = convexity;
        p.vertices = std::move(cycle);
        out.push_back(std::move(p));
    }
}

void enumerate_bijection_regime(const Grid2& grid, Regime regime, Convexity convexity,
                                std::vector<PolySeq>& out) {
    const std::size_t nx = grid.nx(), ny = grid.ny();
    const std::size_t kmax = std::min(nx, ny);
    std::size_t kmin = 3;
    if (regime == Regime::all_lines_once) {
        if (nx != ny) return;  // impossible otherwise
        kmin = kmax;
    }
    for (std::size_t k = kmin; k <= kmax; ++k) {
        std::vector<std::size_t> cx(k);
        for (std::size_t i = 0; i < k; ++i) cx[i] = i;
        bool more_x = true;
        while (more_x) {
            std::vector<std::size_t> cy(k);
            for (std::size_t i = 0; i < k; ++i) cy[i] = i;
            bool more_y = true;
            while (more_y) {
                std::vector<std::size_t> perm(cy);
                do {
                    std::vector<Point2> ptsel;
                    ptsel.reserve(k);
                    for (std::size_t i = 0; i < k; ++i)
                        ptsel.push_back(Point2{grid.x[cx[i]], grid.y[perm[i]]});
                    std::vector<Point2> cycle = polygon_cycle(ptsel, convexity);
                    if (!cycle.empty()) {
                        PolySeq p;
                        p.kind = SeqKind::closed_polygon;
                        p.convexity = convexity;
                        p.vertices = std::move(cycle);
                        out.push_back(std::move(p));
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
                more_y = next_combination(cy, ny);
            }
            more_x = next_combination(cx, nx);
        }
    }
}

}  // namespace

std::vector<PolySeq> enumerate_polygons(const Grid2& grid, Regime regime, Convexity convexity,
                                        bool allow_large) {
    const std::size_t limit = subset_regimes(regime) ? 4 : 7;
    if ((grid.nx() > limit || grid.ny() > limit) && !allow_large)
        throw ScaleGuardError("enumerate_polygons: grid beyond desk scale for this regime");
    std::vector<PolySeq> out;
    if (subset_regimes(regime))
        enumerate_subset_regime(grid, regime, convexity, out);
    else
        enumerate_bijection_regime(grid, regime, convexity, out);
    std::sort(out.begin(), out.end(), [](const PolySeq& a, const PolySeq& b) {
        return a.vertices < b.vertices;
    });
    return out;
}

CountReport count_report(const Grid2& grid, bool allow_large) {
    CountReport r;
    r.F = enumerate_polygons(grid, Regime::contained, Convexity::strict, allow_large).size();
    r.G = enumerate_polygons(grid, Regime::all_lines, Convexity::strict, allow_large).size();
    r.F_bar = enumerate_polygons(grid, Regime::supported, Convexity::strict, allow_large).size();
    r.G_bar =
        enumerate_polygons(grid, Regime::all_lines_once, Convexity::strict, allow_large).size();
    r.W = enumerate_polygons(grid, Regime::contained, Convexity::weak, allow_large).size();
    return r;
}

}  // namespace gridconvex
