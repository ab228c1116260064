#include "gridconvex/encoding.hpp"

#include <algorithm>

namespace gridconvex {

namespace {

std::size_t axis_index(const std::vector<Rational>& axis, const Rational& v) {
    auto it = std::lower_bound(axis.begin(), axis.end(), v);
    if (it == axis.end() || *it != v)
        throw std::invalid_argument("encode: vertex not on a grid line");
    return static_cast<std::size_t>(it - axis.begin());
}

// Cyclic arc membership [from .. to] inclusive, walking forward.
std::vector<bool> cyclic_arc(std::size_t k, std::size_t from, std::size_t to) {
    std::vector<bool> in(k, false);
    std::size_t i = from;
    while (true) {
        in[i] = true;
        if (i == to) break;
        i = (i + 1) % k;
    }
    return in;
}

struct ArcSets {
    std::vector<bool> left;    // B_l .. T_l through the leftmost vertex
    std::vector<bool> bottom;  // R_b .. L_b through the bottommost vertex
};

// Left cap (nw+sw chains) and bottom cap (se+sw) as cyclic vertex ranges of
// the canonical clockwise cycle.
ArcSets arc_sets(const std::vector<Point2>& v) {
    const std::size_t k = v.size();
    std::size_t t_l = 0, b_l = 0, b_r = 0, r_b = 0, l_b = 0;
    for (std::size_t i = 1; i < k; ++i) {
        auto& p = v[i];
        // T_l: max y, then min x.
        auto& tl = v[t_l];
        if (p.y > tl.y || (p.y == tl.y && p.x < tl.x)) t_l = i;
        // B_l: min y, then min x; B_r: min y, then max x.
        auto& bl = v[b_l];
        if (p.y < bl.y || (p.y == bl.y && p.x < bl.x)) b_l = i;
        auto& br = v[b_r];
        if (p.y < br.y || (p.y == br.y && p.x > br.x)) b_r = i;
        // R_b: max x, then min y.
        auto& rb = v[r_b];
        if (p.x > rb.x || (p.x == rb.x && p.y < rb.y)) r_b = i;
        // L_b: min x, then min y.
        auto& lb = v[l_b];
        if (p.x < lb.x || (p.x == lb.x && p.y < lb.y)) l_b = i;
    }
    return {cyclic_arc(k, b_l, t_l), cyclic_arc(k, r_b, l_b)};
}

Encoding encode_cycle(const Grid2& grid, const std::vector<Point2>& cycle) {
    const std::size_t k = cycle.size();
    ArcSets arcs = arc_sets(cycle);
    std::vector<std::vector<std::size_t>> on_row(grid.ny()), on_col(grid.nx());
    for (std::size_t i = 0; i < k; ++i) {
        on_row[axis_index(grid.y, cycle[i].y)].push_back(i);
        on_col[axis_index(grid.x, cycle[i].x)].push_back(i);
    }
    Encoding e;
    e.horizontal_labels.assign(grid.ny(), 0);
    e.vertical_labels.assign(grid.nx(), 0);
    for (std::size_t r = 0; r < grid.ny(); ++r) {
        if (on_row[r].size() >= 2) e.horizontal_labels[r] = 3;
        else if (on_row[r].size() == 1)
            e.horizontal_labels[r] = arcs.left[on_row[r][0]] ? 1 : 2;
    }
    for (std::size_t c = 0; c < grid.nx(); ++c) {
        if (on_col[c].size() >= 2) e.vertical_labels[c] = 3;
        else if (on_col[c].size() == 1)
            e.vertical_labels[c] = arcs.bottom[on_col[c][0]] ? 1 : 2;
    }
    e.leftmost_row = axis_index(grid.y, cycle[0].y);
    return e;
}

}  // namespace

Encoding encode_polygon(const Grid2& grid, const PolySeq& polygon) {
    if (!is_convex_polygon(polygon))
        throw std::invalid_argument("encode_polygon: not strictly convex");
    std::vector<Point2> cycle = canonical_cycle(polygon.vertices);
    return encode_cycle(grid, cycle);
}

std::pair<Encoding, std::vector<Point2>> encode_weak(const Grid2& grid,
                                                     const PolySeq& polygon) {
    if (!is_weakly_convex_polygon(polygon))
        throw std::invalid_argument("encode_weak: not weakly convex");
    std::vector<Point2> cycle = canonical_cycle(polygon.vertices);
    Encoding e = encode_cycle(grid, cycle);

    // Extreme vertices on the bounding box: at most two per side.
    Rational min_x = cycle[0].x, max_x = cycle[0].x, min_y = cycle[0].y, max_y = cycle[0].y;
    for (const Point2& p : cycle) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    std::vector<Point2> extremes;
    auto add_extremes = [&](auto on_side, bool by_x) {
        std::vector<Point2> side;
        for (const Point2& p : cycle)
            if (on_side(p)) side.push_back(p);
        auto cmp_key = [&](const Point2& a, const Point2& b) {
            return by_x ? a.x < b.x : a.y < b.y;
        };
        auto [lo, hi] = std::minmax_element(side.begin(), side.end(), cmp_key);
        extremes.push_back(*lo);
        if (!(*hi == *lo)) extremes.push_back(*hi);
    };
    add_extremes([&](const Point2& p) { return p.y == max_y; }, true);   // top
    add_extremes([&](const Point2& p) { return p.y == min_y; }, true);   // bottom
    add_extremes([&](const Point2& p) { return p.x == min_x; }, false);  // left
    add_extremes([&](const Point2& p) { return p.x == max_x; }, false);  // right
    std::sort(extremes.begin(), extremes.end());
    extremes.erase(std::unique(extremes.begin(), extremes.end()), extremes.end());
    return {std::move(e), std::move(extremes)};
}

namespace {

// Cursor over an index list, consumed front to back.
struct Cursor {
    std::vector<std::size_t> items;
    std::size_t pos = 0;

    bool empty() const { return pos >= items.size(); }
    std::size_t remaining() const { return items.size() - pos; }
    std::size_t peek() const { return items[pos]; }
    std::size_t take() { return items[pos++]; }
};

}  // namespace

std::optional<PolySeq> decode_polygon(const Grid2& grid, const Encoding& enc) {
    const std::size_t nx = grid.nx(), ny = grid.ny();
    if (enc.horizontal_labels.size() != ny || enc.vertical_labels.size() != nx) return {};
    for (int l : enc.horizontal_labels)
        if (l < 0 || l > 3) return {};
    for (int l : enc.vertical_labels)
        if (l < 0 || l > 3) return {};
    const auto& H = enc.horizontal_labels;
    const auto& V = enc.vertical_labels;

    Cursor yl, yr_desc, xu, xb_desc;  // rows with a left/right vertex, cols up/bottom
    std::vector<std::size_t> used_rows, used_cols;
    for (std::size_t r = 0; r < ny; ++r) {
        if (H[r]) used_rows.push_back(r);
        if (H[r] == 1 || H[r] == 3) yl.items.push_back(r);
    }
    for (std::size_t r = ny; r-- > 0;)
        if (H[r] == 2 || H[r] == 3) yr_desc.items.push_back(r);
    for (std::size_t c = 0; c < nx; ++c) {
        if (V[c]) used_cols.push_back(c);
        if (V[c] == 2 || V[c] == 3) xu.items.push_back(c);
    }
    for (std::size_t c = nx; c-- > 0;)
        if (V[c] == 1 || V[c] == 3) xb_desc.items.push_back(c);

    if (used_rows.empty() || used_cols.empty()) return {};
    const std::size_t r0 = enc.leftmost_row;
    if (r0 >= ny || !(H[r0] == 1 || H[r0] == 3)) return {};
    const std::size_t L_col = used_cols.front(), R_col = used_cols.back();
    const std::size_t B_row = used_rows.front(), T_row = used_rows.back();
    if (!(V[L_col] == 1 || V[L_col] == 3)) return {};
    if (!(V[R_col] == 1 || V[R_col] == 3)) return {};
    if (!(H[B_row] == 1 || H[B_row] == 3)) return {};
    if (!(H[T_row] == 1 || H[T_row] == 3)) return {};

    // xb runs descending from R_col; the front elements below the walk are
    // consumed from the back of the list, i.e. the cursor list is already
    // reversed. L's own column sits at the very end of xb_desc.
    if (xb_desc.empty() || xb_desc.items.back() != L_col) return {};
    if (xb_desc.items.front() != R_col) return {};
    bool xu_has_lcol = !xu.empty() && xu.peek() == L_col;  // left edge
    if (xu_has_lcol != (V[L_col] == 3)) return {};
    if (xu_has_lcol) xu.take();  // consumed by the leftmost vertex itself
    if (V[L_col] == 1) xb_desc.items.pop_back();  // single L consumes it

    std::vector<std::pair<std::size_t, std::size_t>> verts;  // (col, row)
    auto emit = [&](std::size_t c, std::size_t r) { verts.push_back({c, r}); };

    // --- nw: rows r0 and all left rows above, columns ascending.
    std::vector<std::size_t> nw_rows{r0};
    while (yl.pos < yl.items.size() && yl.peek() <= r0) yl.take();  // rows below r0 wait for sw
    std::size_t yl_below_end = yl.pos;  // rows < r0 are items[0 .. yl_below_end)
    {
        // Recompute: yl holds ascending rows; split below/above r0.
        yl.pos = 0;
        while (!yl.empty() && yl.peek() < r0) yl.take();
        yl_below_end = yl.pos;
        if (yl.empty() || yl.peek() != r0) return {};
        yl.take();  // r0 itself
    }
    while (!yl.empty()) nw_rows.push_back(yl.take());
    if (nw_rows.back() != T_row) return {};

    bool corner_tr = false;  // topmost vertex is also the single rightmost
    bool r_consumed = false;
    emit(L_col, nw_rows[0]);
    for (std::size_t i = 1; i < nw_rows.size(); ++i) {
        std::size_t col;
        if (!xu.empty()) col = xu.take();
        else if (i + 1 == nw_rows.size() && V[R_col] == 1) {
            col = R_col;
            corner_tr = true;
            r_consumed = true;
            if (xb_desc.empty() || xb_desc.items.front() != R_col) return {};
            xb_desc.take();
        } else
            return {};
        emit(col, nw_rows[i]);
    }

    const std::size_t t = T_row;
    // --- ne: optional second top vertex, then middles, ending at the
    // rightmost column.
    if (!corner_tr) {
        if (H[t] == 3) {
            if (yr_desc.empty() || yr_desc.peek() != t) return {};
            yr_desc.take();
            std::size_t col;
            if (!xu.empty()) col = xu.take();
            else if (V[R_col] == 1 && !r_consumed) {
                col = R_col;
                r_consumed = true;
                if (xb_desc.empty() || xb_desc.items.front() != R_col) return {};
                xb_desc.take();
            } else
                return {};
            emit(col, t);
        }
        while (!xu.empty()) {
            std::size_t col = xu.take();
            if (yr_desc.empty()) return {};
            emit(col, yr_desc.take());
        }
        if (V[R_col] == 1 && !r_consumed) {
            if (yr_desc.empty()) return {};
            if (xb_desc.empty() || xb_desc.items.front() != R_col) return {};
            xb_desc.take();
            emit(R_col, yr_desc.take());
            r_consumed = true;
        }
        // Label 3: the rightmost column was consumed as the last xu element.
        if (V[R_col] == 3) {
            if (verts.empty() || verts.back().first != R_col) return {};
            if (xb_desc.empty() || xb_desc.items.front() != R_col) return {};
            xb_desc.take();
        }
    }

    // --- se: optional second rightmost vertex, middles descending.
    if (V[R_col] == 3) {
        if (yr_desc.empty()) return {};
        emit(R_col, yr_desc.take());
    }
    while (!yr_desc.empty()) {
        std::size_t row = yr_desc.take();
        if (xb_desc.empty()) return {};
        emit(xb_desc.take(), row);
    }
    // Bottom row: label 1 means the single bottom vertex is on the left cap
    // and was not in the yr stream.
    if (H[B_row] == 1) {
        if (B_row == r0) {
            // Bottom vertex is the leftmost vertex itself; nothing to emit.
        } else {
            if (xb_desc.empty()) return {};
            emit(xb_desc.take(), B_row);
        }
    } else {
        if (verts.empty() || verts.back().second != B_row) return {};
    }

    // --- sw: second bottom vertex when the bottom line has two, then rows
    // ascending back towards the leftmost vertex.
    Cursor yl_below;
    yl_below.items.assign(yl.items.begin(), yl.items.begin() + yl_below_end);
    if (H[B_row] == 3) {
        if (yl_below.empty() || yl_below.peek() != B_row) return {};
        yl_below.take();
        if (xb_desc.empty()) return {};
        emit(xb_desc.take(), B_row);
    } else if (H[B_row] == 1 && B_row != r0) {
        if (yl_below.empty() || yl_below.peek() != B_row) return {};
        yl_below.take();
    }
    while (!yl_below.empty()) {
        std::size_t row = yl_below.take();
        if (xb_desc.empty()) return {};
        emit(xb_desc.take(), row);
    }

    if (!xu.empty() || !yr_desc.empty() || !xb_desc.empty()) return {};
    if (verts.size() < 3) return {};
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return {};

    PolySeq poly;
    poly.kind = SeqKind::closed_polygon;
    poly.convexity = Convexity::strict;
    {
        std::vector<Point2> pts;
        for (auto [c, r] : verts) pts.push_back(grid.at(c, r));
        std::vector<Point2> hull = convex_hull(pts);
        if (hull.size() != pts.size()) return {};
        poly.vertices = std::move(hull);
    }
    if (!is_convex_polygon(poly)) return {};
    if (!(encode_polygon(grid, poly) == enc)) return {};
    return poly;
}

}  // namespace gridconvex
