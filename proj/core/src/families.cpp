#include "gridconvex/families.hpp"

#include <algorithm>

namespace gridconvex {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void check_divisible(std::size_t m, std::size_t d, const char* what) {
    if (m % d != 0)
        throw std::invalid_argument(std::string("family: m must be divisible by ") + what);
}

std::vector<std::vector<std::size_t>> subsets_of_size(const std::vector<std::size_t>& items,
                                                      std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > items.size()) return out;
    while (true) {
        std::vector<std::size_t> s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = items[idx[i]];
        out.push_back(std::move(s));
        std::size_t i = k;
        bool more = false;
        while (i-- > 0) {
            if (idx[i] + (k - i) < items.size()) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                more = true;
                break;
            }
        }
        if (!more) break;
    }
    return out;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& all,
                                 const std::vector<std::size_t>& taken) {
    std::vector<std::size_t> out;
    for (std::size_t v : all)
        if (!std::binary_search(taken.begin(), taken.end(), v)) out.push_back(v);
    return out;
}

// One side's assignment: which of its lines carry a vertex of the first
// chain and which of the second (a line may carry both in the G variant).
struct SideChoice {
    std::vector<std::size_t> first;   // bottom chain (columns), left chain (rows)
    std::vector<std::size_t> second;  // top chain / right chain
};

std::vector<SideChoice> side_choices(const std::vector<std::size_t>& lines, bool shared) {
    std::vector<SideChoice> out;
    const std::size_t m = lines.size();
    if (!shared) {
        for (auto& f : subsets_of_size(lines, m / 2)) out.push_back({f, without(lines, f)});
        return out;
    }
    // G: thirds go to first only, second only, or both.
    for (auto& f_only : subsets_of_size(lines, m / 3)) {
        std::vector<std::size_t> rest = without(lines, f_only);
        for (auto& s_only : subsets_of_size(rest, m / 3)) {
            std::vector<std::size_t> both = without(rest, s_only);
            SideChoice sc;
            sc.first = f_only;
            sc.first.insert(sc.first.end(), both.begin(), both.end());
            std::sort(sc.first.begin(), sc.first.end());
            sc.second = s_only;
            sc.second.insert(sc.second.end(), both.begin(), both.end());
            std::sort(sc.second.begin(), sc.second.end());
            out.push_back(std::move(sc));
        }
    }
    return out;
}

struct AxisLayout {
    std::vector<std::size_t> lower;  // choosable line indices below the medians
    std::vector<std::size_t> upper;
};

// Assembles one family polygon from the per-side chain assignments.
PolySeq assemble(const CountingGrid& cg, const SideChoice& cols_left,
                 const SideChoice& cols_right, const SideChoice& rows_below,
                 const SideChoice& rows_above) {
    const Grid2& g = cg.grid;
    const std::size_t last = cg.upper_boundary();
    Point2 L = g.at(0, cg.median_lo());
    Point2 R = g.at(last, cg.median_hi());
    Point2 T = g.at(cg.median_hi(), last);
    Point2 Bo = g.at(cg.median_lo(), 0);

    auto quadrant = [&](const std::vector<std::size_t>& cols,
                        const std::vector<std::size_t>& rows, bool rows_descend) {
        std::vector<Point2> v;
        const std::size_t k = cols.size();
        for (std::size_t i = 0; i < k; ++i)
            v.push_back(g.at(cols[i], rows_descend ? rows[k - 1 - i] : rows[i]));
        return v;
    };
    // Clockwise: L, nw (x up), T, ne (x up, y down), R, se (x down), Bo, sw.
    std::vector<Point2> cycle{L};
    for (auto& p : quadrant(cols_left.second, rows_above.first, false)) cycle.push_back(p);
    cycle.push_back(T);
    for (auto& p : quadrant(cols_right.second, rows_above.second, true)) cycle.push_back(p);
    cycle.push_back(R);
    {
        auto se = quadrant(cols_right.first, rows_below.second, false);
        for (auto it = se.rbegin(); it != se.rend(); ++it) cycle.push_back(*it);
    }
    cycle.push_back(Bo);
    {
        auto sw = quadrant(cols_left.first, rows_below.first, true);
        for (auto it = sw.rbegin(); it != sw.rend(); ++it) cycle.push_back(*it);
    }
    PolySeq p;
    p.kind = SeqKind::closed_polygon;
    p.convexity = Convexity::strict;
    p.vertices = canonical_cycle(cycle);
    return p;
}

// Line usage counts per axis for regime validation.
bool family_polygon_valid(const CountingGrid& cg, const PolySeq& poly, bool all_lines,
                          bool at_most_once) {
    if (!is_convex_polygon(poly)) return false;
    std::vector<int> xs(cg.grid.nx(), 0), ys(cg.grid.ny(), 0);
    for (const Point2& p : poly.vertices) {
        auto xit = std::lower_bound(cg.grid.x.begin(), cg.grid.x.end(), p.x);
        auto yit = std::lower_bound(cg.grid.y.begin(), cg.grid.y.end(), p.y);
        if (xit == cg.grid.x.end() || *xit != p.x) return false;
        if (yit == cg.grid.y.end() || *yit != p.y) return false;
        ++xs[xit - cg.grid.x.begin()];
        ++ys[yit - cg.grid.y.begin()];
    }
    for (int c : xs) {
        if (all_lines && c < 1) return false;
        if (at_most_once && c > 1) return false;
    }
    for (int c : ys) {
        if (all_lines && c < 1) return false;
        if (at_most_once && c > 1) return false;
    }
    return true;
}

std::vector<PolySeq> generate_core(const CountingGrid& cg, const AxisLayout& xlay,
                                   const AxisLayout& ylay, bool shared, bool all_lines,
                                   bool at_most_once) {
    auto cl = side_choices(xlay.lower, shared);
    auto cr = side_choices(xlay.upper, shared);
    auto rb = side_choices(ylay.lower, shared);
    auto ra = side_choices(ylay.upper, shared);
    std::vector<PolySeq> out;
    out.reserve(cl.size() * cr.size() * rb.size() * ra.size());
    for (const auto& a : cl)
        for (const auto& b : cr)
            for (const auto& c : rb)
                for (const auto& d : ra) {
                    PolySeq p = assemble(cg, a, b, c, d);
                    if (!family_polygon_valid(cg, p, all_lines, at_most_once))
                        throw ConstructionError("family_generate: emitted polygon invalid");
                    out.push_back(std::move(p));
                }
    return out;
}

AxisLayout full_layout(const CountingGrid& cg) {
    AxisLayout l;
    for (std::size_t i = 1; i <= cg.m; ++i) l.lower.push_back(i);
    for (std::size_t i = cg.m + 3; i <= 2 * cg.m + 2; ++i) l.upper.push_back(i);
    return l;
}

}  // namespace

mpz_class family_size(std::size_t m, FamilyVariant variant) {
    switch (variant) {
        case FamilyVariant::Gbar:
            check_divisible(m, 2, "2");
            return binom(m, m / 2) * binom(m, m / 2) * binom(m, m / 2) * binom(m, m / 2);
        case FamilyVariant::G: {
            check_divisible(m, 3, "3");
            mpz_class per_side = binom(m, m / 3) * binom(2 * m / 3, m / 3);
            return per_side * per_side * per_side * per_side;
        }
        case FamilyVariant::Fbar: {
            check_divisible(m, 3, "3");
            mpz_class sub = binom(m, 2 * m / 3);
            return sub * sub * sub * sub * family_size(2 * m / 3, FamilyVariant::Gbar);
        }
        case FamilyVariant::F: {
            check_divisible(m, 4, "4");
            mpz_class sub = binom(m, 3 * m / 4);
            return sub * sub * sub * sub * family_size(3 * m / 4, FamilyVariant::G);
        }
    }
    throw std::invalid_argument("family_size: unknown variant");
}

std::vector<PolySeq> family_generate(std::size_t m, FamilyVariant variant) {
    CountingGrid cg = counting_grid(m);
    AxisLayout full = full_layout(cg);
    switch (variant) {
        case FamilyVariant::Gbar:
            check_divisible(m, 2, "2");
            return generate_core(cg, full, full, false, true, true);
        case FamilyVariant::G:
            check_divisible(m, 3, "3");
            return generate_core(cg, full, full, true, true, false);
        case FamilyVariant::Fbar:
        case FamilyVariant::F: {
            const bool shared = variant == FamilyVariant::F;
            check_divisible(m, shared ? 4 : 3, shared ? "4" : "3");
            const std::size_t sub = shared ? 3 * m / 4 : 2 * m / 3;
            std::vector<PolySeq> out;
            auto xl = subsets_of_size(full.lower, sub);
            auto xu = subsets_of_size(full.upper, sub);
            auto yl = subsets_of_size(full.lower, sub);
            auto yu = subsets_of_size(full.upper, sub);
            for (const auto& a : xl)
                for (const auto& b : xu)
                    for (const auto& c : yl)
                        for (const auto& d : yu) {
                            AxisLayout xlay{a, b}, ylay{c, d};
                            auto polys =
                                generate_core(cg, xlay, ylay, shared, false, !shared);
                            out.insert(out.end(), polys.begin(), polys.end());
                        }
            return out;
        }
    }
    throw std::invalid_argument("family_generate: unknown variant");
}

}  // namespace gridconvex
