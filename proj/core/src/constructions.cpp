#include "gridconvex/constructions.hpp"

#include <algorithm>
#include <random>

#include "gridconvex/hull.hpp"

namespace gridconvex {

Grid2 upper_bound_grid(unsigned k) {
    if (k < 1) throw std::invalid_argument("upper_bound_grid: need k >= 1");
    const std::size_t n = std::size_t{1} << k;
    std::vector<Rational> xs(n), ys(n);
    Rational base(2 * static_cast<unsigned long>(n));
    for (std::size_t m = 0; m < n; ++m) {
        xs[m] = static_cast<unsigned long>(m);
        Rational y(0), pw(1);
        for (unsigned i = 0; i < k; ++i) {
            if (m >> i & 1u) y += pw;
            pw *= base;
        }
        ys[m] = y;
    }
    return Grid2(std::move(xs), std::move(ys));
}

std::pair<Rational, Rational> upper_bound_slope_interval(unsigned k, unsigned j) {
    Rational base(2 * (1ul << k));                   // 2n
    Rational lo = 2 * rational_pow(base, j) / base;  // 2*(2n)^(j-1)
    Rational hi = 2 * rational_pow(base, j);         // 2*(2n)^j
    return {lo, hi};
}

unsigned upper_bound_top_bit(const Grid2& grid, const Rational& y1, const Rational& y2) {
    const unsigned k = static_cast<unsigned>(floor_log2(grid.ny()));
    Rational base(2 * static_cast<unsigned long>(grid.ny()));
    // Recover base-(2n) digits; Y values are sums of distinct powers.
    auto digits = [&](Rational v) {
        std::vector<int> d(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            Rational pw = rational_pow(base, k - 1 - i);
            if (v >= pw) {
                d[k - 1 - i] = 1;
                v -= pw;
            }
        }
        return d;
    };
    std::vector<int> d1 = digits(y1), d2 = digits(y2);
    for (unsigned i = k; i-- > 0;)
        if (d1[i] != d2[i]) return i;
    throw std::invalid_argument("upper_bound_top_bit: equal values");
}

namespace {

// Index map that presents the set with decreasing differences: identity
// when already decreasing, otherwise the reflected order.
std::vector<std::size_t> decreasing_index_map(const MDSet& s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> idx(n);
    bool decreasing = s.direction == MDDirection::decreasing_differences;
    for (std::size_t i = 0; i < n; ++i) idx[i] = decreasing ? i : n - 1 - i;
    return idx;
}

}  // namespace

std::vector<Point2> md_antidiagonal(const MDSet& A, const MDSet& B) {
    if (A.size() != B.size()) throw std::invalid_argument("md_antidiagonal: size mismatch");
    if (!validate(A) || !validate(B))
        throw std::invalid_argument("md_antidiagonal: input is not MD");
    const std::size_t n = A.size();
    std::vector<std::size_t> ia = decreasing_index_map(A), ib = decreasing_index_map(B);
    std::vector<Point2> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(Point2{A.values[ia[i]], B.values[ib[n - 1 - i]]});
    return out;
}

std::size_t md_product_slice_size(std::size_t d, std::size_t n) {
    // Compositions of n + d - 1 into d parts from [1, n].
    const std::size_t target = n + d - 1;
    std::vector<std::size_t> count(target + 1, 0);
    count[0] = 1;
    for (std::size_t axis = 0; axis < d; ++axis) {
        std::vector<std::size_t> next(target + 1, 0);
        for (std::size_t s = 0; s <= target; ++s) {
            if (!count[s]) continue;
            for (std::size_t v = 1; v <= n && s + v <= target; ++v)
                next[s + v] += count[s];
        }
        count = std::move(next);
    }
    return count[target];
}

std::vector<PointD> md_product_convex(const std::vector<MDSet>& sets) {
    const std::size_t d = sets.size();
    if (d < 2) throw std::invalid_argument("md_product_convex: need dimension >= 2");
    const std::size_t n = sets[0].size();
    for (const MDSet& s : sets) {
        if (s.size() != n) throw std::invalid_argument("md_product_convex: size mismatch");
        if (n < 2) throw std::invalid_argument("md_product_convex: need n >= 2");
        if (!validate(s)) throw std::invalid_argument("md_product_convex: input is not MD");
    }
    std::vector<std::vector<std::size_t>> maps;
    maps.reserve(d);
    for (const MDSet& s : sets) maps.push_back(decreasing_index_map(s));

    std::vector<PointD> out;
    std::vector<std::size_t> v(d, 1);  // 1-based per-axis indices
    auto emit = [&](const std::vector<std::size_t>& vv) {
        PointD p;
        p.coords.reserve(d);
        for (std::size_t k = 0; k < d; ++k)
            p.coords.push_back(sets[k].values[maps[k][vv[k] - 1]]);
        out.push_back(std::move(p));
    };
    // Enumerate { v in [1,n]^d : sum v = n + d - 1 } lexicographically.
    const std::size_t target = n + d - 1;
    std::vector<std::size_t> cur(d, 1);
    auto rec = [&](auto&& self, std::size_t axis, std::size_t remaining) -> void {
        if (axis + 1 == d) {
            if (remaining >= 1 && remaining <= n) {
                cur[axis] = remaining;
                emit(cur);
            }
            return;
        }
        for (std::size_t val = 1; val <= n && val < remaining; ++val) {
            cur[axis] = val;
            self(self, axis + 1, remaining - val);
        }
    };
    rec(rec, 0, target);
    emit(v);  // the corner p_(1,...,1)
    return out;
}

bool s3_generic(const GridD& grid) {
    std::vector<PointD> pts = grid.all_points();
    const std::size_t n = pts.size();
    auto diff = [](const PointD& a, const PointD& b) {
        std::vector<Rational> d(a.coords.size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = b.coords[k] - a.coords[k];
        return d;
    };
    auto collinear = [](const std::vector<Rational>& u, const std::vector<Rational>& w) {
        return u[0] * w[1] == u[1] * w[0] && u[0] * w[2] == u[2] * w[0] &&
               u[1] * w[2] == u[2] * w[1];
    };
    auto axis_dir = [](const std::vector<Rational>& u) {
        int nz = (u[0] != 0) + (u[1] != 0) + (u[2] != 0);
        return nz == 1;
    };
    // Lines through three points must be axis-parallel.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            auto u = diff(pts[a], pts[b]);
            for (std::size_t c = b + 1; c < n; ++c) {
                auto w = diff(pts[a], pts[c]);
                if (collinear(u, w) && !axis_dir(u)) return false;
            }
        }
    // Planes through four points must be parallel to a coordinate axis
    // (normal with a zero component). Quadruples with a collinear triple
    // are covered by the line check.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            auto u = diff(pts[a], pts[b]);
            for (std::size_t c = b + 1; c < n; ++c) {
                auto w = diff(pts[a], pts[c]);
                if (collinear(u, w)) continue;
                Rational nx = u[1] * w[2] - u[2] * w[1];
                Rational ny = u[2] * w[0] - u[0] * w[2];
                Rational nz = u[0] * w[1] - u[1] * w[0];
                if (nx == 0 || ny == 0 || nz == 0) continue;  // axis-aligned plane
                for (std::size_t e = c + 1; e < n; ++e) {
                    auto t = diff(pts[a], pts[e]);
                    if (nx * t[0] + ny * t[1] + nz * t[2] == 0) return false;
                }
            }
        }
    return true;
}

S3Grid s3_grid(unsigned i, unsigned j, std::uint64_t seed) {
    if (i > j) throw std::invalid_argument("s3_grid: need i <= j");
    if (j > 3) throw std::invalid_argument("s3_grid: j above desk scale");
    Grid2 layer = (j == 0) ? Grid2({Rational(0)}, {Rational(0)}) : upper_bound_grid(j);

    std::mt19937_64 rng(seed);
    const unsigned budget = 24;
    for (unsigned attempt = 0; attempt < budget; ++attempt) {
        std::vector<Rational> zs{Rational(0)};
        Rational span_xy = (layer.x.back() - layer.x.front()) + (layer.y.back() - layer.y.front());
        for (unsigned level = 1; level <= i; ++level) {
            Rational span_z = zs.back() - zs.front();
            Rational big = (span_xy + span_z + 1) * Rational(4 * static_cast<long>(zs.size() + 1) *
                                                             static_cast<long>(layer.nx() * layer.ny()));
            Rational jitter(static_cast<unsigned long>(rng() % 9973 + 1),
                            static_cast<unsigned long>(rng() % 9973 + 10007));
            jitter.canonicalize();
            Rational lambda = big + jitter;
            std::vector<Rational> stacked = zs;
            for (const Rational& z : zs) stacked.push_back(z + lambda);
            zs = std::move(stacked);
            std::sort(zs.begin(), zs.end());
        }
        GridD g({layer.x, layer.y, zs});
        if (s3_generic(g)) return S3Grid{std::move(g), attempt};
    }
    throw ConstructionError("s3_grid: genericity not certified within retry budget");
}

namespace {

// Turn certification for counting_grid: all monotone triples within one
// half (at most one duplicated median per axis) turn towards the outside
// of that half.
bool counting_grid_turns_ok(const CountingGrid& cg) {
    const auto& gx = cg.grid.x;
    const auto& gy = cg.grid.y;
    const std::size_t L = cg.axis_size();
    const std::size_t mlo = cg.median_lo(), mhi = cg.median_hi();

    auto half_indices = [&](bool lower) {
        std::vector<std::size_t> idx;
        for (std::size_t t = 0; t < L; ++t)
            if (lower ? t <= mhi : t >= mlo) idx.push_back(t);
        return idx;
    };
    auto both_medians = [&](std::size_t a, std::size_t b, std::size_t c) {
        int cnt = (a == mlo || a == mhi) + (b == mlo || b == mhi) + (c == mlo || c == mhi);
        return cnt >= 2;
    };

    for (bool lower : {true, false}) {
        std::vector<std::size_t> ys = half_indices(lower);
        int want = lower ? +1 : -1;
        for (std::size_t xa = 0; xa < L; ++xa)
            for (std::size_t xb = xa + 1; xb < L; ++xb)
                for (std::size_t xc = xb + 1; xc < L; ++xc) {
                    if (both_medians(xa, xb, xc)) continue;
                    for (std::size_t p = 0; p < ys.size(); ++p)
                        for (std::size_t q = p + 1; q < ys.size(); ++q)
                            for (std::size_t r = q + 1; r < ys.size(); ++r) {
                                if (both_medians(ys[p], ys[q], ys[r])) continue;
                                // y increasing and y decreasing along x.
                                Point2 a{gx[xa], gy[ys[p]]}, b{gx[xb], gy[ys[q]]},
                                    c{gx[xc], gy[ys[r]]};
                                if (orientation(a, b, c) != want) return false;
                                Point2 a2{gx[xa], gy[ys[r]]}, b2{gx[xb], gy[ys[q]]},
                                    c2{gx[xc], gy[ys[p]]};
                                if (orientation(a2, b2, c2) != want) return false;
                            }
                }
    }
    return true;
}

}  // namespace

CountingGrid counting_grid(std::size_t m) {
    if (m < 1) throw std::invalid_argument("counting_grid: need m >= 1");
    const std::size_t n = 2 * m + 3;
    Rational nr(static_cast<unsigned long>(n));
    Rational eps = 1 / rational_pow(nr, static_cast<unsigned>(m + 3));

    std::vector<Rational> xs, ys;
    // X: 1 .. m+2, duplicated median, m+3 .. 2m+3.
    for (std::size_t v = 1; v <= m + 2; ++v) xs.push_back(Rational(static_cast<unsigned long>(v)));
    xs.push_back(Rational(static_cast<unsigned long>(m + 2)) + eps);
    for (std::size_t v = m + 3; v <= 2 * m + 3; ++v)
        xs.push_back(Rational(static_cast<unsigned long>(v)));
    // Y: n^1 .. n^(m+2), duplicated median, mirrored upper half.
    Rational top = rational_pow(nr, static_cast<unsigned>(m + 2));
    for (std::size_t i = 1; i <= m + 2; ++i)
        ys.push_back(rational_pow(nr, static_cast<unsigned>(i)));
    ys.push_back(top + eps);
    for (std::size_t i = m + 1; i >= 1; --i)
        ys.push_back(2 * top - rational_pow(nr, static_cast<unsigned>(i)));

    CountingGrid cg{Grid2(std::move(xs), std::move(ys)), m, eps};
    if (!counting_grid_turns_ok(cg))
        throw ConstructionError("counting_grid: turn property not certified");
    return cg;
}

namespace {

// Lemma-1 assembly for a nw-chain (x and y increasing, bulging northwest):
// attach (x', min Y) below and (max X, y') to the right.
PolySeq assemble_pentagon_nw(const Grid2& grid, const std::vector<Point2>& chain,
                             const Rational& unused_x, const Rational& unused_y) {
    PolySeq out;
    out.kind = SeqKind::closed_polygon;
    out.vertices = chain;
    out.vertices.push_back(Point2{grid.x.back(), unused_y});
    out.vertices.push_back(Point2{unused_x, grid.y.front()});
    out.vertices = canonical_cycle(out.vertices);
    return out;
}

Grid2 transform_grid(const Grid2& g, bool flip_x, bool flip_y) {
    Grid2 r = g;
    if (flip_x) r = r.reflected_x();
    if (flip_y) r = r.reflected_y();
    return r;
}

Point2 transform_point(const Point2& p, bool flip_x, bool flip_y) {
    return Point2{flip_x ? Rational(-p.x) : p.x, flip_y ? Rational(-p.y) : p.y};
}

}  // namespace

PolySeq pentagon_from_6x6(const Grid2& grid) {
    if (grid.nx() != 6 || grid.ny() != 6)
        throw std::invalid_argument("pentagon_from_6x6: need a 6x6 grid");
    // Inner 4x4 coordinates.
    std::vector<Rational> ix(grid.x.begin() + 1, grid.x.end() - 1);
    std::vector<Rational> iy(grid.y.begin() + 1, grid.y.end() - 1);

    // Corner-to-corner 3-chains of the inner grid, lexicographic order:
    // (diagonal, middle point). Orientation decides the chain's class and
    // with it which outer coordinates get attached.
    struct Candidate {
        Point2 c1, mid, c2;
        int orient;
        bool sw_ne;
    };
    std::vector<Candidate> cands;
    for (int diag = 0; diag < 2; ++diag) {
        bool sw_ne = diag == 0;
        Point2 c1 = sw_ne ? Point2{ix[0], iy[0]} : Point2{ix[0], iy[3]};
        Point2 c2 = sw_ne ? Point2{ix[3], iy[3]} : Point2{ix[3], iy[0]};
        for (std::size_t a = 1; a <= 2; ++a)
            for (std::size_t b = 1; b <= 2; ++b) {
                Point2 mid{ix[a], iy[b]};
                int o = orientation(c1, mid, c2);
                if (o != 0) cands.push_back({c1, mid, c2, o, sw_ne});
            }
    }
    for (const Candidate& cand : cands) {
        // Map the chain onto the nw-case with axis reflections.
        bool flip_x, flip_y;
        if (cand.sw_ne) {
            // x,y increasing; right turns (orient -1) is already nw.
            flip_x = flip_y = cand.orient > 0;  // se-chain: rotate 180
        } else {
            // x increasing, y decreasing: ne-chain (orient -1) or sw-chain.
            flip_x = cand.orient > 0;
            flip_y = cand.orient < 0;
        }
        Grid2 tg = transform_grid(grid, flip_x, flip_y);
        std::vector<Point2> chain = {transform_point(cand.c1, flip_x, flip_y),
                                     transform_point(cand.mid, flip_x, flip_y),
                                     transform_point(cand.c2, flip_x, flip_y)};
        std::sort(chain.begin(), chain.end());
        // Unused inner coordinates in the transformed frame.
        std::vector<Rational> tix(tg.x.begin() + 1, tg.x.end() - 1);
        std::vector<Rational> tiy(tg.y.begin() + 1, tg.y.end() - 1);
        Rational ux, uy;
        for (const Rational& v : tix)
            if (v != chain[0].x && v != chain[1].x && v != chain[2].x) ux = v;
        for (const Rational& v : tiy)
            if (v != chain[0].y && v != chain[1].y && v != chain[2].y) uy = v;
        PolySeq pent = assemble_pentagon_nw(tg, chain, ux, uy);
        // Map back.
        for (Point2& p : pent.vertices) p = transform_point(p, flip_x, flip_y);
        pent.vertices = canonical_cycle(pent.vertices);
        if (is_supported(grid, pent) && is_convex_polygon(pent)) return pent;
    }
    throw ConstructionError("pentagon_from_6x6: no valid assembly found");
}

}  // namespace gridconvex
