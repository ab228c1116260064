#include "gridconvex/search.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace gridconvex {

namespace {

// Dihedral transform applied as flip(transpose(p)).
struct Transform {
    bool transpose = false;
    bool flip_x = false;
    bool flip_y = false;

    Grid2 apply(const Grid2& g) const {
        Grid2 r = g;
        if (transpose) std::swap(r.x, r.y);
        if (flip_x) r = r.reflected_x();
        if (flip_y) r = r.reflected_y();
        return r;
    }
    Point2 apply(const Point2& p) const {
        Point2 q = transpose ? Point2{p.y, p.x} : p;
        if (flip_x) q.x = -q.x;
        if (flip_y) q.y = -q.y;
        return q;
    }
    Point2 invert(const Point2& p) const {
        Point2 q = p;
        if (flip_x) q.x = -q.x;
        if (flip_y) q.y = -q.y;
        return transpose ? Point2{q.y, q.x} : q;
    }
};

Transform transform_for_chain(ChainClass c) {
    switch (c) {
        case ChainClass::chain_nw: return {};
        case ChainClass::chain_ne: return {false, true, false};
        case ChainClass::chain_sw: return {false, false, true};
        case ChainClass::chain_se: return {false, true, true};
        default: throw std::invalid_argument("transform_for_chain: not a chain class");
    }
}

Transform transform_for_cap(ChainClass c) {
    switch (c) {
        case ChainClass::cap_n: return {};
        case ChainClass::cap_s: return {false, false, true};
        case ChainClass::cap_e: return {true, false, false};
        case ChainClass::cap_w: return {true, false, true};
        default: throw std::invalid_argument("transform_for_cap: not a cap class");
    }
}

}  // namespace

GridPoints::GridPoints(Grid2 grid)
    : grid_(std::move(grid)),
      nx_(static_cast<int>(grid_.nx())),
      ny_(static_cast<int>(grid_.ny())) {
    const int n = count();
    if (n > 80) return;  // fall back to live evaluation
    cache_.assign(static_cast<std::size_t>(n) * n * n, 0);
    auto put = [&](int a, int b, int c, int s) {
        cache_[(static_cast<std::size_t>(a) * n + b) * n + c] = static_cast<std::int8_t>(s);
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int s = orientation(point(a), point(b), point(c));
                put(a, b, c, s);
                put(b, c, a, s);
                put(c, a, b, s);
                put(a, c, b, -s);
                put(b, a, c, -s);
                put(c, b, a, -s);
            }
}

int GridPoints::orient(int a, int b, int c) const {
    if (a == b || b == c || a == c) return 0;
    if (!cache_.empty()) {
        const std::size_t n = count();
        return cache_[(static_cast<std::size_t>(a) * n + b) * n + c];
    }
    return orientation(point(a), point(b), point(c));
}

// ---------------------------------------------------------------------------
// Supported chains (nw class: x and y strictly increase, right turns).

namespace {

struct NwChain {
    int size = 0;
    std::vector<int> ids;
};

bool nw_pair(const GridPoints& pts, int p, int q) {
    return pts.xi(p) < pts.xi(q) && pts.yi(p) < pts.yi(q);
}

// g[p][q]: longest nw-chain starting with vertices p, q.
NwChain max_nw_chain(const GridPoints& pts) {
    const int n = pts.count();
    if (n == 0) return {};
    std::vector<int> g(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int p, int q) -> int& { return g[static_cast<std::size_t>(p) * n + q]; };
    for (int p = n - 1; p >= 0; --p)
        for (int q = p + 1; q < n; ++q) {
            if (!nw_pair(pts, p, q)) continue;
            int best = 2;
            for (int r = q + 1; r < n; ++r)
                if (nw_pair(pts, q, r) && pts.orient(p, q, r) < 0)
                    best = std::max(best, 1 + at(q, r));
            at(p, q) = best;
        }
    NwChain out;
    out.size = 1;
    int best_p = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (at(p, q) > out.size) {
                out.size = at(p, q);
                best_p = p;
            }
    if (out.size == 1) {
        out.ids = {0};
        return out;
    }
    // Greedy front reconstruction yields the lexicographically least
    // optimal chain.
    int p = -1, q = -1;
    for (int cand = 0; cand <= best_p; ++cand) {
        for (int r = cand + 1; r < n; ++r)
            if (at(cand, r) == out.size) {
                p = cand;
                q = r;
                break;
            }
        if (p >= 0) break;
    }
    out.ids = {p, q};
    int remaining = out.size;
    while (static_cast<int>(out.ids.size()) < out.size) {
        --remaining;
        for (int r = q + 1; r < n; ++r)
            if (nw_pair(pts, q, r) && pts.orient(p, q, r) < 0 && at(q, r) == remaining) {
                out.ids.push_back(r);
                p = q;
                q = r;
                break;
            }
    }
    return out;
}

PolySeq chain_witness(const GridPoints& pts, const std::vector<int>& ids,
                      const Transform& t) {
    PolySeq seq;
    seq.kind = SeqKind::chain;
    seq.convexity = Convexity::strict;
    for (int id : ids) seq.vertices.push_back(t.invert(pts.point(id)));
    return seq;
}

}  // namespace

SearchResult max_supported_chain(const Grid2& grid) {
    SearchResult best;
    for (ChainClass c : {ChainClass::chain_nw, ChainClass::chain_ne, ChainClass::chain_se,
                         ChainClass::chain_sw}) {
        Transform t = transform_for_chain(c);
        GridPoints pts(t.apply(grid));
        NwChain found = max_nw_chain(pts);
        if (static_cast<std::size_t>(found.size) > best.size) {
            best.size = static_cast<std::size_t>(found.size);
            best.witness = chain_witness(pts, found.ids, t);
        }
    }
    best.class_set = classify(best.witness.vertices);
    best.optimal = true;
    return best;
}

// ---------------------------------------------------------------------------
// Supported caps in cap_n via the C(l, r) table.

namespace {

std::uint64_t edge_pair_key(CapEdge l, CapEdge r) {
    return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(l.a)) << 48) |
           (static_cast<std::uint64_t>(static_cast<std::uint16_t>(l.b)) << 32) |
           (static_cast<std::uint64_t>(static_cast<std::uint16_t>(r.a)) << 16) |
           static_cast<std::uint64_t>(static_cast<std::uint16_t>(r.b));
}

}  // namespace

CapSearch::CapSearch(const Grid2& grid) : pts_(grid) {
    const int n = pts_.count();
    chain_L_.assign(static_cast<std::size_t>(n) * n, 0);
    chain_R_.assign(static_cast<std::size_t>(n) * n, 0);
    auto L = [&](int a, int b) -> int& { return chain_L_[static_cast<std::size_t>(a) * n + b]; };
    auto R = [&](int a, int b) -> int& { return chain_R_[static_cast<std::size_t>(a) * n + b]; };
    for (int p = 0; p < n; ++p) {
        L(p, p) = 1;
        R(p, p) = 1;
    }
    // L: nw-chain ending with (p1, p2); first index ascending in x.
    for (int p2 = 0; p2 < n; ++p2)
        for (int p1 = 0; p1 < p2; ++p1) {
            if (!nw_pair(pts_, p1, p2)) continue;
            int best = 2;
            for (int o = 0; o < p1; ++o)
                if (nw_pair(pts_, o, p1) && pts_.orient(o, p1, p2) < 0)
                    best = std::max(best, 1 + L(o, p1));
            L(p1, p2) = best;
        }
    // R: ne-chain starting with (r1, r2); x ascending, y descending.
    auto ne_pair = [&](int p, int q) {
        return pts_.xi(p) < pts_.xi(q) && pts_.yi(p) > pts_.yi(q);
    };
    for (int r1 = n - 1; r1 >= 0; --r1)
        for (int r2 = r1 + 1; r2 < n; ++r2) {
            if (!ne_pair(r1, r2)) continue;
            int best = 2;
            for (int v = r2 + 1; v < n; ++v)
                if (ne_pair(r2, v) && pts_.orient(r1, r2, v) < 0)
                    best = std::max(best, 1 + R(r2, v));
            R(r1, r2) = best;
        }
}

int CapSearch::chain_table_L(CapEdge l) const {
    return chain_L_[static_cast<std::size_t>(l.a) * pts_.count() + l.b];
}
int CapSearch::chain_table_R(CapEdge r) const {
    return chain_R_[static_cast<std::size_t>(r.a) * pts_.count() + r.b];
}

bool CapSearch::valid_l(CapEdge l) const {
    return l.degenerate() || nw_pair(pts_, l.a, l.b);
}
bool CapSearch::valid_r(CapEdge r) const {
    return r.degenerate() ||
           (pts_.xi(r.a) < pts_.xi(r.b) && pts_.yi(r.a) > pts_.yi(r.b));
}

int CapSearch::cap_table(CapEdge l, CapEdge r) {
    std::uint64_t key = edge_pair_key(l, r);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int v = eval(l, r);
    memo_.emplace(key, v);
    return v;
}

int CapSearch::eval(CapEdge l, CapEdge r) {
    // Case 1: malformed edges or shared y-coordinates.
    if (!valid_l(l) || !valid_r(r)) return kMinusInf;
    int ly1 = pts_.yi(l.a), ly2 = pts_.yi(l.b);
    int ry1 = pts_.yi(r.a), ry2 = pts_.yi(r.b);
    if (ly1 == ry1 || ly1 == ry2 || ly2 == ry1 || ly2 == ry2) return kMinusInf;

    const bool ldeg = l.degenerate(), rdeg = r.degenerate();
    if (ldeg && rdeg) return 2;
    if (rdeg && ly2 < ry1) return chain_table_L(l) + 1;
    if (ldeg && ly2 > ry1) return chain_table_R(r) + 1;

    const int n = pts_.count();
    if (ly2 > ry1) {
        // Eliminate l2, the topmost vertex.
        int best = kMinusInf;
        for (int v = 0; v <= l.a; ++v) {
            if (v != l.a && !(nw_pair(pts_, v, l.a) && pts_.orient(v, l.a, l.b) < 0)) continue;
            int sub = cap_table(CapEdge{v, l.a}, r);
            if (sub != kMinusInf) best = std::max(best, sub + 1);
        }
        return best;
    }
    // Eliminate r1, the topmost vertex.
    int best = kMinusInf;
    for (int v = r.b; v < n; ++v) {
        if (v != r.b &&
            !(pts_.xi(r.b) < pts_.xi(v) && pts_.yi(v) < pts_.yi(r.b) &&
              pts_.orient(r.a, r.b, v) < 0))
            continue;
        int sub = cap_table(l, CapEdge{r.b, v});
        if (sub != kMinusInf) best = std::max(best, sub + 1);
    }
    return best;
}

namespace {

// Join admissibility per the cap assembly (x strictly increasing through
// the junction, convex turns at the two junction vertices).
bool cap_join_ok(const GridPoints& pts, CapEdge l, CapEdge r) {
    if (pts.xi(l.b) >= pts.xi(r.a)) return false;
    if (!l.degenerate() && pts.orient(l.a, l.b, r.a) >= 0) return false;
    if (!r.degenerate() && pts.orient(l.b, r.a, r.b) >= 0) return false;
    if (l.degenerate() && r.degenerate() && pts.yi(l.a) == pts.yi(r.a)) return false;
    return true;
}

std::vector<int> chain_L_witness(const CapSearch& cs, const GridPoints& pts, CapEdge l) {
    if (l.degenerate()) return {l.a};
    std::vector<int> chain = {l.b, l.a};
    int cur = cs.chain_table_L(l);
    int p1 = l.a, p2 = l.b;
    while (cur > 2) {
        for (int o = 0; o < p1; ++o)
            if (nw_pair(pts, o, p1) && pts.orient(o, p1, p2) < 0 &&
                cs.chain_table_L(CapEdge{o, p1}) == cur - 1) {
                chain.push_back(o);
                p2 = p1;
                p1 = o;
                --cur;
                break;
            }
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<int> chain_R_witness(const CapSearch& cs, const GridPoints& pts, CapEdge r) {
    if (r.degenerate()) return {r.a};
    std::vector<int> chain = {r.a, r.b};
    int cur = cs.chain_table_R(r);
    int r1 = r.a, r2 = r.b;
    const int n = pts.count();
    while (cur > 2) {
        for (int v = r2 + 1; v < n; ++v)
            if (pts.xi(r2) < pts.xi(v) && pts.yi(v) < pts.yi(r2) && pts.orient(r1, r2, v) < 0 &&
                cs.chain_table_R(CapEdge{r2, v}) == cur - 1) {
                chain.push_back(v);
                r1 = r2;
                r2 = v;
                --cur;
                break;
            }
    }
    return chain;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> CapSearch::cap_table_witness(CapEdge l, CapEdge r) {
    std::vector<int> a_suffix, b_prefix, a_core, b_core;
    while (true) {
        int value = cap_table(l, r);
        if (value == kMinusInf) throw std::logic_error("cap_table_witness: invalid entry");
        const bool ldeg = l.degenerate(), rdeg = r.degenerate();
        int ly2 = pts_.yi(l.b), ry1 = pts_.yi(r.a);
        if (ldeg && rdeg) {
            a_core = {l.a};
            b_core = {r.a};
            break;
        }
        if (rdeg && ly2 < ry1) {
            a_core = chain_L_witness(*this, pts_, l);
            b_core = {r.a};
            break;
        }
        if (ldeg && ly2 > ry1) {
            a_core = {l.a};
            b_core = chain_R_witness(*this, pts_, r);
            break;
        }
        if (ly2 > ry1) {
            a_suffix.push_back(l.b);
            bool advanced = false;
            for (int v = 0; v <= l.a && !advanced; ++v) {
                if (v != l.a && !(nw_pair(pts_, v, l.a) && pts_.orient(v, l.a, l.b) < 0)) continue;
                if (cap_table(CapEdge{v, l.a}, r) == value - 1) {
                    l = CapEdge{v, l.a};
                    advanced = true;
                }
            }
            if (!advanced) throw std::logic_error("cap_table_witness: no left predecessor");
        } else {
            b_prefix.push_back(r.a);
            bool advanced = false;
            const int n = pts_.count();
            for (int v = r.b; v < n && !advanced; ++v) {
                if (v != r.b &&
                    !(pts_.xi(r.b) < pts_.xi(v) && pts_.yi(v) < pts_.yi(r.b) &&
                      pts_.orient(r.a, r.b, v) < 0))
                    continue;
                if (cap_table(l, CapEdge{r.b, v}) == value - 1) {
                    r = CapEdge{r.b, v};
                    advanced = true;
                }
            }
            if (!advanced) throw std::logic_error("cap_table_witness: no right successor");
        }
    }
    std::vector<int> a = a_core;
    a.insert(a.end(), a_suffix.rbegin(), a_suffix.rend());
    std::vector<int> b = b_prefix;
    b.insert(b.end(), b_core.begin(), b_core.end());
    return {a, b};
}

SearchResult CapSearch::max_cap() {
    const int n = pts_.count();
    SearchResult out;
    if (n == 0) return out;

    std::vector<CapEdge> ls, rs;
    for (int p = 0; p < n; ++p) {
        ls.push_back({p, p});
        rs.push_back({p, p});
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (nw_pair(pts_, a, b)) ls.push_back({a, b});
            if (pts_.xi(a) < pts_.xi(b) && pts_.yi(a) > pts_.yi(b)) rs.push_back({a, b});
        }

    int best = 1;
    CapEdge best_l{0, 0}, best_r{0, 0};
    bool found = false;
    for (const CapEdge& l : ls)
        for (const CapEdge& r : rs) {
            if (!cap_join_ok(pts_, l, r)) continue;
            int v = cap_table(l, r);
            if (v != kMinusInf && v > best) {
                best = v;
                best_l = l;
                best_r = r;
                found = true;
            }
        }

    out.size = static_cast<std::size_t>(best);
    if (!found) {
        out.size = 1;
        out.witness.vertices = {pts_.point(0)};
        out.witness.kind = SeqKind::cap;
        return out;
    }
    auto [a_ids, b_ids] = cap_table_witness(best_l, best_r);
    out.witness.kind = SeqKind::cap;
    for (int id : a_ids) out.witness.vertices.push_back(pts_.point(id));
    for (int id : b_ids) out.witness.vertices.push_back(pts_.point(id));
    return out;
}

SearchResult max_supported_cap(const Grid2& grid) {
    SearchResult best;
    for (ChainClass c : {ChainClass::cap_n, ChainClass::cap_w, ChainClass::cap_s,
                         ChainClass::cap_e}) {
        Transform t = transform_for_cap(c);
        CapSearch cs(t.apply(grid));
        SearchResult r = cs.max_cap();
        if (r.size > best.size) {
            best.size = r.size;
            best.witness.kind = SeqKind::cap;
            best.witness.vertices.clear();
            for (const Point2& p : r.witness.vertices)
                best.witness.vertices.push_back(t.invert(p));
        }
    }
    best.class_set = classify(best.witness.vertices);
    best.optimal = true;
    return best;
}

// ---------------------------------------------------------------------------
// n-chain and n-cap decisions.

bool has_supported_n_chain(const Grid2& grid) {
    if (!grid.square()) throw std::invalid_argument("has_supported_n_chain: need |X| = |Y|");
    const std::size_t n = grid.nx();
    if (n == 1) return true;
    auto strictly_convex = [](const std::vector<Point2>& seq) {
        int sign = 0;
        for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
            int o = orientation(seq[i], seq[i + 1], seq[i + 2]);
            if (o == 0) return false;
            if (sign == 0) sign = o;
            else if (o != sign) return false;
        }
        return true;
    };
    std::vector<Point2> diag, anti;
    for (std::size_t i = 0; i < n; ++i) {
        diag.push_back(grid.at(i, i));
        anti.push_back(grid.at(i, n - 1 - i));
    }
    return strictly_convex(diag) || strictly_convex(anti);
}

namespace {

// Level DP for an n-cap in cap_n: consume y-coordinates bottom-up; the
// left chain takes x-columns from the left, the right chain from the
// right, so a state is (consumed, left count, last two left rows, first
// two right rows).
bool has_n_cap_capn(const GridPoints& pts) {
    const int n = static_cast<int>(pts.grid().nx());
    constexpr std::uint64_t kNone = 0xff;
    auto pack = [](std::uint64_t i, std::uint64_t a1, std::uint64_t a2, std::uint64_t b1,
                   std::uint64_t b2) {
        return i | (a1 << 8) | (a2 << 16) | (b1 << 24) | (b2 << 32);
    };
    auto id_of = [&](int xi, int yi) { return xi * n + yi; };

    std::unordered_set<std::uint64_t> cur;
    cur.insert(pack(0, kNone, kNone, kNone, kNone));
    for (int k = 0; k < n; ++k) {
        std::unordered_set<std::uint64_t> next;
        for (std::uint64_t s : cur) {
            int i = static_cast<int>(s & 0xff);
            int a1 = static_cast<int>((s >> 8) & 0xff);
            int a2 = static_cast<int>((s >> 16) & 0xff);
            int b1 = static_cast<int>((s >> 24) & 0xff);
            int b2 = static_cast<int>((s >> 32) & 0xff);
            const int lenB = k - i;
            // Append to the left chain at column i, row k.
            {
                bool ok = true;
                if (a2 != static_cast<int>(kNone) && a1 != static_cast<int>(kNone))
                    ok = pts.orient(id_of(i - 2, a1), id_of(i - 1, a2), id_of(i, k)) < 0;
                if (ok)
                    next.insert(pack(i + 1, a2 == static_cast<int>(kNone) ? kNone : a2, k, b1,
                                     b2));
            }
            // Prepend to the right chain at column n - (lenB + 1), row k.
            {
                int col = n - lenB - 1;
                bool ok = col > i - 1;  // stay right of the left chain
                if (ok && b1 != static_cast<int>(kNone) && b2 != static_cast<int>(kNone))
                    ok = pts.orient(id_of(col, k), id_of(col + 1, b1), id_of(col + 2, b2)) < 0;
                if (ok) next.insert(pack(i, a1, a2, k, b1 == static_cast<int>(kNone) ? kNone : b1));
            }
        }
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    for (std::uint64_t s : cur) {
        int i = static_cast<int>(s & 0xff);
        int a1 = static_cast<int>((s >> 8) & 0xff);
        int a2 = static_cast<int>((s >> 16) & 0xff);
        int b1 = static_cast<int>((s >> 24) & 0xff);
        int b2 = static_cast<int>((s >> 32) & 0xff);
        auto id_of2 = [&](int xi, int yi) { return xi * n + yi; };
        const bool hasA2 = a2 != static_cast<int>(kNone);
        const bool hasA1 = a1 != static_cast<int>(kNone);
        const bool hasB1 = b1 != static_cast<int>(kNone);
        const bool hasB2 = b2 != static_cast<int>(kNone);
        if (!hasA2 || !hasB1) return true;  // pure chain is a valid cap
        bool ok = true;
        if (hasA1) ok = ok && pts.orient(id_of2(i - 2, a1), id_of2(i - 1, a2), id_of2(i, b1)) < 0;
        if (hasB2) ok = ok && pts.orient(id_of2(i - 1, a2), id_of2(i, b1), id_of2(i + 1, b2)) < 0;
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool has_supported_n_cap(const Grid2& grid) {
    if (!grid.square()) throw std::invalid_argument("has_supported_n_cap: need |X| = |Y|");
    if (grid.nx() == 1) return true;
    for (ChainClass c : {ChainClass::cap_n, ChainClass::cap_w, ChainClass::cap_s,
                         ChainClass::cap_e}) {
        Transform t = transform_for_cap(c);
        GridPoints pts(t.apply(grid));
        if (has_n_cap_capn(pts)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Maximum contained convex polygon.

namespace {

struct ContainedBest {
    int size = 0;
    std::vector<int> ids;  // polygon vertex ids, cyclic
};

// For one anchor (the lexicographic minimum of the polygon), sort the
// candidates by angle and run the left-turning chain DP.
void contained_from_anchor(const GridPoints& pts, int anchor, ContainedBest& best) {
    const int n = pts.count();
    std::vector<int> cand;
    for (int q = 0; q < n; ++q) {
        if (q == anchor) continue;
        int xa = pts.xi(anchor), ya = pts.yi(anchor);
        if (pts.xi(q) > xa || (pts.xi(q) == xa && pts.yi(q) > ya)) cand.push_back(q);
    }
    const int m = static_cast<int>(cand.size());
    if (m < 2) return;
    Point2 ap = pts.point(anchor);
    std::sort(cand.begin(), cand.end(), [&](int u, int v) {
        Point2 du{pts.point(u).x - ap.x, pts.point(u).y - ap.y};
        Point2 dv{pts.point(v).x - ap.x, pts.point(v).y - ap.y};
        int cr = sgn(du.x * dv.y - du.y * dv.x);
        if (cr != 0) return cr > 0;
        // Same direction: closer first.
        return cmp(du.x, dv.x) != 0 ? du.x < dv.x : du.y < dv.y;
    });

    // f[j][k]: longest left-turning chain anchor -> ... -> cand[j] -> cand[k].
    std::vector<std::vector<int>> f(m, std::vector<int>(m, 0));
    std::vector<std::vector<std::pair<int, int>>> parent(
        m, std::vector<std::pair<int, int>>(m, {-1, -1}));
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k)
            if (pts.orient(anchor, cand[j], cand[k]) > 0) f[j][k] = 3;

    int local_best = 0;
    std::pair<int, int> local_arg{-1, -1};
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < k; ++j) {
            if (f[j][k] < 3) continue;
            // Close the polygon through the anchor.
            if (pts.orient(cand[j], cand[k], anchor) > 0 && f[j][k] > local_best) {
                local_best = f[j][k];
                local_arg = {j, k};
            }
            for (int t = k + 1; t < m; ++t)
                if (pts.orient(cand[j], cand[k], cand[t]) > 0 && f[j][k] + 1 > f[k][t]) {
                    f[k][t] = f[j][k] + 1;
                    parent[k][t] = {j, k};
                }
        }
    if (local_best > best.size) {
        best.size = local_best;
        best.ids.clear();
        best.ids.push_back(anchor);
        // Walk parent pairs (j', j) back from the closing pair (j, k).
        std::vector<int> rev;
        auto [j, k] = local_arg;
        rev.push_back(cand[k]);
        rev.push_back(cand[j]);
        while (parent[j][k].first >= 0) {
            auto [pj, pk] = parent[j][k];
            rev.push_back(cand[pj]);
            j = pj;
            k = pk;
        }
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) best.ids.push_back(*it);
    }
}

}  // namespace

SearchResult max_contained_convex_polygon(const Grid2& grid) {
    GridPoints pts{grid};
    const int n = pts.count();
    ContainedBest best;
    for (int anchor = 0; anchor < n; ++anchor) contained_from_anchor(pts, anchor, best);

    SearchResult out;
    if (best.size < 3) {
        out.size = std::min(n, 2);
        out.witness.kind = SeqKind::chain;
        for (int i = 0; i < static_cast<int>(out.size); ++i)
            out.witness.vertices.push_back(pts.point(i));
        return out;
    }
    out.size = static_cast<std::size_t>(best.size);
    out.witness.kind = SeqKind::closed_polygon;
    std::vector<Point2> verts;
    for (int id : best.ids) verts.push_back(pts.point(id));
    out.witness.vertices = canonical_cycle(verts);
    out.class_set = polygon_classes(out.witness);
    out.optimal = true;
    return out;
}

// ---------------------------------------------------------------------------
// 1/2-approximation via conflict-graph 2-coloring.

namespace {

// Contained cap in cap_n (y-coordinates may repeat): pair DP.
std::vector<int> max_contained_capn_ids(const GridPoints& pts) {
    const int n = pts.count();
    std::vector<int> f(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int p, int q) -> int& { return f[static_cast<std::size_t>(p) * n + q]; };
    auto xinc = [&](int p, int q) { return pts.xi(p) < pts.xi(q); };
    int best = n > 0 ? 1 : 0;
    std::pair<int, int> arg{-1, -1};
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < q; ++p) {
            if (!xinc(p, q)) continue;
            int v = 2;
            for (int o = 0; o < p; ++o)
                if (xinc(o, p) && pts.orient(o, p, q) < 0) v = std::max(v, at(o, p) + 1);
            at(p, q) = v;
            if (v > best) {
                best = v;
                arg = {p, q};
            }
        }
    if (arg.first < 0) return n > 0 ? std::vector<int>{0} : std::vector<int>{};
    std::vector<int> ids = {arg.second, arg.first};
    int p = arg.first, q = arg.second;
    while (static_cast<int>(ids.size()) < best) {
        for (int o = 0; o < p; ++o)
            if (xinc(o, p) && pts.orient(o, p, q) < 0 && at(o, p) + 1 == at(p, q)) {
                ids.push_back(o);
                q = p;
                p = o;
                break;
            }
    }
    std::reverse(ids.begin(), ids.end());
    return ids;
}

// 2-colors the coordinate-conflict graph (paths and even cycles) and
// returns the kept vertices: per component the larger color class, ties
// resolved towards the class holding the lexicographically least vertex.
std::vector<Point2> conflict_keep(const std::vector<Point2>& verts) {
    const int k = static_cast<int>(verts.size());
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (verts[i].x == verts[j].x || verts[i].y == verts[j].y) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<int> color(k, -1);
    std::vector<Point2> kept;
    std::vector<int> comp;
    for (int s = 0; s < k; ++s) {
        if (color[s] != -1) continue;
        comp.clear();
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : adj[u])
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                }
        }
        int c0 = 0, c1 = 0;
        int least = comp[0];
        for (int u : comp) {
            (color[u] == 0 ? c0 : c1)++;
            if (verts[u] < verts[least]) least = u;
        }
        int keep_color = c0 > c1 ? 0 : (c1 > c0 ? 1 : color[least]);
        for (int u : comp)
            if (color[u] == keep_color) kept.push_back(verts[u]);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

SearchResult approx_max_supported_polygon(const Grid2& grid,
                                          std::optional<ChainClass> cap_filter) {
    SearchResult out;
    out.optimal = false;
    if (!cap_filter) {
        SearchResult contained = max_contained_convex_polygon(grid);
        if (contained.size < 3) {
            contained.optimal = false;
            return contained;
        }
        std::vector<Point2> kept = conflict_keep(contained.witness.vertices);
        if (kept.size() < 3) {
            out.size = kept.size();
            out.witness.kind = SeqKind::chain;
            out.witness.vertices = kept;
            return out;
        }
        out.size = kept.size();
        out.witness.kind = SeqKind::closed_polygon;
        out.witness.vertices = convex_hull(kept);
        out.class_set = polygon_classes(out.witness);
        return out;
    }

    if (!is_cap_class(*cap_filter))
        throw std::invalid_argument("approx filter must be a cap class");
    Transform t = transform_for_cap(*cap_filter);
    GridPoints pts(t.apply(grid));
    std::vector<int> ids = max_contained_capn_ids(pts);
    std::vector<Point2> verts;
    for (int id : ids) verts.push_back(pts.point(id));
    std::vector<Point2> kept = conflict_keep(verts);  // x-sorted
    out.size = kept.size();
    out.witness.kind = SeqKind::cap;
    for (const Point2& p : kept) out.witness.vertices.push_back(t.invert(p));
    out.class_set = classify(out.witness.vertices);
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle.

namespace {

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

bool oracle_match(const std::vector<Point2>& x_sorted, ClassSet filter) {
    if (filter.empty()) {
        if (x_sorted.size() < 3) return true;
        return convex_position_2d(x_sorted);
    }
    ClassSet xcls = classify(x_sorted);
    ClassSet chains_and_ns(0xff & ~(ClassSet::of(ChainClass::cap_w).bits() |
                                    ClassSet::of(ChainClass::cap_e).bits()));
    if (!(xcls & filter & chains_and_ns).empty()) return true;
    ClassSet we = ClassSet::of(ChainClass::cap_w) | ClassSet::of(ChainClass::cap_e);
    if ((filter & we).empty()) return false;
    std::vector<Point2> y_sorted = x_sorted;
    std::sort(y_sorted.begin(), y_sorted.end(),
              [](const Point2& a, const Point2& b) { return a.y < b.y; });
    return !(classify(y_sorted) & filter & we).empty();
}

}  // namespace

SearchResult oracle_max_supported(const Grid2& grid, ClassSet filter, bool allow_large) {
    if ((grid.nx() > 6 || grid.ny() > 6) && !allow_large)
        throw ScaleGuardError("oracle_max_supported: grid beyond desk scale");
    const std::size_t nx = grid.nx(), ny = grid.ny();
    const std::size_t kmax = std::min(nx, ny);
    SearchResult out;
    for (std::size_t k = kmax; k >= 1; --k) {
        std::vector<std::size_t> cx(k), cy(k);
        for (std::size_t i = 0; i < k; ++i) cx[i] = cy[i] = i;
        bool more_x = true;
        while (more_x) {
            for (std::size_t i = 0; i < k; ++i) cy[i] = i;
            bool more_y = true;
            while (more_y) {
                std::vector<std::size_t> perm(cy);
                std::sort(perm.begin(), perm.end());
                do {
                    std::vector<Point2> pts;
                    pts.reserve(k);
                    for (std::size_t i = 0; i < k; ++i)
                        pts.push_back(Point2{grid.x[cx[i]], grid.y[perm[i]]});
                    bool match = filter.empty() && k >= 3 ? convex_position_2d(pts)
                                                          : oracle_match(pts, filter);
                    if (match) {
                        out.size = k;
                        if (filter.empty() && k >= 3) {
                            out.witness.kind = SeqKind::closed_polygon;
                            out.witness.vertices = convex_hull(pts);
                            out.class_set = polygon_classes(out.witness);
                        } else {
                            out.witness.kind = k >= 3 ? SeqKind::cap : SeqKind::chain;
                            out.witness.vertices = pts;
                            out.class_set = classify(pts);
                        }
                        out.optimal = true;
                        return out;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
                more_y = next_combination(cy, ny);
            }
            more_x = next_combination(cx, nx);
        }
    }
    return out;
}

}  // namespace gridconvex
