#include "gridconvex/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridconvex {

namespace {

std::vector<Rational> sorted_axis(std::vector<Rational> v, const char* what) {
    if (v.empty()) throw std::invalid_argument(std::string(what) + ": empty axis");
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument(std::string(what) + ": duplicate coordinate");
    return v;
}

}  // namespace

Grid2::Grid2(std::vector<Rational> xs, std::vector<Rational> ys)
    : x(sorted_axis(std::move(xs), "Grid2.x")), y(sorted_axis(std::move(ys), "Grid2.y")) {}

Grid2 Grid2::reflected_x() const {
    std::vector<Rational> nx;
    nx.reserve(x.size());
    for (auto it = x.rbegin(); it != x.rend(); ++it) nx.push_back(-*it);
    Grid2 g;
    g.x = std::move(nx);
    g.y = y;
    return g;
}

Grid2 Grid2::reflected_y() const {
    std::vector<Rational> ny;
    ny.reserve(y.size());
    for (auto it = y.rbegin(); it != y.rend(); ++it) ny.push_back(-*it);
    Grid2 g;
    g.x = x;
    g.y = std::move(ny);
    return g;
}

GridD::GridD(std::vector<std::vector<Rational>> ax) {
    if (ax.size() < 2) throw std::invalid_argument("GridD: need dimension >= 2");
    axes.reserve(ax.size());
    for (auto& a : ax) axes.push_back(sorted_axis(std::move(a), "GridD.axis"));
}

std::size_t GridD::point_count() const {
    std::size_t n = 1;
    for (const auto& a : axes) n *= a.size();
    return n;
}

std::vector<PointD> GridD::all_points() const {
    std::vector<PointD> out;
    out.reserve(point_count());
    std::vector<std::size_t> idx(dim(), 0);
    while (true) {
        PointD p;
        p.coords.reserve(dim());
        for (std::size_t k = 0; k < dim(); ++k) p.coords.push_back(axes[k][idx[k]]);
        out.push_back(std::move(p));
        std::size_t k = dim();
        while (k > 0) {
            --k;
            if (++idx[k] < axes[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

namespace {

bool axis_contains(const std::vector<Rational>& axis, const Rational& v) {
    return std::binary_search(axis.begin(), axis.end(), v);
}

}  // namespace

bool is_contained(const Grid2& grid, const PolySeq& seq) {
    for (const Point2& p : seq.vertices)
        if (!axis_contains(grid.x, p.x) || !axis_contains(grid.y, p.y)) return false;
    return true;
}

bool is_supported(const Grid2& grid, const PolySeq& seq) {
    if (!is_contained(grid, seq)) return false;
    std::vector<Rational> xs, ys;
    for (const Point2& p : seq.vertices) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end() &&
           std::adjacent_find(ys.begin(), ys.end()) == ys.end();
}

}  // namespace gridconvex
