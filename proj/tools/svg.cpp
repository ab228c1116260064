#include "svg.hpp"

#include <cmath>
#include <sstream>

namespace gridconvex::svg {

namespace {

constexpr double kMargin = 40.0;

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

double fractional(const Rational& v) { return mpq_get_d(v.get_mpq_t()); }

}  // namespace

std::string render(const Grid2& grid, const std::vector<PolySeq>& polygons,
                   const PlotOptions& options) {
    const double w = options.width, h = options.height;
    double x_lo = fractional(grid.x.front()), x_hi = fractional(grid.x.back());
    double y_lo = fractional(grid.y.front()), y_hi = fractional(grid.y.back());

    auto map_y_raw = [&](double v) {
        return options.log_y ? std::log2(1.0 + (v - y_lo)) : v - y_lo;
    };
    double y_span = std::max(map_y_raw(y_hi), 1e-9);
    double x_span = std::max(x_hi - x_lo, 1e-9);

    auto sx = [&](const Rational& v) {
        return kMargin + (fractional(v) - x_lo) / x_span * (w - 2 * kMargin);
    };
    auto sy = [&](const Rational& v) {
        return h - kMargin - map_y_raw(fractional(v)) / y_span * (h - 2 * kMargin);
    };

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << " "
        << options.height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const Rational& x : grid.x)
        out << "  <line class=\"grid\" x1=\"" << sx(x) << "\" y1=\"" << kMargin << "\" x2=\""
            << sx(x) << "\" y2=\"" << h - kMargin << "\" stroke=\"#cccccc\"/>\n";
    for (const Rational& y : grid.y)
        out << "  <line class=\"grid\" x1=\"" << kMargin << "\" y1=\"" << sy(y) << "\" x2=\""
            << w - kMargin << "\" y2=\"" << sy(y) << "\" stroke=\"#cccccc\"/>\n";

    for (std::size_t i = 0; i < polygons.size(); ++i) {
        const PolySeq& p = polygons[i];
        if (p.vertices.empty()) continue;
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "  <path class=\"poly\" d=\"";
        for (std::size_t k = 0; k < p.vertices.size(); ++k)
            out << (k == 0 ? "M" : "L") << sx(p.vertices[k].x) << " " << sy(p.vertices[k].y)
                << " ";
        if (p.kind == SeqKind::closed_polygon) out << "Z";
        out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        for (const Point2& v : p.vertices)
            out << "  <circle class=\"vertex\" cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y)
                << "\" r=\"4\" fill=\"" << color << "\"/>\n";
    }

    for (const Rational& x : grid.x)
        for (const Rational& y : grid.y)
            out << "  <circle class=\"point\" cx=\"" << sx(x) << "\" cy=\"" << sy(y)
                << "\" r=\"1.5\" fill=\"#333333\"/>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace gridconvex::svg
