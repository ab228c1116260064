#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "document.hpp"
#include "gridconvex/constructions.hpp"
#include "gridconvex/counting.hpp"
#include "gridconvex/encoding.hpp"
#include "gridconvex/families.hpp"
#include "gridconvex/search.hpp"
#include "svg.hpp"

namespace gx = gridconvex;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitScaleGuard = 3;
constexpr int kExitConstruction = 4;

json read_json(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        in = &file;
    }
    json j;
    *in >> j;
    return j;
}

struct GenOptions {
    std::string kind;
    unsigned k = 3;
    std::size_t n = 4;
    std::string r = "2";
    std::size_t m = 1;
    unsigned i = 1, j = 1;
    std::uint64_t seed = 0;
    unsigned d = 3;
};

std::string run_gen(const GenOptions& o) {
    json out;
    if (o.kind == "upper-bound") {
        gx::Grid2 g = gx::upper_bound_grid(o.k);
        out = gx::doc::grid_to_json(g, {{"kind", "upper-bound"}, {"k", o.k}});
    } else if (o.kind == "halving-md") {
        gx::MDSet s = gx::halving_md_set(o.n, gx::parse_rational(o.r));
        gx::Grid2 g(s.values, s.values);
        out = gx::doc::grid_to_json(g, {{"kind", "halving-md"}, {"n", o.n}, {"r", o.r}});
    } else if (o.kind == "counting") {
        gx::CountingGrid cg = gx::counting_grid(o.m);
        out = gx::doc::grid_to_json(
            cg.grid, {{"kind", "counting"}, {"m", o.m}, {"eps", gx::to_string(cg.eps)}});
    } else if (o.kind == "s3") {
        gx::S3Grid s3 = gx::s3_grid(o.i, o.j, o.seed);
        out = gx::doc::gridd_to_json(s3.grid, {{"kind", "s3"},
                                               {"i", o.i},
                                               {"j", o.j},
                                               {"seed", o.seed},
                                               {"attempts", s3.attempts}});
    } else if (o.kind == "md-product") {
        std::vector<gx::MDSet> sets(o.d, gx::halving_md_set(o.n, gx::parse_rational(o.r)));
        std::vector<gx::PointD> pts = gx::md_product_convex(sets);
        out = gx::doc::point_set_to_json(
            pts, {{"kind", "md-product"}, {"d", o.d}, {"n", o.n}, {"r", o.r}});
    } else {
        throw std::invalid_argument("unknown gen kind: " + o.kind);
    }
    return out.dump(2) + "\n";
}

std::string run_solve(const std::string& task, const std::string& grid_path,
                      const std::string& class_name_opt, bool allow_large) {
    gx::Grid2 grid = gx::doc::grid_from_json(read_json(grid_path));
    json out;
    if (task == "chain") {
        out = gx::doc::search_result_to_json(gx::max_supported_chain(grid), task);
    } else if (task == "cap") {
        out = gx::doc::search_result_to_json(gx::max_supported_cap(grid), task);
    } else if (task == "n-chain") {
        out = {{"schema_version", gx::doc::kSchemaVersion},
               {"task", task},
               {"result", gx::has_supported_n_chain(grid)}};
    } else if (task == "n-cap") {
        out = {{"schema_version", gx::doc::kSchemaVersion},
               {"task", task},
               {"result", gx::has_supported_n_cap(grid)}};
    } else if (task == "approx") {
        std::optional<gx::ChainClass> filter;
        if (!class_name_opt.empty()) {
            auto c = gx::class_from_name(class_name_opt);
            if (!c) throw std::invalid_argument("unknown class: " + class_name_opt);
            filter = *c;
        }
        out = gx::doc::search_result_to_json(gx::approx_max_supported_polygon(grid, filter),
                                             task);
    } else if (task == "contained") {
        out = gx::doc::search_result_to_json(gx::max_contained_convex_polygon(grid), task);
    } else if (task == "oracle") {
        gx::ClassSet filter;
        if (!class_name_opt.empty()) {
            auto c = gx::class_from_name(class_name_opt);
            if (!c) throw std::invalid_argument("unknown class: " + class_name_opt);
            filter.insert(*c);
        }
        out = gx::doc::search_result_to_json(gx::oracle_max_supported(grid, filter, allow_large),
                                             task);
    } else {
        throw std::invalid_argument("unknown solve task: " + task);
    }
    return out.dump(2) + "\n";
}

std::string run_count(const std::string& grid_path, const std::string& regime, bool weak,
                      bool allow_large) {
    gx::Grid2 grid = gx::doc::grid_from_json(read_json(grid_path));
    if (regime.empty()) {
        gx::CountReport r = gx::count_report(grid, allow_large);
        return gx::doc::count_report_to_json(r).dump(2) + "\n";
    }
    gx::Regime reg;
    if (regime == "contained") reg = gx::Regime::contained;
    else if (regime == "supported") reg = gx::Regime::supported;
    else if (regime == "all-lines") reg = gx::Regime::all_lines;
    else if (regime == "all-lines-once") reg = gx::Regime::all_lines_once;
    else throw std::invalid_argument("unknown regime: " + regime);
    auto polys = gx::enumerate_polygons(
        grid, reg, weak ? gx::Convexity::weak : gx::Convexity::strict, allow_large);
    json out = {{"schema_version", gx::doc::kSchemaVersion},
                {"regime", regime},
                {"convexity", weak ? "weak" : "strict"},
                {"count", polys.size()}};
    return out.dump(2) + "\n";
}

std::string run_encode(const std::string& grid_path, const std::string& poly_path, bool weak) {
    gx::Grid2 grid = gx::doc::grid_from_json(read_json(grid_path));
    gx::PolySeq poly = gx::doc::polygon_from_json(read_json(poly_path));
    json out;
    if (weak) {
        auto [enc, extremes] = gx::encode_weak(grid, poly);
        out = gx::doc::encoding_to_json(enc);
        json ext = json::array();
        for (const gx::Point2& p : extremes)
            ext.push_back(json::array({gx::to_string(p.x), gx::to_string(p.y)}));
        out["extreme_vertices"] = std::move(ext);
    } else {
        out = gx::doc::encoding_to_json(gx::encode_polygon(grid, poly));
    }
    return out.dump(2) + "\n";
}

std::string run_decode(const std::string& grid_path, const std::string& enc_path) {
    gx::Grid2 grid = gx::doc::grid_from_json(read_json(grid_path));
    gx::Encoding enc = gx::doc::encoding_from_json(read_json(enc_path));
    std::optional<gx::PolySeq> poly = gx::decode_polygon(grid, enc);
    json out;
    out["schema_version"] = gx::doc::kSchemaVersion;
    out["ok"] = poly.has_value();
    if (poly) out["polygon"] = gx::doc::polygon_to_json(*poly);
    return out.dump(2) + "\n";
}

std::string run_plot(const std::string& grid_path, const std::vector<std::string>& poly_paths,
                     const gx::svg::PlotOptions& options) {
    json grid_doc = read_json(grid_path);
    if (grid_doc.contains("axes"))
        throw std::invalid_argument("plot: only 2-dimensional grids can be drawn");
    gx::Grid2 grid = gx::doc::grid_from_json(grid_doc);
    std::vector<gx::PolySeq> polys;
    for (const std::string& p : poly_paths)
        polys.push_back(gx::doc::polygon_from_json(read_json(p)));
    return gx::svg::render(grid, polys, options);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact search, construction and counting of convex polygons in "
                 "Cartesian-product grids"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "Generate a grid or point-set document");
    cmd_gen->add_option("kind", gen.kind, "upper-bound | halving-md | counting | s3 | md-product")
        ->required();
    cmd_gen->add_option("--k", gen.k, "log2 of the grid size (upper-bound)");
    cmd_gen->add_option("--n", gen.n, "set size (halving-md, md-product)");
    cmd_gen->add_option("--r", gen.r, "difference ratio, rational (halving-md, md-product)");
    cmd_gen->add_option("--m", gen.m, "counting-grid parameter");
    cmd_gen->add_option("--i", gen.i, "vertical doubling levels (s3)");
    cmd_gen->add_option("--j", gen.j, "horizontal size exponent (s3)");
    cmd_gen->add_option("--seed", gen.seed, "jitter seed (s3)");
    cmd_gen->add_option("--d", gen.d, "dimension (md-product)");

    std::string task, grid_path = "-", class_name, regime, poly_path = "-", enc_path = "-";
    bool allow_large = false, weak = false;

    CLI::App* cmd_solve = app.add_subcommand("solve", "Search a grid document");
    cmd_solve
        ->add_option("task", task, "chain | cap | n-chain | n-cap | approx | contained | oracle")
        ->required();
    cmd_solve->add_option("--grid", grid_path, "grid document path (default stdin)");
    cmd_solve->add_option("--class", class_name, "restrict to one cap/chain class");
    cmd_solve->add_flag("--allow-large", allow_large, "bypass desk-scale guards");

    CLI::App* cmd_count = app.add_subcommand("count", "Count convex polygons in a grid");
    cmd_count->add_option("--grid", grid_path, "grid document path (default stdin)");
    cmd_count->add_option("--regime", regime,
                          "contained | supported | all-lines | all-lines-once (default: full "
                          "report)");
    cmd_count->add_flag("--weak", weak, "count weakly convex polygons (with --regime)");
    cmd_count->add_flag("--allow-large", allow_large, "bypass desk-scale guards");

    CLI::App* cmd_encode = app.add_subcommand("encode", "Encode a polygon's grid lines");
    cmd_encode->add_option("--grid", grid_path, "grid document path")->required();
    cmd_encode->add_option("--polygon", poly_path, "polygon document path (default stdin)");
    cmd_encode->add_flag("--weak", weak, "weakly convex record with extreme vertices");

    CLI::App* cmd_decode = app.add_subcommand("decode", "Decode grid-line labels to a polygon");
    cmd_decode->add_option("--grid", grid_path, "grid document path")->required();
    cmd_decode->add_option("--encoding", enc_path, "encoding document path (default stdin)");

    gx::svg::PlotOptions plot_options;
    std::vector<std::string> plot_polys;
    CLI::App* cmd_plot = app.add_subcommand("plot", "Render a grid and polygons as SVG");
    cmd_plot->add_option("--grid", grid_path, "grid document path (default stdin)");
    cmd_plot->add_option("--polygon", plot_polys, "polygon document paths");
    cmd_plot->add_flag("--log-y", plot_options.log_y, "logarithmic y-axis mapping");
    cmd_plot->add_option("--width", plot_options.width, "canvas width");
    cmd_plot->add_option("--height", plot_options.height, "canvas height");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string output;
        if (cmd_gen->parsed()) output = run_gen(gen);
        else if (cmd_solve->parsed()) output = run_solve(task, grid_path, class_name, allow_large);
        else if (cmd_count->parsed()) output = run_count(grid_path, regime, weak, allow_large);
        else if (cmd_encode->parsed()) output = run_encode(grid_path, poly_path, weak);
        else if (cmd_decode->parsed()) output = run_decode(grid_path, enc_path);
        else if (cmd_plot->parsed()) output = run_plot(grid_path, plot_polys, plot_options);
        std::cout << output;
        return kExitOk;
    } catch (const gx::ScaleGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScaleGuard;
    } catch (const gx::ConstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
