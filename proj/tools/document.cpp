#include "document.hpp"

namespace gridconvex::doc {

namespace {

json rationals_to_json(const std::vector<Rational>& vs) {
    json arr = json::array();
    for (const Rational& v : vs) arr.push_back(to_string(v));
    return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected array of rational strings");
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
    return out;
}

void check_schema(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    if (j.contains("schema_version") && j["schema_version"].get<int>() > kSchemaVersion)
        throw std::invalid_argument("document schema too new");
}

}  // namespace

json grid_to_json(const Grid2& grid, json metadata) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["x"] = rationals_to_json(grid.x);
    j["y"] = rationals_to_json(grid.y);
    j["metadata"] = std::move(metadata);
    return j;
}

Grid2 grid_from_json(const json& j) {
    check_schema(j);
    if (!j.contains("x") || !j.contains("y"))
        throw std::invalid_argument("grid document needs x and y");
    return Grid2(rationals_from_json(j["x"]), rationals_from_json(j["y"]));
}

json gridd_to_json(const GridD& grid, json metadata) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json axes = json::array();
    for (const auto& a : grid.axes) axes.push_back(rationals_to_json(a));
    j["axes"] = std::move(axes);
    j["metadata"] = std::move(metadata);
    return j;
}

GridD gridd_from_json(const json& j) {
    check_schema(j);
    if (!j.contains("axes")) throw std::invalid_argument("grid document needs axes");
    std::vector<std::vector<Rational>> axes;
    for (const auto& a : j["axes"]) axes.push_back(rationals_from_json(a));
    return GridD(std::move(axes));
}

json point_set_to_json(const std::vector<PointD>& points, json metadata) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json arr = json::array();
    for (const PointD& p : points) arr.push_back(rationals_to_json(p.coords));
    j["points"] = std::move(arr);
    j["metadata"] = std::move(metadata);
    return j;
}

namespace {

const char* kind_name(SeqKind k) {
    switch (k) {
        case SeqKind::chain: return "chain";
        case SeqKind::cap: return "cap";
        case SeqKind::closed_polygon: return "closed-polygon";
    }
    return "chain";
}

SeqKind kind_from_name(const std::string& s) {
    if (s == "chain") return SeqKind::chain;
    if (s == "cap") return SeqKind::cap;
    if (s == "closed-polygon") return SeqKind::closed_polygon;
    throw std::invalid_argument("unknown kind: " + s);
}

}  // namespace

json polygon_to_json(const PolySeq& seq) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json verts = json::array();
    for (const Point2& p : seq.vertices)
        verts.push_back(json::array({to_string(p.x), to_string(p.y)}));
    j["vertices"] = std::move(verts);
    j["kind"] = kind_name(seq.kind);
    j["convexity"] = seq.convexity == Convexity::weak ? "weak" : "strict";
    json tags = json::array();
    for (ChainClass c : classify(seq.vertices).to_list()) tags.push_back(class_name(c));
    j["class_tags"] = std::move(tags);
    return j;
}

PolySeq polygon_from_json(const json& j) {
    check_schema(j);
    if (!j.contains("vertices")) throw std::invalid_argument("polygon document needs vertices");
    PolySeq seq;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw std::invalid_argument("vertex must be an [x, y] pair");
        seq.vertices.push_back(Point2{parse_rational(v[0].get<std::string>()),
                                      parse_rational(v[1].get<std::string>())});
    }
    if (j.contains("kind")) seq.kind = kind_from_name(j["kind"].get<std::string>());
    if (j.contains("convexity"))
        seq.convexity =
            j["convexity"].get<std::string>() == "weak" ? Convexity::weak : Convexity::strict;
    return seq;
}

json encoding_to_json(const Encoding& e) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["horizontal_labels"] = e.horizontal_labels;
    j["vertical_labels"] = e.vertical_labels;
    j["leftmost_row"] = e.leftmost_row;
    return j;
}

Encoding encoding_from_json(const json& j) {
    check_schema(j);
    Encoding e;
    e.horizontal_labels = j.at("horizontal_labels").get<std::vector<int>>();
    e.vertical_labels = j.at("vertical_labels").get<std::vector<int>>();
    e.leftmost_row = j.at("leftmost_row").get<std::size_t>();
    return e;
}

json search_result_to_json(const SearchResult& r, const std::string& task) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["task"] = task;
    j["size"] = r.size;
    j["witness"] = polygon_to_json(r.witness);
    json tags = json::array();
    for (ChainClass c : r.class_set.to_list()) tags.push_back(class_name(c));
    j["class_tags"] = std::move(tags);
    j["optimal"] = r.optimal;
    return j;
}

json count_report_to_json(const CountReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["F"] = r.F;
    j["G"] = r.G;
    j["F_bar"] = r.F_bar;
    j["G_bar"] = r.G_bar;
    j["W"] = r.W;
    return j;
}

}  // namespace gridconvex::doc
