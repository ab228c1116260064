#pragma once

#include <json.hpp>

#include "gridconvex/counting.hpp"
#include "gridconvex/encoding.hpp"
#include "gridconvex/grid.hpp"
#include "gridconvex/search.hpp"

namespace gridconvex::doc {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Rationals travel as decimal-free strings ("p" or "p/q") so every reader
// can reproduce them bit-exactly.
json grid_to_json(const Grid2& grid, json metadata = json::object());
Grid2 grid_from_json(const json& j);

json gridd_to_json(const GridD& grid, json metadata = json::object());
GridD gridd_from_json(const json& j);

json point_set_to_json(const std::vector<PointD>& points, json metadata = json::object());

json polygon_to_json(const PolySeq& seq);
PolySeq polygon_from_json(const json& j);

json encoding_to_json(const Encoding& e);
Encoding encoding_from_json(const json& j);

json search_result_to_json(const SearchResult& r, const std::string& task);
json count_report_to_json(const CountReport& r);

}  // namespace gridconvex::doc
