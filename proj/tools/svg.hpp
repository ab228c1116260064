#pragma once

#include <string>
#include <vector>

#include "gridconvex/grid.hpp"

namespace gridconvex::svg {

struct PlotOptions {
    int width = 800;
    int height = 600;
    bool log_y = false;  // logarithmic y mapping for spread-out constructions
};

// Standalone SVG 1.1: grid lines, grid points, polygon overlays.
std::string render(const Grid2& grid, const std::vector<PolySeq>& polygons,
                   const PlotOptions& options);

}  // namespace gridconvex::svg
