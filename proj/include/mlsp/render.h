#pragma once

#include <string>
#include <vector>

#include "mlsp/instance.h"

namespace mlsp {

struct RenderPath {
    std::vector<Point> polyline;
    Coord length = 0;
    int links = 0;
};

// Deterministic SVG 1.1: obstacles filled gray, bounding boxes dashed,
// terminals and the optional path stroked, y axis pointing up.
std::string render_svg(const Instance& inst, const RenderPath* path = nullptr);

}  // namespace mlsp
