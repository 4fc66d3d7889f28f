#pragma once

#include <cstdint>
#include <stdexcept>

#include "mlsp/instance.h"

namespace mlsp {

struct GenOptions {
    int obstacles = 10;
    Coord coord_max = 200;
    TerminalKind kind = TerminalKind::Point;
    std::uint64_t seed = 1;
    // Segments may cross up to two bounding boxes and points may sit in pockets.
    bool allow_box_pierce = false;
    // Upper bound on polygon-terminal complexity (vertices).
    int max_terminal_vertices = 40;
};

class GenerationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Random box-disjoint instance in general position with coordinates in
// [0, coord_max]. Obstacles are rectangles, L-, U-, staircase, comb and hook shapes.
// The topmost and bottommost sides of every obstacle hull have odd length, so
// after doubling their midpoints avoid all corner coordinates.
Instance generate_instance(const GenOptions& opt);

}  // namespace mlsp
