#pragma once

#include <cstddef>
#include <vector>

#include "mlsp/geometry.h"
#include "mlsp/monotone_paths.h"

namespace mlsp {

// Orientation of the link a partial path ends (or begins) with.
enum class LinkDir : std::uint8_t { None, H, V };

// A point where partial paths enter the sweep: `links` links already used,
// the last of them oriented `dir` (None when links == 0).
struct SweepSource {
    Point p;
    Coord dist = 0;
    int links = 0;
    LinkDir dir = LinkDir::None;
    int tag = 0;
};

// A point where paths leave the sweep; the remaining part costs `dist` and
// `links`, its first link oriented `dir`.
struct SweepSink {
    Point p;
    Coord dist = 0;
    int links = 0;
    LinkDir dir = LinkDir::None;
    int tag = 0;
};

struct SeededAnswer {
    bool found = false;
    Coord dist = 0;
    int links = 0;
    // From the chosen source point to the chosen sink point.
    std::vector<Point> polyline;
    int source_tag = -1;
    int sink_tag = -1;
    std::size_t events = 0;
};

// Lexicographically (length, links) best combination source -> sink over
// paths that are monotone along +x after applying `frame`. Obstacles are open
// sets; vertical moves happen only at event abscissae (obstacle vertices and
// terminal points), which is enough by baseline alignment.
SeededAnswer seeded_sweep(const std::vector<RectPolygon>& obstacles, const std::vector<SweepSource>& sources,
                          const std::vector<SweepSink>& sinks, const GridMap& frame);

// Best over the four sweep directions (x-monotone either way, y-monotone
// either way).
SeededAnswer seeded_solve(const std::vector<RectPolygon>& obstacles, const std::vector<SweepSource>& sources,
                          const std::vector<SweepSink>& sinks);

// Adds `b` to the links of `a` when two partial paths meet: shared collinear
// links are counted once.
int join_links(int links_a, LinkDir a, int links_b, LinkDir b);

}  // namespace mlsp
