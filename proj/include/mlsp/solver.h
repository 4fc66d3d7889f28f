#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlsp/geometry.h"
#include "mlsp/instance.h"

namespace mlsp {

struct RegionCandidate {
    std::string region;  // Dxy1..Dy2, pocket, doors
    bool ok = false;
    Coord dist = 0;
    int links = 0;
    std::string note;
};

struct SolveOptions {
    bool use_tree = true;
    bool debug_events = false;
    // Solve every region the target lies in, not only the preferred one.
    bool all_regions = true;
};

struct SolveReport {
    PathResult path;  // input coordinates
    std::vector<RegionCandidate> breakdown;
    std::string chosen;
    std::map<std::string, std::int64_t> stats;
    std::vector<std::string> event_log;
};

// Minimum-link shortest path between the instance's terminals. The instance
// is expected to pass validate().
SolveReport solve(const Instance& inst, const SolveOptions& opt = {});

// Some point shared by two terminals, if they meet.
std::optional<Point> common_point(const Terminal& a, const Terminal& b);

struct PolygonTerminalIndex {
    RectPolygon polygon;
    Rect box;
    std::vector<OrthoSegment> edges;
    static PolygonTerminalIndex build(const RectPolygon& p);
};

// Distance from a point of the terminal's bounding box to the terminal and a
// nearest terminal point. Inside its own box nothing obstructs a terminal.
std::pair<Coord, Point> nearest_on_terminal(const PolygonTerminalIndex& index, Point s);

}  // namespace mlsp
