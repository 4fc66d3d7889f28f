#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlsp/generator.h"
#include "mlsp/instance.h"
#include "mlsp/monotone_paths.h"
#include "mlsp/oracle.h"
#include "mlsp/pockets.h"
#include "mlsp/solver.h"

namespace mlsp::testing {

Coord max_abs(const Instance& inst);

// Every step is axis-parallel and no step meets an obstacle interior.
bool path_is_free(const std::vector<Point>& polyline, const std::vector<RectPolygon>& obstacles);

// Closed membership.
bool on_terminal(const Terminal& t, Point p);

// Empty string when the solver's answer is a valid path from source to target
// matching the oracle's (distance, links); otherwise the reason.
std::string check_against_oracle(const Instance& inst, const PathResult& path, const OracleAnswer& oracle);

// Non-decreasing in both coordinates.
bool up_right_monotone(const std::vector<Point>& polyline);

// Horizontal links lie on a y from ys, vertical links on an x from xs.
bool aligned(const std::vector<Point>& polyline, const std::vector<Coord>& xs, const std::vector<Coord>& ys);

// Obstacle vertex and terminal corner coordinates, sorted and unique.
std::pair<std::vector<Coord>, std::vector<Coord>> baseline_coords(const Instance& inst);

// Grid map taking a point source's region to the canonical frame the region
// solvers work in.
GridMap region_frame(Region r);

// A point-to-point instance (already hulled and doubled) seen from the frame
// of the target's preferred region.
struct FramedPair {
    Region region = Region::Dxy1;
    GridMap map;
    std::vector<RectPolygon> obstacles;  // mapped
    Point s, t;                          // mapped
    Coord sentinel = 0;
};

std::optional<FramedPair> frame_point_pair(const Instance& hulled_scaled);

// Generated instance, or nullopt when the generator gives up.
std::optional<Instance> try_generate(const GenOptions& opt);

// Boundary segments of an obstacle set.
std::vector<OrthoSegment> boundary_segments(const std::vector<RectPolygon>& obstacles);



// Independent lexicographic (length, links) Dijkstra on the grid spanned by
// a closed simple region's own coordinates plus extra ones. A grid edge is
// usable when its midpoint is not outside the region.
class ClippedOracle {
public:
    struct Cost {
        Coord dist = -1;  // -1: unreachable
        int links = 0;
    };

    ClippedOracle(RectPolygon region, std::vector<Coord> xs, std::vector<Coord> ys);

    void run(const std::vector<Point>& sources);
    // last: 0 any orientation, 1 horizontal, 2 vertical. Among paths of
    // minimum length only.
    Cost cost(Point p, int last = 0) const;
    // Grid nodes on the closed segment.
    std::vector<Point> nodes_on(const OrthoSegment& s) const;

private:
    std::size_t id(std::size_t i, std::size_t j) const { return j * xs_.size() + i; }

    RectPolygon region_;
    std::vector<Coord> xs_, ys_;
    std::vector<std::pair<Coord, int>> best_;  // (node * 3 + state)
};


// One terminal piece inside a pocket, with the profile of one door.
struct PocketCase {
    OrthoSegment piece;
    Pocket pocket;
    OrthoSegment door;
    DoorProfile profile;
};

// Every (piece, door) pair of both terminals, profiled on the instance's own
// coordinate lines.
std::vector<PocketCase> pocket_cases(const Instance& inst);

// Checks a profile against the clipped oracle: per-sample costs, a unique
// closest pair when no straight link reaches the door, distances affine in
// the offset from that pair, and crossing-link offsets in {0, 1, 2}. Empty
// string when all hold.
std::string check_pocket_case(const PocketCase& c, const Instance& inst);


// Horizontal links where an x-monotone path turns from rising to falling or
// back, and how many of them fail to contain a whole horizontal obstacle side.
struct WinderAudit {
    int winders = 0;
    int violations = 0;
};

WinderAudit audit_winders(const std::vector<Point>& polyline, const std::vector<RectPolygon>& obstacles);

// In each quadrant frame the vertical-first traced path stays weakly above-left
// of the horizontal-first one.
bool quadrant_pairs_do_not_cross(const EightPaths& e);

}  // namespace mlsp::testing
