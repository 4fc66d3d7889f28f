#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mlsp/monotone_paths.h"

namespace mlsp {

class RegionPrecondition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Event kinds of the sweep. Convex-polygon holes add two kinds beyond the
// six of the rectangle case: a lower-left step of a hole only retires
// baselines, an upper-right step exposes baselines that nothing can reach
// from the left. Upper-left and lower-right hole steps behave as detach and
// attach. Seed and Read carry values into and out of a region at points of
// its boundary.
enum class EventKind : std::uint8_t {
    Originate,
    Seed,
    Attach,
    Expose,
    Merge,
    Split,
    Detach,
    Retract,
    Read,
    Terminate,
};
const char* event_kind_name(EventKind k);

struct SweepEvent {
    Coord x = 0;
    EventKind kind = EventKind::Originate;
    std::size_t alpha = 0, beta = 0;  // baseline indices, alpha <= beta
    int seed = 0;                     // Seed: link count at the point
    int tag = -1;                     // caller's identifier for Seed/Read
};

// The region between two up-right monotone chains from s to t, in the frame
// where t lies upper-right of s.
struct StaircaseRegion {
    Point s, t;
    Point c, c_low;
    std::vector<Point> upper;  // upper-left chain, s to t
    std::vector<Point> lower;  // lower-right chain, s to t
    std::vector<std::size_t> holes;  // obstacle indices
    std::vector<RectPolygon> hole_polygons;
    std::vector<Coord> baselines;  // sorted y of H_1..H_m
    std::vector<SweepEvent> events;  // sorted by x, then kind

    std::size_t index_of(Coord y) const;
    // Strict interior of the outline (holes ignored).
    bool strictly_inside(Point p) const;
    // Closed outline membership (holes ignored).
    bool in_outline(Point p) const;
};

// Builds D_xy(s, t). Throws RegionPrecondition if t is not reachable by an
// xy-monotone path of the required shape.
StaircaseRegion build_staircase_region(const Domain& dom, Point s, Point t);

// Event ordering at equal x.
bool event_before(const SweepEvent& a, const SweepEvent& b);

// Max point (in x, then y) of the intersection of two up-right monotone
// polylines, or nullopt if they do not meet.
std::optional<Point> last_common_point(const std::vector<Point>& a, const std::vector<Point>& b);

// Prefix of a polyline up to a point lying on it.
std::vector<Point> polyline_prefix(const std::vector<Point>& p, Point until);

}  // namespace mlsp
