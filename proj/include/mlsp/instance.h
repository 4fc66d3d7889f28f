#pragma once

#include <string>
#include <vector>

#include "mlsp/geometry.h"

namespace mlsp {

enum class TerminalKind : std::uint8_t { Point, Segment, Polygon };

// A source or target. Points are stored as degenerate segments so that the
// segment code path covers them.
struct Terminal {
    TerminalKind kind = TerminalKind::Point;
    OrthoSegment segment;
    RectPolygon polygon;

    static Terminal point(Point p);
    static Terminal segment_between(Point a, Point b);
    static Terminal polygon_of(RectPolygon p);

    bool is_point() const { return kind == TerminalKind::Point; }
    Rect box() const;
    // Every vertex/endpoint of the terminal.
    std::vector<Point> corners() const;
    bool operator==(const Terminal&) const = default;
};

struct Instance {
    std::vector<RectPolygon> obstacles;
    Terminal source;
    Terminal target;
    bool operator==(const Instance&) const = default;
};

enum class Violation : std::uint8_t {
    MalformedPolygon,
    CoordinateRange,
    BoxOverlap,
    GeneralPosition,
    TerminalBlocked,
    TerminalInBox,
};

struct ValidationIssue {
    Violation kind;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    bool has(Violation v) const;
};

// Checks box-disjointness, general position (no two distinct obstacles share
// a corner x or y; terminal coordinates avoid obstacle corner coordinates),
// coordinate range and terminal placement. Point terminals may sit inside an
// obstacle's bounding box (in a pocket); polygon terminals must be
// box-disjoint; a segment may cross at most two boxes.
ValidationReport validate(const Instance& inst);

// Intersection tests against a polygon treated as an open set or as its
// closure.
bool meets_closed(const RectPolygon& p, const OrthoSegment& s);
bool meets_interior(const RectPolygon& p, const OrthoSegment& s);
bool polygons_meet_closed(const RectPolygon& a, const RectPolygon& b);

// True if the segment (or point) meets the open interior of the box.
bool segment_enters_box(const OrthoSegment& s, const Rect& b);

struct ScaledInstance {
    Instance instance;
    bool scaled = false;
};

class CoordinateOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Doubles every coordinate so that midpoints of sides are integral. Distances
// measured in the scaled instance are halved on output.
ScaledInstance scale_by_two(const Instance& inst);
Instance unscale(const ScaledInstance& s);

Instance transform_instance(const Instance& inst, Point (*f)(Point));
Terminal transform_terminal(const Terminal& t, Point (*f)(Point));
RectPolygon transform_polygon(const RectPolygon& p, Point (*f)(Point));

}  // namespace mlsp
