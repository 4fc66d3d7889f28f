#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mlsp/geometry.h"
#include "mlsp/seeded_sweep.h"

namespace mlsp {

struct TerminalPiece {
    OrthoSegment segment;
    int box = -1;  // obstacle whose bounding box contains the piece, -1 if none
};

// Consecutive pieces share their endpoint on a box boundary.
struct TerminalSplit {
    std::vector<TerminalPiece> pieces;
};

TerminalSplit split_terminal(const OrthoSegment& t, const std::vector<RectPolygon>& obstacles);

// A connected component of B(P) minus the closure of P.
struct Pocket {
    RectPolygon polygon;
    std::optional<OrthoSegment> door_h;
    std::optional<OrthoSegment> door_v;
    std::size_t host = 0;

    std::vector<OrthoSegment> doors() const;
};

class PocketError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws PocketError if the piece is not inside B(P) and outside cl(P).
Pocket pocket_of(const OrthoSegment& piece, const RectPolygon& p, std::size_t host = 0);

// Lexicographic (length, links) Dijkstra over a Hanan grid clipped to a
// closed simple rectilinear region. States remember the orientation of the
// last link.
class RegionGrid {
public:
    struct Cost {
        Coord dist = 0;
        int links = 0;
        bool finite() const;
    };

    RegionGrid(RectPolygon region, std::vector<Coord> xs, std::vector<Coord> ys);

    // Multi-source run from every grid node on the given segments.
    void run(const std::vector<OrthoSegment>& sources);

    bool is_node(Point p) const;
    // LinkDir::None asks for the best over all final orientations.
    Cost cost(Point p, LinkDir last = LinkDir::None) const;
    // From a source node to p; empty if unreachable.
    std::vector<Point> path_to(Point p, LinkDir last = LinkDir::None) const;

    const RectPolygon& region() const { return region_; }
    const std::vector<Coord>& xs() const { return xs_; }
    const std::vector<Coord>& ys() const { return ys_; }
    // Grid nodes of the region lying on the segment.
    std::vector<Point> nodes_on(const OrthoSegment& s) const;

private:
    std::size_t index(std::size_t i, std::size_t j) const { return j * xs_.size() + i; }
    std::optional<std::size_t> node_of(Point p) const;
    int best_state(std::size_t node, LinkDir last) const;

    RectPolygon region_;
    std::vector<Coord> xs_, ys_;
    std::vector<char> inside_;
    std::vector<Cost> cost_;  // node * 3 + state (None, H, V)
    std::vector<int> pred_;
};

struct PocketPath {
    PathResult path;
    // Best link counts when the link at q must be horizontal or vertical.
    int links_h = 0;
    int links_v = 0;
};

// Minimum-link shortest path between two points of a pocket. Throws
// PocketError if either point lies outside the pocket.
PocketPath simple_polygon_mlsp(Point p, Point q, const Pocket& pocket);

struct DoorSample {
    Point v;
    Coord dist = 0;
    int links_h = 0;
    int links_v = 0;
    int links_any = 0;
};

// Distances and link counts from a terminal piece to the sample points of
// one door (or, for a degenerate profile, to the piece itself).
struct DoorProfile {
    OrthoSegment door;
    bool degenerate = false;
    std::vector<DoorSample> samples;
    // Set when no axis-parallel segment in the pocket joins piece and door.
    std::optional<std::pair<Point, Point>> unique_closest;
    // Otherwise: the door points reached by a single straight link.
    std::optional<OrthoSegment> direct;
    std::shared_ptr<const RegionGrid> grid;

    // Links of the sample's crossing orientation (perpendicular to the door).
    int crossing_links(const DoorSample& s) const;
    // From the terminal to the sample, ending with a link of orientation `last`.
    std::vector<Point> path_to(Point v, LinkDir last) const;
};

// Samples are the door's crossings with the coordinate lines hx / hy plus
// its endpoints.
DoorProfile door_profile(const OrthoSegment& piece, const Pocket& pocket, const OrthoSegment& door,
                         const std::vector<Coord>& hx, const std::vector<Coord>& hy);

// A piece outside every box: its own grid points at distance zero.
DoorProfile terminal_profile(const OrthoSegment& piece, const std::vector<Coord>& hx, const std::vector<Coord>& hy);

// Samples on the boundary of B(S) for a polygon terminal S, which is not an
// obstacle for its own connections.
DoorProfile polygon_profile(const RectPolygon& s, const std::vector<Coord>& hx, const std::vector<Coord>& hy);

struct DoorComposition {
    bool feasible = false;
    PathResult path;
    std::size_t events = 0;
};

// Best path leaving through src's samples and entering dst's samples, with
// the outside part swept among `obstacles`.
DoorComposition compose_through_doors(const DoorProfile& src, const DoorProfile& dst,
                                      const std::vector<RectPolygon>& obstacles);

}  // namespace mlsp
