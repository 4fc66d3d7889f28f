#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mlsp {

using Coord = std::int64_t;

// Inputs are bounded by this magnitude so that doubled coordinates and long
// length sums stay far inside int64.
inline constexpr Coord kMaxInputCoord = Coord{1} << 30;

struct Point {
    Coord x = 0;
    Coord y = 0;
    auto operator<=>(const Point&) const = default;
};

inline Coord l1(const Point& a, const Point& b) {
    return (a.x > b.x ? a.x - b.x : b.x - a.x) + (a.y > b.y ? a.y - b.y : b.y - a.y);
}

enum class Orientation : std::uint8_t { Horizontal, Vertical };

// Axis-parallel segment. A horizontal segment has y == fixed and spans x in
// [lo, hi]; a vertical one has x == fixed and spans y in [lo, hi].
struct OrthoSegment {
    Orientation orientation = Orientation::Horizontal;
    Coord fixed = 0;
    Coord lo = 0;
    Coord hi = 0;
    bool is_point = false;

    static OrthoSegment point(Point p);
    // Builds a segment from two endpoints that share a coordinate.
    static OrthoSegment between(Point a, Point b);

    Point first() const;
    Point second() const;
    Coord length() const { return hi - lo; }
    bool contains(const Point& p) const;
    auto operator<=>(const OrthoSegment&) const = default;
};

struct Rect {
    Coord xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool contains_open(const Point& p) const { return p.x > xlo && p.x < xhi && p.y > ylo && p.y < yhi; }
    bool contains_closed(const Point& p) const {
        return p.x >= xlo && p.x <= xhi && p.y >= ylo && p.y <= yhi;
    }
    bool interiors_overlap(const Rect& o) const {
        return xlo < o.xhi && o.xlo < xhi && ylo < o.yhi && o.ylo < yhi;
    }
    auto operator<=>(const Rect&) const = default;
};

// Simple rectilinear polygon, vertices in counterclockwise order, no
// collinear consecutive vertices.
struct RectPolygon {
    std::vector<Point> vertices;

    static RectPolygon from_rect(const Rect& r);
    std::size_t size() const { return vertices.size(); }
    const Point& operator[](std::size_t i) const { return vertices[i % vertices.size()]; }
    std::vector<OrthoSegment> edges() const;
    bool operator==(const RectPolygon&) const = default;
};

struct PathResult {
    std::vector<Point> polyline;
    Coord length = 0;
    int links = 0;
};

class MalformedPath : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPolygon : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact L1 length and number of maximal segments. Zero-length steps are
// dropped and collinear runs merged; a single point has zero links.
std::pair<Coord, int> path_metrics(const std::vector<Point>& polyline);

// Removes repeated points and collinear interior vertices.
std::vector<Point> simplify_polyline(const std::vector<Point>& polyline);

Rect bounding_box(const RectPolygon& p);

// Removes collinear vertices, rotates so the lexicographically smallest vertex
// comes first and fixes counterclockwise orientation. Throws InvalidPolygon if
// the cycle is not rectilinear or has fewer than four corners.
RectPolygon normalize_polygon(std::vector<Point> vertices);

// Twice the signed area (positive for counterclockwise).
Coord twice_signed_area(const std::vector<Point>& vertices);

bool is_simple(const RectPolygon& p);

enum class Location : std::uint8_t { Outside, Boundary, Inside };
Location locate(const RectPolygon& p, const Point& q);

// Location of the point (x2/2, y2/2) given in doubled coordinates.
Location locate_doubled(const RectPolygon& p, Coord x2, Coord y2);

// True if every axis-parallel line meets p in at most one interval.
bool is_rectilinear_convex(const RectPolygon& p);

RectPolygon rectilinear_convex_hull(const RectPolygon& p);

// Inside/outside labelling of the cells of the grid spanned by a polygon's
// own coordinates, plus the reverse conversion from cell sets to polygons.
struct CellGrid {
    std::vector<Coord> xs, ys;
    std::vector<std::uint8_t> inside;  // (xs.size()-1) * (ys.size()-1), row-major by y
    std::size_t cols() const { return xs.size() - 1; }
    std::size_t rows() const { return ys.size() - 1; }
    bool at(std::size_t cx, std::size_t cy) const { return inside[cy * cols() + cx] != 0; }
    void set(std::size_t cx, std::size_t cy, bool v) { inside[cy * cols() + cx] = v ? 1 : 0; }

    static CellGrid of_polygon(const RectPolygon& p);
    static CellGrid of_polygon(const RectPolygon& p, std::vector<Coord> xs, std::vector<Coord> ys);
};

// Boundary cycles of the marked cells (each cycle counterclockwise around the
// marked region, simplified). Cells touching only at a corner produce
// separate cycles.
std::vector<std::vector<Point>> cell_boundaries(const CellGrid& g);

std::string to_string(const Point& p);

}  // namespace mlsp
