#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mlsp/geometry.h"
#include "mlsp/ray_shooter.h"

namespace mlsp {

// Direction pair of a monotone path: first direction, then second.
enum class Alpha : std::uint8_t { ru, ur, ul, lu, ld, dl, dr, rd };
inline constexpr std::array<Alpha, 8> kAllAlphas{Alpha::ru, Alpha::ur, Alpha::ul, Alpha::lu,
                                                 Alpha::ld, Alpha::dl, Alpha::dr, Alpha::rd};
const char* alpha_name(Alpha a);

// One of the eight axis-preserving isometries of the integer grid, applied as
// x' = a*x + b*y, y' = c*x + d*y.
struct GridMap {
    int a = 1, b = 0, c = 0, d = 1;
    Point apply(Point p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
    GridMap inverse() const;
    GridMap then(const GridMap& next) const;
    bool flips_orientation() const { return a * d - b * c < 0; }

    static GridMap identity() { return {}; }
    static GridMap mirror_x() { return {-1, 0, 0, 1}; }
    static GridMap mirror_y() { return {1, 0, 0, -1}; }
    static GridMap rotate_180() { return {-1, 0, 0, -1}; }
    static GridMap transpose() { return {0, 1, 1, 0}; }
    // Maps the first direction of alpha to +x and the second to +y.
    static GridMap canonical(Alpha alpha);
};

RectPolygon map_polygon(const RectPolygon& p, const GridMap& m);
std::vector<Point> map_points(const std::vector<Point>& pts, const GridMap& m);

struct MonotonePath {
    Alpha alpha = Alpha::ru;
    Point anchor;
    // Starts at the anchor; the last point lies on the sentinel frame.
    std::vector<Point> polyline;
    // Obstacles whose bounding box a ray of the path ran into, in order.
    std::vector<std::size_t> touched;
};

// Rectilinear-convex obstacles with the ray shooters needed to trace monotone
// paths in all eight direction pairs.
class Domain {
public:
    Domain(std::vector<RectPolygon> obstacles, Coord sentinel);

    MonotonePath trace(Point anchor, Alpha alpha) const;

    const std::vector<RectPolygon>& obstacles() const { return obstacles_; }
    const std::vector<Rect>& boxes() const { return boxes_; }
    Coord sentinel() const { return sentinel_; }
    // Obstacles whose bounding box lies inside r (closed).
    std::vector<std::size_t> boxes_within(const Rect& r) const;

private:
    struct Frame {
        GridMap to;
        std::vector<Rect> boxes;
        // Per obstacle: from the top of the leftmost side clockwise to the left
        // end of the topmost side.
        std::vector<std::vector<Point>> upper_left;
        std::multimap<Coord, std::size_t> by_xlo;
        std::unique_ptr<RayShooter> shooter;
    };
    const Frame& frame(Alpha a) const { return *frames_[static_cast<std::size_t>(a)]; }

    std::vector<RectPolygon> obstacles_;
    std::vector<Rect> boxes_;
    Coord sentinel_;
    std::vector<std::size_t> order_by_xlo_;
    std::array<std::unique_ptr<Frame>, 8> frames_;
};

// Sentinel coordinate for an instance whose coordinates are bounded by max_abs.
Coord sentinel_for(Coord max_abs);

// Side of p relative to an up-right monotone polyline starting at its first
// point, for p in the closed upper-right quadrant of that point: +1 strictly
// above-left, -1 strictly below-right, 0 on the polyline.
int staircase_side(const std::vector<Point>& up_right, Point p);

struct EightPaths {
    Point s, s_low;  // upper and lower endpoint of a vertical source
    std::array<MonotonePath, 8> paths;
    const MonotonePath& operator[](Alpha a) const { return paths[static_cast<std::size_t>(a)]; }
};

// Upward paths from s, downward paths from s_low.
EightPaths eight_paths(const Domain& dom, Point s, Point s_low);

enum class Region : std::uint8_t { Dxy1, Dxy2, Dxy3, Dxy4, Dx1, Dx2, Dy1, Dy2 };
const char* region_name(Region r);

// Regions containing t, each taken as a closed set. More than one entry means
// t lies on a separating path.
struct RegionLabel {
    std::vector<Region> regions;
    bool on_boundary() const { return regions.size() > 1; }
    // xy regions over x regions over y regions.
    Region preferred() const;
};

RegionLabel classify_point(Point t, const EightPaths& paths);

}  // namespace mlsp
