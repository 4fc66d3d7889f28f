#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mlsp/geometry.h"

namespace mlsp {

enum class Direction : std::uint8_t { Left, Right, Up, Down };

// Static first-hit queries over axis-parallel segments in the four axis
// directions. Each direction is served by an interval-stabbing segment tree
// over the perpendicular coordinate whose nodes keep their segments sorted by
// position along the ray, giving O(log^2 n) queries.
//
// With closed containment a ray hits a perpendicular segment that it crosses
// or touches (endpoints included) and a collinear segment at its near end;
// with open containment only perpendicular segments whose relative interior
// it crosses count.
class RayShooter {
public:
    struct Hit {
        Point point;
        std::size_t segment = 0;
    };

    explicit RayShooter(std::vector<OrthoSegment> segments, bool closed = true);

    std::optional<Hit> shoot(Point origin, Direction d) const;
    const std::vector<OrthoSegment>& segments() const { return segs_; }

private:
    // Items positioned at `pos` along the ray axis covering [lo, hi] across it.
    class Stabber {
    public:
        struct Item {
            Coord pos, lo, hi;
            std::size_t id;
        };
        void build(std::vector<Item> items, bool closed);
        // Nearest item with pos > from (forward) or pos < from (backward).
        std::optional<std::pair<Coord, std::size_t>> query(Coord across, Coord from, bool forward) const;

    private:
        std::size_t slot(Coord v) const;
        void insert(std::size_t node, std::size_t nl, std::size_t nr, std::size_t l, std::size_t r,
                    std::pair<Coord, std::size_t> entry);
        std::vector<Coord> coords_;
        std::size_t slots_ = 0;
        std::vector<std::vector<std::pair<Coord, std::size_t>>> nodes_;
    };

    std::vector<OrthoSegment> segs_;
    bool closed_;
    Stabber horizontal_rays_;  // vertical segments, queried by y
    Stabber vertical_rays_;    // horizontal segments, queried by x
    // Collinear segments keyed by their near end for each ray direction.
    Stabber collinear_h_fwd_, collinear_h_bwd_;
    Stabber collinear_v_fwd_, collinear_v_bwd_;
};

// Linear-scan reference with the same semantics, used by tests.
std::optional<RayShooter::Hit> shoot_linear(const std::vector<OrthoSegment>& segs, Point origin, Direction d,
                                            bool closed = true);

}  // namespace mlsp
