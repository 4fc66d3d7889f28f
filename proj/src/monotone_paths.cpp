#include "mlsp/monotone_paths.h"

#include <algorithm>
#include <stdexcept>

namespace mlsp {

const char* alpha_name(Alpha a) {
    switch (a) {
        case Alpha::ru: return "ru";
        case Alpha::ur: return "ur";
        case Alpha::ul: return "ul";
        case Alpha::lu: return "lu";
        case Alpha::ld: return "ld";
        case Alpha::dl: return "dl";
        case Alpha::dr: return "dr";
        case Alpha::rd: return "rd";
    }
    return "?";
}

const char* region_name(Region r) {
    switch (r) {
        case Region::Dxy1: return "Dxy1";
        case Region::Dxy2: return "Dxy2";
        case Region::Dxy3: return "Dxy3";
        case Region::Dxy4: return "Dxy4";
        case Region::Dx1: return "Dx1";
        case Region::Dx2: return "Dx2";
        case Region::Dy1: return "Dy1";
        case Region::Dy2: return "Dy2";
    }
    return "?";
}

GridMap GridMap::inverse() const {
    // Orthogonal integer matrices: the inverse is the transpose.
    return {a, c, b, d};
}

GridMap GridMap::then(const GridMap& n) const {
    return {n.a * a + n.b * c, n.a * b + n.b * d, n.c * a + n.d * c, n.c * b + n.d * d};
}

GridMap GridMap::canonical(Alpha alpha) {
    switch (alpha) {
        case Alpha::ru: return {1, 0, 0, 1};
        case Alpha::ur: return {0, 1, 1, 0};
        case Alpha::lu: return {-1, 0, 0, 1};
        case Alpha::ul: return {0, 1, -1, 0};
        case Alpha::ld: return {-1, 0, 0, -1};
        case Alpha::dl: return {0, -1, -1, 0};
        case Alpha::dr: return {0, -1, 1, 0};
        case Alpha::rd: return {1, 0, 0, -1};
    }
    return {};
}

RectPolygon map_polygon(const RectPolygon& p, const GridMap& m) {
    std::vector<Point> v;
    v.reserve(p.size());
    for (const Point& q : p.vertices) v.push_back(m.apply(q));
    return normalize_polygon(std::move(v));
}

std::vector<Point> map_points(const std::vector<Point>& pts, const GridMap& m) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back(m.apply(p));
    return out;
}

Coord sentinel_for(Coord max_abs) { return 4 * (max_abs + 1); }

namespace {

// Clockwise walk from the top of the leftmost side to the left end of the
// topmost side of a rectilinear convex polygon.
std::vector<Point> upper_left_chain(const RectPolygon& p) {
    const std::size_t n = p.size();
    Rect b = bounding_box(p);
    // Counterclockwise order runs from the left end of the topmost side down
    // to the top of the leftmost side.
    std::size_t top_left = n, left_top = n;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& v = p.vertices[i];
        const Point& nx = p[i + 1];
        const Point& pv = p[i + n - 1];
        // Left end of the topmost side: on y == yhi, previous vertex to the right.
        if (v.y == b.yhi && pv.y == b.yhi && pv.x > v.x) top_left = i;
        // Top of the leftmost side: on x == xlo, next vertex below.
        if (v.x == b.xlo && nx.x == b.xlo && nx.y < v.y) left_top = i;
    }
    if (top_left == n || left_top == n) throw InvalidPolygon("polygon has no extreme sides");
    std::vector<Point> chain;
    for (std::size_t i = top_left;; i = (i + 1) % n) {
        chain.push_back(p.vertices[i]);
        if (i == left_top) break;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace

Domain::Domain(std::vector<RectPolygon> obstacles, Coord sentinel)
    : obstacles_(std::move(obstacles)), sentinel_(sentinel) {
    for (const auto& p : obstacles_) boxes_.push_back(bounding_box(p));
    order_by_xlo_.resize(boxes_.size());
    for (std::size_t i = 0; i < boxes_.size(); ++i) order_by_xlo_[i] = i;
    std::sort(order_by_xlo_.begin(), order_by_xlo_.end(),
              [&](std::size_t a, std::size_t b) { return boxes_[a].xlo < boxes_[b].xlo; });
    for (Alpha a : kAllAlphas) {
        auto f = std::make_unique<Frame>();
        f->to = GridMap::canonical(a);
        std::vector<OrthoSegment> lefts;
        for (std::size_t i = 0; i < obstacles_.size(); ++i) {
            RectPolygon q = map_polygon(obstacles_[i], f->to);
            Rect b = bounding_box(q);
            f->boxes.push_back(b);
            f->upper_left.push_back(upper_left_chain(q));
            f->by_xlo.emplace(b.xlo, i);
            lefts.push_back(OrthoSegment::between({b.xlo, b.ylo}, {b.xlo, b.yhi}));
        }
        f->shooter = std::make_unique<RayShooter>(std::move(lefts), false);
        frames_[static_cast<std::size_t>(a)] = std::move(f);
    }
}

std::vector<std::size_t> Domain::boxes_within(const Rect& r) const {
    auto it = std::lower_bound(order_by_xlo_.begin(), order_by_xlo_.end(), r.xlo,
                               [&](std::size_t i, Coord x) { return boxes_[i].xlo < x; });
    std::vector<std::size_t> out;
    for (; it != order_by_xlo_.end() && boxes_[*it].xlo <= r.xhi; ++it) {
        const Rect& b = boxes_[*it];
        if (b.xhi <= r.xhi && b.ylo >= r.ylo && b.yhi <= r.yhi) out.push_back(*it);
    }
    std::sort(out.begin(), out.end());
    return out;
}

MonotonePath Domain::trace(Point anchor, Alpha alpha) const {
    const Frame& f = frame(alpha);
    MonotonePath out;
    out.alpha = alpha;
    out.anchor = anchor;
    Point cur = f.to.apply(anchor);
    std::vector<Point> pts{cur};
    auto push = [&](Point p) {
        if (pts.back() != p) pts.push_back(p);
    };
    for (std::size_t guard = 0; guard <= obstacles_.size(); ++guard) {
        std::optional<std::pair<Point, std::size_t>> hit;
        // A start point on a box's left side shoots straight into that box.
        auto range = f.by_xlo.equal_range(cur.x);
        for (auto it = range.first; it != range.second; ++it) {
            const Rect& b = f.boxes[it->second];
            if (b.ylo < cur.y && cur.y < b.yhi) hit = std::make_pair(cur, it->second);
        }
        if (!hit) {
            if (auto h = f.shooter->shoot(cur, Direction::Right)) hit = std::make_pair(h->point, h->segment);
        }
        if (!hit) {
            push({sentinel_, cur.y});
            break;
        }
        auto [b, idx] = *hit;
        out.touched.push_back(idx);
        const std::vector<Point>& chain = f.upper_left[idx];
        const Point q = chain.front();
        push(b);
        std::size_t next = 1;
        if (q.y > b.y) {
            push(q);
        } else {
            // Vertical chain edges run from chain[i] to chain[i+1] for odd i.
            std::size_t i = 1;
            while (i + 1 < chain.size() && chain[i + 1].y <= b.y) i += 2;
            if (i + 1 >= chain.size()) throw std::logic_error("trace: hit above the upper-left chain");
            push({chain[i].x, b.y});
            next = i + 1;
        }
        for (std::size_t k = next; k < chain.size(); ++k) push(chain[k]);
        cur = chain.back();
    }
    GridMap back = f.to.inverse();
    out.polyline = simplify_polyline(map_points(pts, back));
    return out;
}

int staircase_side(const std::vector<Point>& g, Point p) {
    // Points of g with x == p.x form one vertical interval [lo, hi].
    bool found = false;
    Coord lo = 0, hi = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Point& a = g[i];
        if (i + 1 < g.size()) {
            const Point& b = g[i + 1];
            if (a.y == b.y && a.x < p.x && p.x < b.x) {
                if (!found) lo = hi = a.y, found = true;
                else lo = std::min(lo, a.y), hi = std::max(hi, a.y);
                continue;
            }
        }
        if (a.x == p.x) {
            if (!found) lo = hi = a.y, found = true;
            else lo = std::min(lo, a.y), hi = std::max(hi, a.y);
        }
        if (a.x > p.x) break;
    }
    if (!found) return -1;
    if (p.y > hi) return 1;
    if (p.y < lo) return -1;
    return 0;
}

EightPaths eight_paths(const Domain& dom, Point s, Point s_low) {
    EightPaths e;
    e.s = s;
    e.s_low = s_low;
    for (Alpha a : kAllAlphas) {
        bool downward = a == Alpha::ld || a == Alpha::dl || a == Alpha::dr || a == Alpha::rd;
        e.paths[static_cast<std::size_t>(a)] = dom.trace(downward ? s_low : s, a);
    }
    return e;
}

Region RegionLabel::preferred() const {
    if (regions.empty()) throw std::logic_error("empty region label");
    auto rank = [](Region r) {
        switch (r) {
            case Region::Dxy1: case Region::Dxy2: case Region::Dxy3: case Region::Dxy4: return 0;
            case Region::Dx1: case Region::Dx2: return 1;
            default: return 2;
        }
    };
    return *std::min_element(regions.begin(), regions.end(),
                             [&](Region a, Region b) { return std::make_pair(rank(a), a) < std::make_pair(rank(b), b); });
}

namespace {

// Side of t with respect to path a seen in the frame that makes a an
// up-right (ru-shaped) staircase.
int side_in(const EightPaths& e, Alpha a, const GridMap& m, Point t) {
    return staircase_side(map_points(e[a].polyline, m), m.apply(t));
}

}  // namespace

RegionLabel classify_point(Point t, const EightPaths& e) {
    const Point s = e.s, sl = e.s_low;
    const GridMap id = GridMap::identity(), mx = GridMap::mirror_x(), my = GridMap::mirror_y(),
                  r180 = GridMap::rotate_180(), tr = GridMap::transpose();
    RegionLabel out;
    auto add = [&](Region r, bool in) {
        if (in) out.regions.push_back(r);
    };
    // Dxy regions: the quadrant's pair of paths in the frame where the
    // quadrant is the upper-right one and the first path is ru-shaped.
    auto xy = [&](Point a, const GridMap& m, Alpha horiz, Alpha vert) {
        Point ta = m.apply(t), aa = m.apply(a);
        if (ta.x < aa.x || ta.y < aa.y) return false;
        return side_in(e, horiz, m, t) >= 0 && side_in(e, vert, m, t) <= 0;
    };
    add(Region::Dxy1, xy(s, id, Alpha::ru, Alpha::ur));
    add(Region::Dxy2, xy(s, mx, Alpha::lu, Alpha::ul));
    add(Region::Dxy3, xy(sl, r180, Alpha::ld, Alpha::dl));
    add(Region::Dxy4, xy(sl, my, Alpha::rd, Alpha::dr));

    // Dx regions: on the far side of the source, below the upward horizontal
    // path and above the downward one.
    auto below = [&](Point a, const GridMap& m, Alpha horiz) {
        Point ta = m.apply(t), aa = m.apply(a);
        if (ta.y < aa.y) return true;
        if (ta.x < aa.x) return false;
        return side_in(e, horiz, m, t) <= 0;
    };
    auto dx = [&](const GridMap& m, Alpha up, Alpha down) {
        if (m.apply(t).x < m.apply(s).x) return false;
        return below(s, m, up) && below(sl, m.then(my), down);
    };
    add(Region::Dx1, dx(id, Alpha::ru, Alpha::rd));
    add(Region::Dx2, dx(mx, Alpha::lu, Alpha::ld));

    // Dy regions by transposition: the vertical paths become horizontal.
    auto dy = [&](Point a, const GridMap& m, Alpha first, Alpha second) {
        // In frame m the region lies right of a, below path `first` and above
        // path `second` (mirrored in y).
        if (m.apply(t).x < m.apply(a).x) return false;
        return below(a, m, first) && below(a, m.then(my), second);
    };
    add(Region::Dy1, dy(s, tr, Alpha::ur, Alpha::ul));
    add(Region::Dy2, dy(sl, tr.then(mx), Alpha::dr, Alpha::dl));
    return out;
}

}  // namespace mlsp
