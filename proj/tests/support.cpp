#include "support.h"

#include "mlsp/link_tree.h"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <tuple>

namespace mlsp::testing {

Coord max_abs(const Instance& inst) {
    Coord m = 0;
    auto see = [&](Point p) { m = std::max({m, p.x < 0 ? -p.x : p.x, p.y < 0 ? -p.y : p.y}); };
    for (const RectPolygon& p : inst.obstacles)
        for (Point v : p.vertices) see(v);
    for (Point c : inst.source.corners()) see(c);
    for (Point c : inst.target.corners()) see(c);
    return m;
}

bool path_is_free(const std::vector<Point>& polyline, const std::vector<RectPolygon>& obstacles) {
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        Point a = polyline[i], b = polyline[i + 1];
        if (a.x != b.x && a.y != b.y) return false;
        OrthoSegment seg = a == b ? OrthoSegment::point(a) : OrthoSegment::between(a, b);
        for (const RectPolygon& p : obstacles)
            if (meets_interior(p, seg)) return false;
    }
    return true;
}

bool on_terminal(const Terminal& t, Point p) {
    if (t.kind == TerminalKind::Polygon) return locate(t.polygon, p) != Location::Outside;
    return t.segment.contains(p);
}

std::string check_against_oracle(const Instance& inst, const PathResult& path, const OracleAnswer& oracle) {
    if (path.polyline.empty()) return "empty path";
    if (path.length != oracle.dist || path.links != oracle.min_links)
        return "solver " + std::to_string(path.length) + "/" + std::to_string(path.links) + " oracle " +
               std::to_string(oracle.dist) + "/" + std::to_string(oracle.min_links);
    if (!path_is_free(path.polyline, inst.obstacles)) return "path crosses an obstacle";
    auto [len, links] = path_metrics(path.polyline);
    if (len != path.length || links != path.links) return "reported metrics differ from the polyline";
    if (!on_terminal(inst.source, path.polyline.front())) return "path does not start on the source";
    if (!on_terminal(inst.target, path.polyline.back())) return "path does not end on the target";
    return {};
}

bool up_right_monotone(const std::vector<Point>& polyline) {
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i)
        if (polyline[i + 1].x < polyline[i].x || polyline[i + 1].y < polyline[i].y) return false;
    return true;
}

bool aligned(const std::vector<Point>& polyline, const std::vector<Coord>& xs, const std::vector<Coord>& ys) {
    std::vector<Point> p = simplify_polyline(polyline);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i].y == p[i + 1].y) {
            if (!std::binary_search(ys.begin(), ys.end(), p[i].y)) return false;
        } else if (!std::binary_search(xs.begin(), xs.end(), p[i].x)) {
            return false;
        }
    }
    return true;
}

std::pair<std::vector<Coord>, std::vector<Coord>> baseline_coords(const Instance& inst) {
    std::vector<Coord> xs, ys;
    auto see = [&](Point p) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    };
    for (const RectPolygon& p : inst.obstacles)
        for (Point v : p.vertices) see(v);
    for (Point c : inst.source.corners()) see(c);
    for (Point c : inst.target.corners()) see(c);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    return {xs, ys};
}

GridMap region_frame(Region r) {
    switch (r) {
        case Region::Dxy1: return GridMap::identity();
        case Region::Dxy2: return GridMap::mirror_x();
        case Region::Dxy3: return GridMap::rotate_180();
        case Region::Dxy4: return GridMap::mirror_y();
        case Region::Dx1: return GridMap::identity();
        case Region::Dx2: return GridMap::mirror_x();
        case Region::Dy1: return GridMap::transpose();
        case Region::Dy2: return GridMap{0, -1, 1, 0};
    }
    return GridMap::identity();
}

std::optional<FramedPair> frame_point_pair(const Instance& inst) {
    if (!inst.source.is_point() || !inst.target.is_point()) return std::nullopt;
    Point s = inst.source.segment.first(), t = inst.target.segment.first();
    Coord sentinel = sentinel_for(max_abs(inst));
    Domain dom(inst.obstacles, sentinel);
    RegionLabel label = classify_point(t, eight_paths(dom, s, s));
    FramedPair out;
    out.region = label.preferred();
    out.map = region_frame(out.region);
    for (const RectPolygon& p : inst.obstacles) out.obstacles.push_back(map_polygon(p, out.map));
    out.s = out.map.apply(s);
    out.t = out.map.apply(t);
    out.sentinel = sentinel;
    return out;
}

std::optional<Instance> try_generate(const GenOptions& opt) {
    try {
        return generate_instance(opt);
    } catch (const GenerationFailure&) {
        return std::nullopt;
    }
}

std::vector<OrthoSegment> boundary_segments(const std::vector<RectPolygon>& obstacles) {
    std::vector<OrthoSegment> out;
    for (const RectPolygon& p : obstacles)
        for (const OrthoSegment& e : p.edges()) out.push_back(e);
    return out;
}



namespace {

constexpr Coord kUnreached = -1;

void sort_unique(std::vector<Coord>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ClippedOracle::ClippedOracle(RectPolygon region, std::vector<Coord> xs, std::vector<Coord> ys)
    : region_(std::move(region)) {
    Rect b = bounding_box(region_);
    for (Point v : region_.vertices) {
        xs.push_back(v.x);
        ys.push_back(v.y);
    }
    std::erase_if(xs, [&](Coord x) { return x < b.xlo || x > b.xhi; });
    std::erase_if(ys, [&](Coord y) { return y < b.ylo || y > b.yhi; });
    sort_unique(xs);
    sort_unique(ys);
    xs_ = std::move(xs);
    ys_ = std::move(ys);
}

void ClippedOracle::run(const std::vector<Point>& sources) {
    const std::size_t nx = xs_.size(), ny = ys_.size();
    best_.assign(nx * ny * 3, {kUnreached, 0});
    using Item = std::tuple<Coord, int, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (Point s : sources) {
        auto ix = std::lower_bound(xs_.begin(), xs_.end(), s.x);
        auto iy = std::lower_bound(ys_.begin(), ys_.end(), s.y);
        if (ix == xs_.end() || *ix != s.x || iy == ys_.end() || *iy != s.y) continue;
        std::size_t st = id(static_cast<std::size_t>(ix - xs_.begin()), static_cast<std::size_t>(iy - ys_.begin())) * 3;
        best_[st] = {0, 0};
        pq.push({0, 0, st});
    }
    while (!pq.empty()) {
        auto [d, l, st] = pq.top();
        pq.pop();
        if (best_[st] != std::pair<Coord, int>{d, l}) continue;
        std::size_t node = st / 3, state = st % 3;
        std::size_t i = node % nx, j = node / nx;
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            long ni = static_cast<long>(i) + di[k], nj = static_cast<long>(j) + dj[k];
            if (ni < 0 || nj < 0 || ni >= static_cast<long>(nx) || nj >= static_cast<long>(ny)) continue;
            auto ui = static_cast<std::size_t>(ni), uj = static_cast<std::size_t>(nj);
            if (locate_doubled(region_, xs_[i] + xs_[ui], ys_[j] + ys_[uj]) == Location::Outside) continue;
            std::size_t ns = k < 2 ? 1 : 2;
            Coord nd = d + (k < 2 ? (xs_[i] > xs_[ui] ? xs_[i] - xs_[ui] : xs_[ui] - xs_[i])
                                  : (ys_[j] > ys_[uj] ? ys_[j] - ys_[uj] : ys_[uj] - ys_[j]));
            int nl = l + (state == ns ? 0 : 1);
            std::size_t nst = id(ui, uj) * 3 + ns;
            auto& cur = best_[nst];
            if (cur.first == kUnreached || std::pair<Coord, int>{nd, nl} < cur) {
                cur = {nd, nl};
                pq.push({nd, nl, nst});
            }
        }
    }
}

ClippedOracle::Cost ClippedOracle::cost(Point p, int last) const {
    auto ix = std::lower_bound(xs_.begin(), xs_.end(), p.x);
    auto iy = std::lower_bound(ys_.begin(), ys_.end(), p.y);
    if (ix == xs_.end() || *ix != p.x || iy == ys_.end() || *iy != p.y) return {};
    std::size_t node = id(static_cast<std::size_t>(ix - xs_.begin()), static_cast<std::size_t>(iy - ys_.begin()));
    std::pair<Coord, int> any{kUnreached, 0};
    for (std::size_t s = 0; s < 3; ++s) {
        auto c = best_[node * 3 + s];
        if (c.first != kUnreached && (any.first == kUnreached || c < any)) any = c;
    }
    if (last == 0 || any.first == kUnreached) return {any.first, any.second};
    auto c = best_[node * 3 + static_cast<std::size_t>(last)];
    if (c.first != any.first) return {};
    return {c.first, c.second};
}

std::vector<Point> ClippedOracle::nodes_on(const OrthoSegment& s) const {
    std::vector<Point> out;
    for (Coord x : xs_)
        for (Coord y : ys_)
            if (s.contains({x, y})) out.push_back({x, y});
    return out;
}

}  // namespace mlsp::testing

namespace mlsp::testing {

std::vector<PocketCase> pocket_cases(const Instance& inst) {
    std::vector<PocketCase> out;
    auto [xs, ys] = baseline_coords(inst);
    for (const Terminal* t : {&inst.source, &inst.target}) {
        if (t->kind == TerminalKind::Polygon) continue;
        for (const TerminalPiece& piece : split_terminal(t->segment, inst.obstacles).pieces) {
            if (piece.box < 0) continue;
            auto box = static_cast<std::size_t>(piece.box);
            Pocket pocket = pocket_of(piece.segment, inst.obstacles[box], box);
            for (const OrthoSegment& door : pocket.doors())
                out.push_back({piece.segment, pocket, door, door_profile(piece.segment, pocket, door, xs, ys)});
        }
    }
    return out;
}

std::string check_pocket_case(const PocketCase& c, const Instance& inst) {
    auto [xs, ys] = baseline_coords(inst);
    for (Point p : {c.piece.first(), c.piece.second(), c.door.first(), c.door.second()}) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    ClippedOracle oracle(c.pocket.polygon, xs, ys);
    std::vector<Point> piece_nodes = oracle.nodes_on(c.piece);
    oracle.run(piece_nodes);
    const DoorProfile& prof = c.profile;
    std::vector<Point> door_nodes = oracle.nodes_on(c.door);
    if (door_nodes.size() != prof.samples.size()) return "sample count differs from the door's grid nodes";
    auto as_links = [](ClippedOracle::Cost k) { return k.dist < 0 ? kInfLinks : k.links; };
    for (const DoorSample& s : prof.samples) {
        ClippedOracle::Cost any = oracle.cost(s.v);
        if (any.dist != s.dist || any.links != s.links_any) return "sample cost differs from the clipped oracle";
        if (as_links(oracle.cost(s.v, 1)) != s.links_h || as_links(oracle.cost(s.v, 2)) != s.links_v)
            return "oriented link count differs from the clipped oracle";
    }
    if (prof.direct) return {};
    if (!prof.unique_closest) return "neither direct nor a closest pair";

    // Closest pairs over (piece node, door node), one source at a time.
    Coord best = -1;
    std::vector<std::pair<Point, Point>> pairs;
    for (Point a : piece_nodes) {
        ClippedOracle single(c.pocket.polygon, xs, ys);
        single.run({a});
        for (Point v : door_nodes) {
            Coord d = single.cost(v).dist;
            if (d < 0) continue;
            if (best < 0 || d < best) {
                best = d;
                pairs.clear();
            }
            if (d == best) pairs.emplace_back(a, v);
        }
    }
    if (pairs.size() != 1) return std::to_string(pairs.size()) + " closest pairs without a straight link";
    if (pairs.front() != *prof.unique_closest) return "closest pair differs from the clipped oracle";

    Point star = prof.unique_closest->second;
    const DoorSample* at_star = nullptr;
    for (const DoorSample& s : prof.samples)
        if (s.v == star) at_star = &s;
    if (!at_star) return "closest door point is not a sample";
    for (const DoorSample& s : prof.samples) {
        if (s.dist - l1(s.v, star) != at_star->dist) return "distance is not affine along the door";
        int off = prof.crossing_links(s) - prof.crossing_links(*at_star);
        if (off < 0 || off > 2) return "crossing-link offset " + std::to_string(off);
    }
    return {};
}

}  // namespace mlsp::testing

namespace mlsp::testing {

WinderAudit audit_winders(const std::vector<Point>& polyline, const std::vector<RectPolygon>& obstacles) {
    WinderAudit out;
    std::vector<Point> p = simplify_polyline(polyline);
    for (std::size_t i = 1; i + 2 < p.size(); ++i) {
        if (p[i].y != p[i + 1].y) continue;
        Coord before = p[i].y - p[i - 1].y, after = p[i + 2].y - p[i + 1].y;
        if ((before > 0) == (after > 0)) continue;
        ++out.winders;
        Coord lo = std::min(p[i].x, p[i + 1].x), hi = std::max(p[i].x, p[i + 1].x);
        bool found = false;
        for (const RectPolygon& poly : obstacles)
            for (const OrthoSegment& e : poly.edges())
                if (e.orientation == Orientation::Horizontal && e.fixed == p[i].y && lo <= e.lo && e.hi <= hi) found = true;
        if (!found) ++out.violations;
    }
    return out;
}

namespace {

struct QuadrantPair {
    GridMap frame;
    Alpha horizontal, vertical;
};

const QuadrantPair kQuadrants[] = {
    {GridMap::identity(), Alpha::ru, Alpha::ur},
    {GridMap::mirror_x(), Alpha::lu, Alpha::ul},
    {GridMap::rotate_180(), Alpha::ld, Alpha::dl},
    {GridMap::mirror_y(), Alpha::rd, Alpha::dr},
};

}  // namespace

bool quadrant_pairs_do_not_cross(const EightPaths& e) {
    for (const QuadrantPair& q : kQuadrants) {
        auto low = map_points(e[q.horizontal].polyline, q.frame);
        for (Point v : map_points(e[q.vertical].polyline, q.frame))
            if (staircase_side(low, v) < 0) return false;
    }
    return true;
}

}  // namespace mlsp::testing
