#include "mlsp/solver.h"

#include <algorithm>
#include <stdexcept>

#include "mlsp/monotone_paths.h"
#include "mlsp/pockets.h"
#include "mlsp/staircase.h"
#include "mlsp/x_composer.h"
#include "mlsp/xy_sweep.h"

namespace mlsp {

namespace {

std::optional<Point> segments_meet(const OrthoSegment& a, const OrthoSegment& b) {
    if (a.is_point) return b.contains(a.first()) ? std::optional<Point>(a.first()) : std::nullopt;
    if (b.is_point) return a.contains(b.first()) ? std::optional<Point>(b.first()) : std::nullopt;
    if (a.orientation != b.orientation) {
        const OrthoSegment& h = a.orientation == Orientation::Horizontal ? a : b;
        const OrthoSegment& v = a.orientation == Orientation::Horizontal ? b : a;
        Point p{v.fixed, h.fixed};
        if (h.contains(p) && v.contains(p)) return p;
        return std::nullopt;
    }
    if (a.fixed != b.fixed || a.hi < b.lo || b.hi < a.lo) return std::nullopt;
    Coord c = std::max(a.lo, b.lo);
    return a.orientation == Orientation::Horizontal ? Point{c, a.fixed} : Point{a.fixed, c};
}

std::vector<OrthoSegment> outline(const Terminal& t) {
    if (t.kind == TerminalKind::Polygon) return t.polygon.edges();
    return {t.segment};
}

struct Candidate {
    std::string region;
    std::vector<Point> polyline;  // scaled coordinates
    Coord dist = 0;
    int links = 0;
    int rank = 3;
};

int region_rank(Region r) {
    switch (r) {
        case Region::Dxy1:
        case Region::Dxy2:
        case Region::Dxy3:
        case Region::Dxy4: return 0;
        case Region::Dx1:
        case Region::Dx2: return 1;
        default: return 2;
    }
}

bool better(const Candidate& a, const Candidate& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.links != b.links) return a.links < b.links;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.polyline < b.polyline;
}

struct Piece {
    OrthoSegment segment;
    int box = -1;
    const RectPolygon* polygon = nullptr;
};

class Solver {
public:
    Solver(const Instance& scaled, const SolveOptions& opt, SolveReport& report)
        : inst_(scaled), opt_(opt), report_(report) {
        for (const RectPolygon& p : inst_.obstacles) {
            hulls_.push_back(rectilinear_convex_hull(p));
            for (const Point& v : p.vertices) hx_.push_back(v.x), hy_.push_back(v.y), max_abs_ = std::max({max_abs_, std::abs(v.x), std::abs(v.y)});
        }
        for (const Terminal* t : {&inst_.source, &inst_.target})
            for (const Point& v : t->corners())
                hx_.push_back(v.x), hy_.push_back(v.y), max_abs_ = std::max({max_abs_, std::abs(v.x), std::abs(v.y)});
        for (auto* v : {&hx_, &hy_}) {
            std::sort(v->begin(), v->end());
            v->erase(std::unique(v->begin(), v->end()), v->end());
        }
    }

    std::vector<Candidate> run() {
        std::vector<Piece> sp = pieces(inst_.source), tp = pieces(inst_.target);
        for (const Piece& a : sp)
            for (const Piece& b : tp) {
                ++report_.stats["pairs"];
                bool outside = a.box < 0 && b.box < 0 && !a.polygon && !b.polygon;
                if (outside && (a.segment.is_point || b.segment.is_point)) {
                    std::size_t before = cands_.size();
                    region_pair(a.segment, b.segment);
                    if (cands_.size() > before) continue;
                    ++report_.stats["fallback_pairs"];
                }
                general_pair(a, b);
            }
        return cands_;
    }

private:
    std::vector<Piece> pieces(const Terminal& t) const {
        if (t.kind == TerminalKind::Polygon) return {Piece{t.polygon.edges().front(), -1, &t.polygon}};
        std::vector<Piece> out;
        for (const TerminalPiece& p : split_terminal(t.segment, inst_.obstacles).pieces)
            out.push_back({p.segment, p.box, nullptr});
        return out;
    }

    void add(Candidate c, RegionCandidate& rc) {
        auto [len, links] = path_metrics(c.polyline);
        if (len != c.dist || links != c.links) {
            rc.note = "reconstructed path reports " + std::to_string(len) + "/" + std::to_string(links);
            ++report_.stats["metric_mismatches"];
            c.dist = len;
            c.links = links;
        }
        rc.ok = true;
        rc.dist = c.dist;
        rc.links = c.links;
        cands_.push_back(std::move(c));
    }

    // Both pieces avoid every bounding box and one of them is a point: the
    // region-wise pipeline over rectilinear convex hulls.
    void region_pair(OrthoSegment s, OrthoSegment t) {
        bool reversed = false;
        if (!t.is_point) {
            std::swap(s, t);
            reversed = true;
        }
        GridMap outer = GridMap::identity();
        if (!s.is_point && s.orientation == Orientation::Horizontal) outer = GridMap::transpose();
        std::vector<RectPolygon> obs;
        for (const RectPolygon& h : hulls_) obs.push_back(map_polygon(h, outer));
        Point a = outer.apply(s.first()), b = outer.apply(s.second());
        Point hi = std::max(a, b, [](Point p, Point q) { return p.y < q.y; });
        Point lo = std::min(a, b, [](Point p, Point q) { return p.y < q.y; });
        Point tt = outer.apply(t.first());
        Coord sentinel = sentinel_for(max_abs_);
        Domain dom(obs, sentinel);
        RegionLabel label = classify_point(tt, eight_paths(dom, hi, lo));
        std::vector<Region> regions = label.regions;
        if (!opt_.all_regions) regions = {label.preferred()};
        std::stable_sort(regions.begin(), regions.end(),
                         [](Region x, Region y) { return region_rank(x) < region_rank(y); });
        for (Region r : regions) {
            RegionCandidate rc;
            rc.region = region_name(r);
            try {
                Candidate c = solve_region(r, obs, sentinel, hi, lo, tt);
                for (Point& p : c.polyline) p = outer.inverse().apply(p);
                if (reversed) std::reverse(c.polyline.begin(), c.polyline.end());
                c.region = rc.region;
                c.rank = region_rank(r);
                add(std::move(c), rc);
            } catch (const std::exception& e) {
                rc.note = e.what();
            }
            report_.breakdown.push_back(rc);
        }
    }

    Candidate solve_region(Region r, const std::vector<RectPolygon>& obs, Coord sentinel, Point hi, Point lo,
                           Point t) {
        GridMap m;
        Point a = hi, a_low = lo;
        bool xy = true;
        switch (r) {
            case Region::Dxy1: m = GridMap::identity(); break;
            case Region::Dxy2: m = GridMap::mirror_x(); break;
            case Region::Dxy3: m = GridMap::rotate_180(), a = lo; break;
            case Region::Dxy4: m = GridMap::mirror_y(), a = lo; break;
            case Region::Dx1: m = GridMap::identity(), xy = false; break;
            case Region::Dx2: m = GridMap::mirror_x(), xy = false; break;
            case Region::Dy1: m = GridMap::transpose(), a_low = hi, xy = false; break;
            case Region::Dy2: m = GridMap{0, -1, 1, 0}, a = lo, xy = false; break;
        }
        std::vector<RectPolygon> mobs;
        for (const RectPolygon& p : obs) mobs.push_back(map_polygon(p, m));
        Domain dom(mobs, sentinel);
        Candidate c;
        if (xy) {
            StaircaseRegion reg = build_staircase_region(dom, m.apply(a), m.apply(t));
            SweepOptions so;
            so.use_tree = opt_.use_tree;
            so.debug_log = opt_.debug_events;
            LinkCountResult res = sweep_min_links(reg, so);
            report_.stats["events"] += static_cast<std::int64_t>(res.events.size());
            ++report_.stats["sweeps"];
            for (std::string& line : res.log) report_.event_log.push_back(std::move(line));
            c.polyline = map_points(reconstruct_path(reg, res).polyline, m.inverse());
            c.dist = l1(a, t);
            c.links = res.lambda;
        } else {
            ComposeOptions co;
            co.use_tree = opt_.use_tree;
            ComposeResult res = compose_min_link_path(dom, m.apply(a), m.apply(a_low), m.apply(t), co);
            report_.stats["events"] += static_cast<std::int64_t>(res.events);
            report_.stats["sweeps"] += static_cast<std::int64_t>(res.sweeps);
            report_.stats["fallback_sweeps"] += res.fallbacks;
            c.polyline = map_points(res.path.polyline, m.inverse());
            c.dist = res.dist;
            c.links = res.lambda;
        }
        return c;
    }

    std::optional<Pocket> pocket(const Piece& p) const {
        if (p.box < 0) return std::nullopt;
        return pocket_of(p.segment, inst_.obstacles[static_cast<std::size_t>(p.box)],
                         static_cast<std::size_t>(p.box));
    }

    std::vector<DoorProfile> profiles(const Piece& p, const std::optional<Pocket>& pk) const {
        if (p.polygon) return {polygon_profile(*p.polygon, hx_, hy_)};
        if (!pk) return {terminal_profile(p.segment, hx_, hy_)};
        std::vector<DoorProfile> out;
        for (const OrthoSegment& d : pk->doors()) out.push_back(door_profile(p.segment, *pk, d, hx_, hy_));
        return out;
    }

    // Pockets, box-piercing segments, two segments or polygon terminals.
    void general_pair(const Piece& a, const Piece& b) {
        std::optional<Pocket> pa = pocket(a), pb = pocket(b);
        if (pa && pb && pa->host == pb->host && pa->polygon == pb->polygon) {
            RegionCandidate rc;
            rc.region = "pocket";
            std::vector<Coord> xs = hx_, ys = hy_;
            for (const OrthoSegment* s : {&a.segment, &b.segment})
                for (Point p : {s->first(), s->second()}) xs.push_back(p.x), ys.push_back(p.y);
            RegionGrid g(pa->polygon, xs, ys);
            g.run({a.segment});
            Candidate best;
            bool found = false;
            for (const Point& q : g.nodes_on(b.segment)) {
                RegionGrid::Cost cost = g.cost(q);
                if (!cost.finite()) continue;
                Candidate c{"pocket", g.path_to(q), cost.dist, cost.links, 3};
                if (!found || better(c, best)) best = std::move(c), found = true;
            }
            if (found) add(std::move(best), rc);
            else rc.note = "no grid path inside the pocket";
            report_.breakdown.push_back(rc);
            return;
        }
        for (const DoorProfile& src : profiles(a, pa))
            for (const DoorProfile& dst : profiles(b, pb)) {
                RegionCandidate rc;
                rc.region = "doors";
                DoorComposition dc = compose_through_doors(src, dst, inst_.obstacles);
                report_.stats["events"] += static_cast<std::int64_t>(dc.events);
                report_.stats["sweeps"] += 4;
                if (dc.feasible) add(Candidate{"doors", dc.path.polyline, dc.path.length, dc.path.links, 3}, rc);
                else rc.note = "doors unreachable";
                report_.breakdown.push_back(rc);
            }
    }

    const Instance& inst_;
    const SolveOptions& opt_;
    SolveReport& report_;
    std::vector<RectPolygon> hulls_;
    std::vector<Coord> hx_, hy_;
    Coord max_abs_ = 0;
    std::vector<Candidate> cands_;
};

}  // namespace

std::optional<Point> common_point(const Terminal& a, const Terminal& b) {
    for (const OrthoSegment& x : outline(a))
        for (const OrthoSegment& y : outline(b))
            if (auto p = segments_meet(x, y)) return p;
    // One terminal strictly inside a polygon terminal.
    if (a.kind == TerminalKind::Polygon && locate(a.polygon, b.corners().front()) == Location::Inside)
        return b.corners().front();
    if (b.kind == TerminalKind::Polygon && locate(b.polygon, a.corners().front()) == Location::Inside)
        return a.corners().front();
    return std::nullopt;
}

SolveReport solve(const Instance& inst, const SolveOptions& opt) {
    SolveReport report;
    std::int64_t n = 0;
    for (const RectPolygon& p : inst.obstacles) n += static_cast<std::int64_t>(p.size());
    report.stats["n"] = n;
    report.stats["N"] = static_cast<std::int64_t>(inst.source.corners().size() + inst.target.corners().size());
    report.stats["events"] = 0;
    report.stats["sweeps"] = 0;
    if (auto p = common_point(inst.source, inst.target)) {
        report.path.polyline = {*p};
        report.chosen = "overlap";
        return report;
    }
    ScaledInstance scaled = scale_by_two(inst);
    Solver solver(scaled.instance, opt, report);
    std::vector<Candidate> cands = solver.run();
    if (cands.empty()) throw std::logic_error("no candidate path found");
    const Candidate* best = &cands.front();
    for (const Candidate& c : cands)
        if (better(c, *best)) best = &c;
    report.chosen = best->region;
    for (const Point& p : best->polyline) {
        if (p.x % 2 != 0 || p.y % 2 != 0) throw std::logic_error("path vertex " + to_string(p) + " is off the input grid");
        report.path.polyline.push_back({p.x / 2, p.y / 2});
    }
    auto [len, links] = path_metrics(report.path.polyline);
    report.path.length = len;
    report.path.links = links;
    return report;
}

PolygonTerminalIndex PolygonTerminalIndex::build(const RectPolygon& p) {
    return PolygonTerminalIndex{p, bounding_box(p), p.edges()};
}

std::pair<Coord, Point> nearest_on_terminal(const PolygonTerminalIndex& index, Point s) {
    if (locate(index.polygon, s) != Location::Outside) return {0, s};
    Coord best = -1;
    Point at;
    for (const OrthoSegment& e : index.edges) {
        Point q = e.orientation == Orientation::Horizontal ? Point{std::clamp(s.x, e.lo, e.hi), e.fixed}
                                                          : Point{e.fixed, std::clamp(s.y, e.lo, e.hi)};
        Coord d = l1(s, q);
        if (best < 0 || d < best || (d == best && q < at)) best = d, at = q;
    }
    return {best, at};
}

}  // namespace mlsp
