#include "mlsp/staircase.h"

#include <algorithm>

namespace mlsp {

const char* event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::Originate: return "originate";
        case EventKind::Seed: return "seed";
        case EventKind::Attach: return "attach";
        case EventKind::Expose: return "expose";
        case EventKind::Merge: return "merge";
        case EventKind::Split: return "split";
        case EventKind::Detach: return "detach";
        case EventKind::Retract: return "retract";
        case EventKind::Read: return "read";
        case EventKind::Terminate: return "terminate";
    }
    return "?";
}

bool event_before(const SweepEvent& a, const SweepEvent& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.alpha < b.alpha;
}

std::size_t StaircaseRegion::index_of(Coord y) const {
    auto it = std::lower_bound(baselines.begin(), baselines.end(), y);
    if (it == baselines.end() || *it != y) throw std::logic_error("no baseline at y = " + std::to_string(y));
    return static_cast<std::size_t>(it - baselines.begin());
}

bool StaircaseRegion::strictly_inside(Point p) const {
    return staircase_side(lower, p) == 1 && staircase_side(upper, p) == -1;
}

bool StaircaseRegion::in_outline(Point p) const {
    if (p.x < s.x || p.x > t.x || p.y < s.y || p.y > t.y) return false;
    int lo = p.x == t.x ? (p.y <= t.y ? 1 : -1) : staircase_side(lower, p);
    int up = staircase_side(upper, p);
    if (p == s || p == t) return true;
    return lo >= 0 && up <= 0;
}

std::optional<Point> last_common_point(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::optional<Point> best;
    auto consider = [&](Point lo1, Point hi1, Point lo2, Point hi2) {
        Coord xl = std::max(std::min(lo1.x, hi1.x), std::min(lo2.x, hi2.x));
        Coord xh = std::min(std::max(lo1.x, hi1.x), std::max(lo2.x, hi2.x));
        Coord yl = std::max(std::min(lo1.y, hi1.y), std::min(lo2.y, hi2.y));
        Coord yh = std::min(std::max(lo1.y, hi1.y), std::max(lo2.y, hi2.y));
        if (xl > xh || yl > yh) return;
        Point p{xh, yh};
        if (!best || *best < p) best = p;
    };
    if (a.size() == 1 || b.size() == 1) {
        // Degenerate polylines: compare as points against segments.
        const auto& pt = a.size() == 1 ? a : b;
        const auto& pl = a.size() == 1 ? b : a;
        if (pl.size() == 1) {
            if (pt[0] == pl[0]) best = pt[0];
            return best;
        }
        for (std::size_t j = 0; j + 1 < pl.size(); ++j) consider(pt[0], pt[0], pl[j], pl[j + 1]);
        return best;
    }
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        Coord x0 = a[i].x, x1 = a[i + 1].x;
        // First segment of b whose end reaches x0.
        std::size_t lo = 0, hi = b.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (b[mid + 1].x < x0) lo = mid + 1;
            else hi = mid;
        }
        for (std::size_t j = lo; j + 1 < b.size() && b[j].x <= x1; ++j) consider(a[i], a[i + 1], b[j], b[j + 1]);
    }
    return best;
}

std::vector<Point> polyline_prefix(const std::vector<Point>& p, Point until) {
    std::vector<Point> out{p.front()};
    if (p.front() == until) return out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (OrthoSegment::between(p[i], p[i + 1]).contains(until)) {
            out.push_back(until);
            return simplify_polyline(out);
        }
        out.push_back(p[i + 1]);
    }
    throw std::logic_error("polyline_prefix: point not on polyline");
}

namespace {

std::vector<Point> join_at(const std::vector<Point>& from_s, const std::vector<Point>& from_t, Point c) {
    std::vector<Point> a = polyline_prefix(from_s, c);
    std::vector<Point> b = polyline_prefix(from_t, c);
    std::reverse(b.begin(), b.end());
    a.insert(a.end(), b.begin() + 1, b.end());
    return simplify_polyline(a);
}

struct VerticalEdge {
    Coord x, lo, hi;
};

std::vector<VerticalEdge> chain_verticals(const std::vector<Point>& chain) {
    std::vector<VerticalEdge> out;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i].x == chain[i + 1].x && chain[i].y != chain[i + 1].y)
            out.push_back({chain[i].x, std::min(chain[i].y, chain[i + 1].y), std::max(chain[i].y, chain[i + 1].y)});
    return out;
}

}  // namespace

StaircaseRegion build_staircase_region(const Domain& dom, Point s, Point t) {
    if (t.x < s.x || t.y < s.y) throw RegionPrecondition("target is not upper-right of the source");
    StaircaseRegion r;
    r.s = s;
    r.t = t;
    MonotonePath ur = dom.trace(s, Alpha::ur), ru = dom.trace(s, Alpha::ru);
    MonotonePath ld = dom.trace(t, Alpha::ld), dl = dom.trace(t, Alpha::dl);
    std::vector<Point> ld_rev(ld.polyline.rbegin(), ld.polyline.rend());
    std::vector<Point> dl_rev(dl.polyline.rbegin(), dl.polyline.rend());
    auto c = last_common_point(ur.polyline, ld_rev);
    auto cl = last_common_point(ru.polyline, dl_rev);
    if (!c || !cl) throw RegionPrecondition("monotone paths of source and target do not meet");
    r.c = *c;
    r.c_low = *cl;
    r.upper = join_at(ur.polyline, ld.polyline, r.c);
    r.lower = join_at(ru.polyline, dl.polyline, r.c_low);

    std::vector<Coord> ys{s.y, t.y};
    for (const Point& p : r.upper) ys.push_back(p.y);
    for (const Point& p : r.lower) ys.push_back(p.y);
    for (std::size_t i : dom.boxes_within({s.x, t.x, s.y, t.y})) {
        const RectPolygon& poly = dom.obstacles()[i];
        if (!r.strictly_inside(poly.vertices.front())) continue;
        r.holes.push_back(i);
        r.hole_polygons.push_back(poly);
        for (const Point& p : poly.vertices) ys.push_back(p.y);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    r.baselines = std::move(ys);

    auto ev = [&](Coord x, EventKind k, Coord ylo, Coord yhi) {
        r.events.push_back({x, k, r.index_of(ylo), r.index_of(yhi), 0, -1});
    };
    std::vector<VerticalEdge> up = chain_verticals(r.upper), low = chain_verticals(r.lower);
    std::size_t first_attach = 0;
    if (!up.empty() && up.front().x == s.x && up.front().lo == s.y) {
        ev(s.x, EventKind::Originate, s.y, up.front().hi);
        first_attach = 1;
    } else {
        ev(s.x, EventKind::Originate, s.y, s.y);
    }
    for (std::size_t i = first_attach; i < up.size(); ++i) ev(up[i].x, EventKind::Attach, up[i].lo, up[i].hi);
    std::size_t detach_end = low.size();
    if (!low.empty() && low.back().x == t.x && low.back().hi == t.y) {
        ev(t.x, EventKind::Terminate, low.back().lo, t.y);
        detach_end = low.size() - 1;
    } else {
        ev(t.x, EventKind::Terminate, t.y, t.y);
    }
    for (std::size_t i = 0; i < detach_end; ++i) ev(low[i].x, EventKind::Detach, low[i].lo, low[i].hi);

    for (const RectPolygon& h : r.hole_polygons) {
        Rect b = bounding_box(h);
        Coord left_lo = b.yhi, left_hi = b.ylo, right_lo = b.yhi, right_hi = b.ylo;
        for (const OrthoSegment& e : h.edges()) {
            if (e.orientation != Orientation::Vertical) continue;
            if (e.fixed == b.xlo) left_lo = e.lo, left_hi = e.hi;
            if (e.fixed == b.xhi) right_lo = e.lo, right_hi = e.hi;
        }
        for (std::size_t i = 0; i < h.size(); ++i) {
            Point p = h[i], q = h[i + 1];
            if (p.x != q.x) continue;
            Coord lo = std::min(p.y, q.y), hi = std::max(p.y, q.y);
            bool descending = q.y < p.y;  // counterclockwise: left boundary
            if (p.x == b.xlo) ev(p.x, EventKind::Split, lo, hi);
            else if (p.x == b.xhi) ev(p.x, EventKind::Merge, lo, hi);
            else if (descending) ev(p.x, lo >= left_hi ? EventKind::Detach : EventKind::Retract, lo, hi);
            else ev(p.x, hi <= right_lo ? EventKind::Attach : EventKind::Expose, lo, hi);
        }
        (void)left_lo;
        (void)right_hi;
    }
    std::sort(r.events.begin(), r.events.end(), event_before);
    return r;
}

}  // namespace mlsp
