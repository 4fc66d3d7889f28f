#include "mlsp/instance.h"

#include <algorithm>
#include <map>
#include <set>

namespace mlsp {

Terminal Terminal::point(Point p) { return Terminal{TerminalKind::Point, OrthoSegment::point(p), {}}; }

Terminal Terminal::segment_between(Point a, Point b) {
    if (a == b) return point(a);
    return Terminal{TerminalKind::Segment, OrthoSegment::between(a, b), {}};
}

Terminal Terminal::polygon_of(RectPolygon p) { return Terminal{TerminalKind::Polygon, {}, std::move(p)}; }

Rect Terminal::box() const {
    if (kind == TerminalKind::Polygon) return bounding_box(polygon);
    Point a = segment.first(), b = segment.second();
    return Rect{std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

std::vector<Point> Terminal::corners() const {
    if (kind == TerminalKind::Polygon) return polygon.vertices;
    if (kind == TerminalKind::Point) return {segment.first()};
    return {segment.first(), segment.second()};
}

bool ValidationReport::has(Violation v) const {
    return std::any_of(issues.begin(), issues.end(), [&](const ValidationIssue& i) { return i.kind == v; });
}

namespace {

bool ortho_touch(const OrthoSegment& a, const OrthoSegment& b) {
    if (a.orientation == b.orientation) return a.fixed == b.fixed && a.lo <= b.hi && b.lo <= a.hi;
    const OrthoSegment& h = a.orientation == Orientation::Horizontal ? a : b;
    const OrthoSegment& v = a.orientation == Orientation::Horizontal ? b : a;
    return v.fixed >= h.lo && v.fixed <= h.hi && h.fixed >= v.lo && h.fixed <= v.hi;
}

}  // namespace

bool segment_enters_box(const OrthoSegment& s, const Rect& b) {
    if (s.is_point) return b.contains_open(s.first());
    if (s.orientation == Orientation::Horizontal)
        return b.ylo < s.fixed && s.fixed < b.yhi && s.lo < b.xhi && b.xlo < s.hi;
    return b.xlo < s.fixed && s.fixed < b.xhi && s.lo < b.yhi && b.ylo < s.hi;
}

bool meets_closed(const RectPolygon& p, const OrthoSegment& s) {
    if (locate(p, s.first()) != Location::Outside) return true;
    if (s.is_point) return false;
    for (const auto& e : p.edges())
        if (ortho_touch(e, s)) return true;
    return false;
}

bool meets_interior(const RectPolygon& p, const OrthoSegment& s) {
    // Break the segment at every crossing coordinate and probe the pieces.
    std::vector<Coord> cuts{s.lo, s.hi};
    for (const Point& v : p.vertices) cuts.push_back(s.orientation == Orientation::Horizontal ? v.x : v.y);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto probe = [&](Coord along2) {
        Coord f2 = 2 * s.fixed;
        return s.orientation == Orientation::Horizontal ? locate_doubled(p, along2, f2) : locate_doubled(p, f2, along2);
    };
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i] < s.lo || cuts[i] > s.hi) continue;
        if (probe(2 * cuts[i]) == Location::Inside) return true;
        if (i + 1 < cuts.size() && cuts[i + 1] <= s.hi && probe(cuts[i] + cuts[i + 1]) == Location::Inside) return true;
    }
    return false;
}

bool polygons_meet_closed(const RectPolygon& a, const RectPolygon& b) {
    for (const auto& e : a.edges())
        if (meets_closed(b, e)) return true;
    return locate(a, b.vertices.front()) != Location::Outside;
}

ValidationReport validate(const Instance& inst) {
    ValidationReport rep;
    auto issue = [&](Violation v, std::string m) { rep.issues.push_back({v, std::move(m)}); };

    auto check_range = [&](const Point& p, const std::string& what) {
        if (p.x > kMaxInputCoord || p.x < -kMaxInputCoord || p.y > kMaxInputCoord || p.y < -kMaxInputCoord)
            issue(Violation::CoordinateRange, what + " coordinate " + to_string(p) + " exceeds 2^30");
    };

    std::vector<Rect> boxes;
    for (std::size_t i = 0; i < inst.obstacles.size(); ++i) {
        const RectPolygon& p = inst.obstacles[i];
        std::string name = "obstacle " + std::to_string(i);
        for (const Point& v : p.vertices) check_range(v, name);
        try {
            RectPolygon n = normalize_polygon(p.vertices);
            if (!is_simple(n)) issue(Violation::MalformedPolygon, name + " is not simple");
        } catch (const std::exception& e) {
            issue(Violation::MalformedPolygon, name + ": " + e.what());
        }
        boxes.push_back(p.vertices.empty() ? Rect{} : bounding_box(p));
    }
    if (!rep.ok()) return rep;

    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (boxes[i].interiors_overlap(boxes[j]))
                issue(Violation::BoxOverlap,
                      "bounding boxes of obstacles " + std::to_string(i) + " and " + std::to_string(j) + " overlap");

    std::map<Coord, std::size_t> xs_owner, ys_owner;
    for (std::size_t i = 0; i < inst.obstacles.size(); ++i) {
        std::set<Coord> xs, ys;
        for (const Point& v : inst.obstacles[i].vertices) xs.insert(v.x), ys.insert(v.y);
        for (Coord x : xs) {
            auto [it, fresh] = xs_owner.emplace(x, i);
            if (!fresh)
                issue(Violation::GeneralPosition, "obstacles " + std::to_string(it->second) + " and " +
                                                      std::to_string(i) + " share corner x = " + std::to_string(x));
        }
        for (Coord y : ys) {
            auto [it, fresh] = ys_owner.emplace(y, i);
            if (!fresh)
                issue(Violation::GeneralPosition, "obstacles " + std::to_string(it->second) + " and " +
                                                      std::to_string(i) + " share corner y = " + std::to_string(y));
        }
    }

    auto check_terminal = [&](const Terminal& t, const std::string& name) {
        for (const Point& c : t.corners()) {
            check_range(c, name);
            if (xs_owner.count(c.x))
                issue(Violation::GeneralPosition, name + " shares x = " + std::to_string(c.x) + " with an obstacle corner");
            if (ys_owner.count(c.y))
                issue(Violation::GeneralPosition, name + " shares y = " + std::to_string(c.y) + " with an obstacle corner");
        }
        if (t.kind == TerminalKind::Polygon) {
            try {
                RectPolygon n = normalize_polygon(t.polygon.vertices);
                if (!is_simple(n)) issue(Violation::MalformedPolygon, name + " polygon is not simple");
            } catch (const std::exception& e) {
                issue(Violation::MalformedPolygon, name + ": " + e.what());
                return;
            }
            Rect b = t.box();
            for (std::size_t i = 0; i < boxes.size(); ++i)
                if (b.interiors_overlap(boxes[i]))
                    issue(Violation::TerminalInBox, name + " box overlaps obstacle " + std::to_string(i) + " box");
            for (std::size_t i = 0; i < inst.obstacles.size(); ++i)
                if (polygons_meet_closed(t.polygon, inst.obstacles[i]))
                    issue(Violation::TerminalBlocked, name + " meets obstacle " + std::to_string(i));
            return;
        }
        int in_boxes = 0;
        for (std::size_t i = 0; i < inst.obstacles.size(); ++i) {
            if (meets_closed(inst.obstacles[i], t.segment))
                issue(Violation::TerminalBlocked, name + " meets obstacle " + std::to_string(i));
            if (segment_enters_box(t.segment, boxes[i])) ++in_boxes;
        }
        if (in_boxes > 2) issue(Violation::TerminalInBox, name + " enters more than two bounding boxes");
    };
    check_terminal(inst.source, "source");
    check_terminal(inst.target, "target");
    return rep;
}

Point double_point(Point p) { return {2 * p.x, 2 * p.y}; }
Point halve_point(Point p) { return {p.x / 2, p.y / 2}; }

RectPolygon transform_polygon(const RectPolygon& p, Point (*f)(Point)) {
    std::vector<Point> v;
    for (const Point& q : p.vertices) v.push_back(f(q));
    return normalize_polygon(std::move(v));
}

Terminal transform_terminal(const Terminal& t, Point (*f)(Point)) {
    switch (t.kind) {
        case TerminalKind::Point: return Terminal::point(f(t.segment.first()));
        case TerminalKind::Segment: return Terminal::segment_between(f(t.segment.first()), f(t.segment.second()));
        case TerminalKind::Polygon: return Terminal::polygon_of(transform_polygon(t.polygon, f));
    }
    return t;
}

Instance transform_instance(const Instance& inst, Point (*f)(Point)) {
    Instance out;
    for (const auto& p : inst.obstacles) out.obstacles.push_back(transform_polygon(p, f));
    out.source = transform_terminal(inst.source, f);
    out.target = transform_terminal(inst.target, f);
    return out;
}

ScaledInstance scale_by_two(const Instance& inst) {
    auto check = [](const Point& p) {
        if (p.x > kMaxInputCoord || p.x < -kMaxInputCoord || p.y > kMaxInputCoord || p.y < -kMaxInputCoord)
            throw CoordinateOverflow("coordinate " + to_string(p) + " cannot be doubled within range");
    };
    for (const auto& o : inst.obstacles)
        for (const Point& v : o.vertices) check(v);
    for (const Point& c : inst.source.corners()) check(c);
    for (const Point& c : inst.target.corners()) check(c);
    return ScaledInstance{transform_instance(inst, double_point), true};
}

Instance unscale(const ScaledInstance& s) {
    if (!s.scaled) return s.instance;
    return transform_instance(s.instance, halve_point);
}

}  // namespace mlsp
