#include "mlsp/geometry.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace mlsp {

OrthoSegment OrthoSegment::point(Point p) {
    return OrthoSegment{Orientation::Horizontal, p.y, p.x, p.x, true};
}

OrthoSegment OrthoSegment::between(Point a, Point b) {
    if (a == b) return point(a);
    if (a.y == b.y) return OrthoSegment{Orientation::Horizontal, a.y, std::min(a.x, b.x), std::max(a.x, b.x), false};
    if (a.x == b.x) return OrthoSegment{Orientation::Vertical, a.x, std::min(a.y, b.y), std::max(a.y, b.y), false};
    throw MalformedPath("segment endpoints " + to_string(a) + " and " + to_string(b) + " are not axis-aligned");
}

Point OrthoSegment::first() const {
    return orientation == Orientation::Horizontal ? Point{lo, fixed} : Point{fixed, lo};
}

Point OrthoSegment::second() const {
    return orientation == Orientation::Horizontal ? Point{hi, fixed} : Point{fixed, hi};
}

bool OrthoSegment::contains(const Point& p) const {
    if (orientation == Orientation::Horizontal) return p.y == fixed && p.x >= lo && p.x <= hi;
    return p.x == fixed && p.y >= lo && p.y <= hi;
}

RectPolygon RectPolygon::from_rect(const Rect& r) {
    return RectPolygon{{{r.xlo, r.ylo}, {r.xhi, r.ylo}, {r.xhi, r.yhi}, {r.xlo, r.yhi}}};
}

std::vector<OrthoSegment> RectPolygon::edges() const {
    std::vector<OrthoSegment> out;
    out.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) out.push_back(OrthoSegment::between(vertices[i], (*this)[i + 1]));
    return out;
}

std::string to_string(const Point& p) {
    std::ostringstream os;
    os << '(' << p.x << ',' << p.y << ')';
    return os.str();
}

namespace {

// 0 = zero step, 1 = horizontal, 2 = vertical.
int step_kind(const Point& a, const Point& b) {
    if (a == b) return 0;
    if (a.y == b.y) return 1;
    if (a.x == b.x) return 2;
    throw MalformedPath("non-rectilinear step " + to_string(a) + " -> " + to_string(b));
}

int sign(Coord v) { return (v > 0) - (v < 0); }

}  // namespace

std::pair<Coord, int> path_metrics(const std::vector<Point>& polyline) {
    Coord length = 0;
    int links = 0;
    int prev = 0;
    for (std::size_t i = 1; i < polyline.size(); ++i) {
        int k = step_kind(polyline[i - 1], polyline[i]);
        if (k == 0) continue;
        length += l1(polyline[i - 1], polyline[i]);
        if (k != prev) ++links;
        prev = k;
    }
    return {length, links};
}

std::vector<Point> simplify_polyline(const std::vector<Point>& polyline) {
    std::vector<Point> out;
    for (const Point& p : polyline) {
        if (!out.empty() && out.back() == p) continue;
        if (out.size() >= 2) {
            const Point& a = out[out.size() - 2];
            const Point& b = out.back();
            bool same_line = (a.x == b.x && b.x == p.x) || (a.y == b.y && b.y == p.y);
            bool same_dir = sign(b.x - a.x) == sign(p.x - b.x) && sign(b.y - a.y) == sign(p.y - b.y);
            if (same_line && same_dir) {
                out.back() = p;
                continue;
            }
        }
        out.push_back(p);
    }
    return out;
}

Rect bounding_box(const RectPolygon& p) {
    Rect r{p.vertices.front().x, p.vertices.front().x, p.vertices.front().y, p.vertices.front().y};
    for (const Point& v : p.vertices) {
        r.xlo = std::min(r.xlo, v.x);
        r.xhi = std::max(r.xhi, v.x);
        r.ylo = std::min(r.ylo, v.y);
        r.yhi = std::max(r.yhi, v.y);
    }
    return r;
}

Coord twice_signed_area(const std::vector<Point>& v) {
    Coord a = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

RectPolygon normalize_polygon(std::vector<Point> v) {
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
            const Point& a = v[(i + v.size() - 1) % v.size()];
            const Point& b = v[i];
            const Point& c = v[(i + 1) % v.size()];
            if (a == b || (a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y)) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (v.size() < 4) throw InvalidPolygon("polygon needs at least four corners");
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        if (a.x != b.x && a.y != b.y) throw InvalidPolygon("edge " + to_string(a) + " -> " + to_string(b) + " is not axis-parallel");
    }
    Coord area = twice_signed_area(v);
    if (area == 0) throw InvalidPolygon("polygon has zero area");
    if (area < 0) std::reverse(v.begin(), v.end());
    auto first = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), first, v.end());
    return RectPolygon{std::move(v)};
}

namespace {

bool segments_touch(const OrthoSegment& a, const OrthoSegment& b) {
    if (a.orientation == b.orientation) {
        return a.fixed == b.fixed && a.lo <= b.hi && b.lo <= a.hi;
    }
    const OrthoSegment& h = a.orientation == Orientation::Horizontal ? a : b;
    const OrthoSegment& v = a.orientation == Orientation::Horizontal ? b : a;
    return v.fixed >= h.lo && v.fixed <= h.hi && h.fixed >= v.lo && h.fixed <= v.hi;
}

}  // namespace

bool is_simple(const RectPolygon& p) {
    auto e = p.edges();
    std::size_t n = e.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent) {
                // Adjacent edges may only share their common vertex; with
                // alternating orientations that is automatic unless they fold.
                if (e[i].orientation == e[j].orientation) return false;
                continue;
            }
            if (segments_touch(e[i], e[j])) return false;
        }
    }
    return true;
}

Location locate_doubled(const RectPolygon& p, Coord x2, Coord y2) {
    bool inside = false;
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point a = p[i], b = p[i + 1];
        Coord ax = 2 * a.x, ay = 2 * a.y, bx = 2 * b.x, by = 2 * b.y;
        if (ay == by) {
            if (y2 == ay && x2 >= std::min(ax, bx) && x2 <= std::max(ax, bx)) return Location::Boundary;
            continue;
        }
        Coord lo = std::min(ay, by), hi = std::max(ay, by);
        if (x2 == ax && y2 >= lo && y2 <= hi) return Location::Boundary;
        if (ax > x2 && y2 >= lo && y2 < hi) inside = !inside;
    }
    return inside ? Location::Inside : Location::Outside;
}

Location locate(const RectPolygon& p, const Point& q) { return locate_doubled(p, 2 * q.x, 2 * q.y); }

CellGrid CellGrid::of_polygon(const RectPolygon& p) {
    std::vector<Coord> xs, ys;
    for (const Point& v : p.vertices) {
        xs.push_back(v.x);
        ys.push_back(v.y);
    }
    return of_polygon(p, std::move(xs), std::move(ys));
}

CellGrid CellGrid::of_polygon(const RectPolygon& p, std::vector<Coord> xs, std::vector<Coord> ys) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    CellGrid g{std::move(xs), std::move(ys), {}};
    g.inside.assign(g.cols() * g.rows(), 0);
    std::vector<OrthoSegment> verticals;
    for (const auto& e : p.edges())
        if (e.orientation == Orientation::Vertical) verticals.push_back(e);
    std::vector<Coord> cross;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        cross.clear();
        for (const auto& e : verticals)
            if (e.lo <= g.ys[r] && e.hi >= g.ys[r + 1]) cross.push_back(e.fixed);
        std::sort(cross.begin(), cross.end());
        for (std::size_t k = 0; k + 1 < cross.size(); k += 2) {
            auto a = std::lower_bound(g.xs.begin(), g.xs.end(), cross[k]) - g.xs.begin();
            auto b = std::lower_bound(g.xs.begin(), g.xs.end(), cross[k + 1]) - g.xs.begin();
            for (auto c = a; c < b; ++c) g.set(static_cast<std::size_t>(c), r, true);
        }
    }
    return g;
}

std::vector<std::vector<Point>> cell_boundaries(const CellGrid& g) {
    // Directed unit edges keep the marked cells on their left.
    struct Edge {
        std::size_t fx, fy, tx, ty;
        int dir;  // 0 +x, 1 +y, 2 -x, 3 -y
        bool used = false;
    };
    std::vector<Edge> edges;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> from;
    auto in = [&](long cx, long cy) {
        return cx >= 0 && cy >= 0 && cx < static_cast<long>(g.cols()) && cy < static_cast<long>(g.rows()) &&
               g.at(static_cast<std::size_t>(cx), static_cast<std::size_t>(cy));
    };
    auto add = [&](std::size_t fx, std::size_t fy, std::size_t tx, std::size_t ty, int dir) {
        from[{fx, fy}].push_back(edges.size());
        edges.push_back({fx, fy, tx, ty, dir});
    };
    for (std::size_t cy = 0; cy < g.rows(); ++cy) {
        for (std::size_t cx = 0; cx < g.cols(); ++cx) {
            if (!g.at(cx, cy)) continue;
            long x = static_cast<long>(cx), y = static_cast<long>(cy);
            if (!in(x, y - 1)) add(cx, cy, cx + 1, cy, 0);
            if (!in(x + 1, y)) add(cx + 1, cy, cx + 1, cy + 1, 1);
            if (!in(x, y + 1)) add(cx + 1, cy + 1, cx, cy + 1, 2);
            if (!in(x - 1, y)) add(cx, cy + 1, cx, cy, 3);
        }
    }
    std::vector<std::vector<Point>> cycles;
    for (std::size_t s = 0; s < edges.size(); ++s) {
        if (edges[s].used) continue;
        std::vector<Point> cyc;
        std::size_t cur = s;
        while (!edges[cur].used) {
            edges[cur].used = true;
            cyc.push_back({g.xs[edges[cur].fx], g.ys[edges[cur].fy]});
            const auto& outs = from[{edges[cur].tx, edges[cur].ty}];
            std::size_t next = outs.front();
            if (outs.size() > 1) {
                // Prefer the left turn so corner-touching cells separate.
                int want = (edges[cur].dir + 1) % 4;
                for (std::size_t o : outs)
                    if (edges[o].dir == want) next = o;
            }
            cur = next;
        }
        std::vector<Point> simple;
        for (const Point& p : cyc) simple.push_back(p);
        // Drop collinear vertices cyclically.
        bool changed = true;
        while (changed && simple.size() > 4) {
            changed = false;
            for (std::size_t i = 0; i < simple.size(); ++i) {
                const Point& a = simple[(i + simple.size() - 1) % simple.size()];
                const Point& b = simple[i];
                const Point& c = simple[(i + 1) % simple.size()];
                if ((a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y)) {
                    simple.erase(simple.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
            }
        }
        cycles.push_back(std::move(simple));
    }
    return cycles;
}

bool is_rectilinear_convex(const RectPolygon& p) {
    CellGrid g = CellGrid::of_polygon(p);
    auto contiguous = [](const std::vector<bool>& row) {
        int runs = 0;
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] && (i == 0 || !row[i - 1])) ++runs;
        return runs <= 1;
    };
    std::vector<bool> row;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        row.assign(g.cols(), false);
        for (std::size_t c = 0; c < g.cols(); ++c) row[c] = g.at(c, r);
        if (!contiguous(row)) return false;
    }
    for (std::size_t r = 0; r + 1 < g.rows(); ++r) {  // lines through interior coordinates
        row.assign(g.cols(), false);
        for (std::size_t c = 0; c < g.cols(); ++c) row[c] = g.at(c, r) || g.at(c, r + 1);
        if (!contiguous(row)) return false;
    }
    for (std::size_t c = 0; c < g.cols(); ++c) {
        row.assign(g.rows(), false);
        for (std::size_t r = 0; r < g.rows(); ++r) row[r] = g.at(c, r);
        if (!contiguous(row)) return false;
    }
    for (std::size_t c = 0; c + 1 < g.cols(); ++c) {
        row.assign(g.rows(), false);
        for (std::size_t r = 0; r < g.rows(); ++r) row[r] = g.at(c, r) || g.at(c + 1, r);
        if (!contiguous(row)) return false;
    }
    return true;
}

RectPolygon rectilinear_convex_hull(const RectPolygon& p) {
    CellGrid g = CellGrid::of_polygon(p);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < g.rows(); ++r) {
            std::size_t lo = g.cols(), hi = 0;
            for (std::size_t c = 0; c < g.cols(); ++c)
                if (g.at(c, r)) lo = std::min(lo, c), hi = c;
            for (std::size_t c = lo; c < hi; ++c)
                if (!g.at(c, r)) g.set(c, r, true), changed = true;
        }
        for (std::size_t c = 0; c < g.cols(); ++c) {
            std::size_t lo = g.rows(), hi = 0;
            for (std::size_t r = 0; r < g.rows(); ++r)
                if (g.at(c, r)) lo = std::min(lo, r), hi = r;
            for (std::size_t r = lo; r < hi; ++r)
                if (!g.at(c, r)) g.set(c, r, true), changed = true;
        }
    }
    auto cycles = cell_boundaries(g);
    if (cycles.size() != 1) throw InvalidPolygon("hull of a simple polygon must be a single cycle");
    return normalize_polygon(std::move(cycles.front()));
}

}  // namespace mlsp
