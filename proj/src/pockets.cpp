#include "mlsp/pockets.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

#include "mlsp/instance.h"
#include "mlsp/link_tree.h"

namespace mlsp {

namespace {

constexpr Coord kInfDist = std::numeric_limits<Coord>::max() / 4;

Coord along(const OrthoSegment& s, bool lo) { return lo ? s.lo : s.hi; }

OrthoSegment sub_segment(const OrthoSegment& s, Coord a, Coord b) {
    if (s.orientation == Orientation::Horizontal) return OrthoSegment::between({a, s.fixed}, {b, s.fixed});
    return OrthoSegment::between({s.fixed, a}, {s.fixed, b});
}

// Interval of the segment's free coordinate inside the closed box.
std::pair<Coord, Coord> clip(const OrthoSegment& s, const Rect& b) {
    if (s.orientation == Orientation::Horizontal) return {std::max(s.lo, b.xlo), std::min(s.hi, b.xhi)};
    return {std::max(s.lo, b.ylo), std::min(s.hi, b.yhi)};
}

void add_coords(std::vector<Coord>& xs, std::vector<Coord>& ys, const OrthoSegment& s) {
    for (Point p : {s.first(), s.second()}) xs.push_back(p.x), ys.push_back(p.y);
}

}  // namespace

TerminalSplit split_terminal(const OrthoSegment& t, const std::vector<RectPolygon>& obstacles) {
    TerminalSplit out;
    std::vector<std::tuple<Coord, Coord, int>> inside;
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        Rect b = bounding_box(obstacles[i]);
        if (t.is_point) {
            if (b.contains_open(t.first())) {
                out.pieces.push_back({t, static_cast<int>(i)});
                return out;
            }
            continue;
        }
        if (!segment_enters_box(t, b)) continue;
        auto [a, c] = clip(t, b);
        inside.emplace_back(a, c, static_cast<int>(i));
    }
    if (t.is_point || inside.empty()) {
        out.pieces.push_back({t, -1});
        return out;
    }
    std::sort(inside.begin(), inside.end());
    Coord cursor = along(t, true);
    for (const auto& [a, c, box] : inside) {
        if (a > cursor) out.pieces.push_back({sub_segment(t, cursor, a), -1});
        out.pieces.push_back({sub_segment(t, a, c), box});
        cursor = c;
    }
    if (cursor < along(t, false)) out.pieces.push_back({sub_segment(t, cursor, along(t, false)), -1});
    return out;
}

std::vector<OrthoSegment> Pocket::doors() const {
    std::vector<OrthoSegment> out;
    if (door_h) out.push_back(*door_h);
    if (door_v) out.push_back(*door_v);
    return out;
}

Pocket pocket_of(const OrthoSegment& piece, const RectPolygon& p, std::size_t host) {
    Rect b = bounding_box(p);
    if (!b.contains_closed(piece.first()) || !b.contains_closed(piece.second()))
        throw PocketError("piece is not inside the bounding box");
    if (meets_closed(p, piece)) throw PocketError("piece meets the polygon");
    std::vector<Coord> xs, ys;
    for (const Point& v : p.vertices) xs.push_back(v.x), ys.push_back(v.y);
    add_coords(xs, ys, piece);
    CellGrid g = CellGrid::of_polygon(p, xs, ys);
    CellGrid comp{g.xs, g.ys, std::vector<std::uint8_t>(g.inside.size(), 0)};
    Point a = piece.first();
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t cy = 0; cy < g.rows(); ++cy)
        for (std::size_t cx = 0; cx < g.cols(); ++cx)
            if (!g.at(cx, cy) && g.xs[cx] <= a.x && a.x <= g.xs[cx + 1] && g.ys[cy] <= a.y && a.y <= g.ys[cy + 1]) {
                comp.set(cx, cy, true);
                stack.emplace_back(cx, cy);
            }
    if (stack.empty()) throw PocketError("piece touches no free cell");
    while (!stack.empty()) {
        auto [cx, cy] = stack.back();
        stack.pop_back();
        const long d[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& step : d) {
            long nx = static_cast<long>(cx) + step[0], ny = static_cast<long>(cy) + step[1];
            if (nx < 0 || ny < 0 || nx >= static_cast<long>(g.cols()) || ny >= static_cast<long>(g.rows())) continue;
            auto ux = static_cast<std::size_t>(nx), uy = static_cast<std::size_t>(ny);
            if (g.at(ux, uy) || comp.at(ux, uy)) continue;
            comp.set(ux, uy, true);
            stack.emplace_back(ux, uy);
        }
    }
    auto cycles = cell_boundaries(comp);
    if (cycles.size() != 1) throw PocketError("pocket is not a simple polygon");
    Pocket out;
    out.polygon = normalize_polygon(cycles.front());
    out.host = host;
    for (const OrthoSegment& e : out.polygon.edges()) {
        bool h = e.orientation == Orientation::Horizontal;
        if (h && (e.fixed == b.ylo || e.fixed == b.yhi)) {
            if (out.door_h) throw PocketError("pocket with two horizontal doors");
            out.door_h = e;
        } else if (!h && (e.fixed == b.xlo || e.fixed == b.xhi)) {
            if (out.door_v) throw PocketError("pocket with two vertical doors");
            out.door_v = e;
        }
    }
    return out;
}

bool RegionGrid::Cost::finite() const { return dist < kInfDist; }

RegionGrid::RegionGrid(RectPolygon region, std::vector<Coord> xs, std::vector<Coord> ys)
    : region_(std::move(region)) {
    Rect b = bounding_box(region_);
    for (const Point& v : region_.vertices) xs.push_back(v.x), ys.push_back(v.y);
    std::erase_if(xs, [&](Coord x) { return x < b.xlo || x > b.xhi; });
    std::erase_if(ys, [&](Coord y) { return y < b.ylo || y > b.yhi; });
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    xs_ = std::move(xs);
    ys_ = std::move(ys);
    inside_.assign(xs_.size() * ys_.size(), 0);
    for (std::size_t j = 0; j < ys_.size(); ++j)
        for (std::size_t i = 0; i < xs_.size(); ++i)
            inside_[index(i, j)] = locate(region_, {xs_[i], ys_[j]}) != Location::Outside;
}

std::optional<std::size_t> RegionGrid::node_of(Point p) const {
    auto i = std::lower_bound(xs_.begin(), xs_.end(), p.x);
    auto j = std::lower_bound(ys_.begin(), ys_.end(), p.y);
    if (i == xs_.end() || *i != p.x || j == ys_.end() || *j != p.y) return std::nullopt;
    std::size_t n = index(static_cast<std::size_t>(i - xs_.begin()), static_cast<std::size_t>(j - ys_.begin()));
    if (!inside_[n]) return std::nullopt;
    return n;
}

bool RegionGrid::is_node(Point p) const { return node_of(p).has_value(); }

std::vector<Point> RegionGrid::nodes_on(const OrthoSegment& s) const {
    std::vector<Point> out;
    if (s.orientation == Orientation::Horizontal) {
        for (Coord x : xs_)
            if (x >= s.lo && x <= s.hi && is_node({x, s.fixed})) out.push_back({x, s.fixed});
    } else {
        for (Coord y : ys_)
            if (y >= s.lo && y <= s.hi && is_node({s.fixed, y})) out.push_back({s.fixed, y});
    }
    return out;
}

void RegionGrid::run(const std::vector<OrthoSegment>& sources) {
    const std::size_t n = xs_.size() * ys_.size();
    cost_.assign(n * 3, Cost{kInfDist, kInfLinks});
    pred_.assign(n * 3, -1);
    using Item = std::tuple<Coord, int, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (const OrthoSegment& s : sources)
        for (const Point& p : nodes_on(s)) {
            std::size_t st = *node_of(p) * 3;
            if (cost_[st].dist == 0 && cost_[st].links == 0) continue;
            cost_[st] = {0, 0};
            pq.emplace(0, 0, st);
        }
    const std::size_t nx = xs_.size();
    while (!pq.empty()) {
        auto [d, l, st] = pq.top();
        pq.pop();
        if (d != cost_[st].dist || l != cost_[st].links) continue;
        std::size_t node = st / 3, state = st % 3;
        std::size_t i = node % nx, j = node / nx;
        for (int dir = 0; dir < 4; ++dir) {
            long ni = static_cast<long>(i) + (dir == 0 ? 1 : dir == 2 ? -1 : 0);
            long nj = static_cast<long>(j) + (dir == 1 ? 1 : dir == 3 ? -1 : 0);
            if (ni < 0 || nj < 0 || ni >= static_cast<long>(nx) || nj >= static_cast<long>(ys_.size())) continue;
            auto ui = static_cast<std::size_t>(ni), uj = static_cast<std::size_t>(nj);
            std::size_t nb = index(ui, uj);
            if (!inside_[nb]) continue;
            if (locate_doubled(region_, xs_[i] + xs_[ui], ys_[j] + ys_[uj]) == Location::Outside) continue;
            std::size_t ns = dir % 2 == 0 ? 1 : 2;
            Cost c{d + (xs_[ui] > xs_[i] ? xs_[ui] - xs_[i] : xs_[i] - xs_[ui]) +
                       (ys_[uj] > ys_[j] ? ys_[uj] - ys_[j] : ys_[j] - ys_[uj]),
                   l + (state == ns ? 0 : 1)};
            Cost& cur = cost_[nb * 3 + ns];
            if (c.dist < cur.dist || (c.dist == cur.dist && c.links < cur.links)) {
                cur = c;
                pred_[nb * 3 + ns] = static_cast<int>(st);
                pq.emplace(c.dist, c.links, nb * 3 + ns);
            }
        }
    }
}

int RegionGrid::best_state(std::size_t node, LinkDir last) const {
    if (last == LinkDir::H) return static_cast<int>(node * 3 + 1);
    if (last == LinkDir::V) return static_cast<int>(node * 3 + 2);
    std::size_t best = node * 3;
    for (std::size_t s = node * 3 + 1; s < node * 3 + 3; ++s) {
        const Cost& c = cost_[s];
        if (c.dist < cost_[best].dist || (c.dist == cost_[best].dist && c.links < cost_[best].links)) best = s;
    }
    return static_cast<int>(best);
}

RegionGrid::Cost RegionGrid::cost(Point p, LinkDir last) const {
    auto n = node_of(p);
    if (!n || cost_.empty()) return {kInfDist, kInfLinks};
    return cost_[static_cast<std::size_t>(best_state(*n, last))];
}

std::vector<Point> RegionGrid::path_to(Point p, LinkDir last) const {
    auto n = node_of(p);
    if (!n || cost_.empty()) return {};
    int st = best_state(*n, last);
    if (!cost_[static_cast<std::size_t>(st)].finite()) return {};
    std::vector<Point> pts;
    const std::size_t nx = xs_.size();
    while (st >= 0) {
        std::size_t node = static_cast<std::size_t>(st) / 3;
        pts.push_back({xs_[node % nx], ys_[node / nx]});
        st = pred_[static_cast<std::size_t>(st)];
    }
    std::reverse(pts.begin(), pts.end());
    return simplify_polyline(pts);
}

PocketPath simple_polygon_mlsp(Point p, Point q, const Pocket& pocket) {
    if (locate(pocket.polygon, p) == Location::Outside || locate(pocket.polygon, q) == Location::Outside)
        throw PocketError("point outside the pocket");
    RegionGrid g(pocket.polygon, {p.x, q.x}, {p.y, q.y});
    g.run({OrthoSegment::point(p)});
    PocketPath out;
    out.path.polyline = g.path_to(q);
    auto [len, links] = path_metrics(out.path.polyline);
    out.path.length = len;
    out.path.links = links;
    out.links_h = g.cost(q, LinkDir::H).links;
    out.links_v = g.cost(q, LinkDir::V).links;
    return out;
}

int DoorProfile::crossing_links(const DoorSample& s) const {
    return door.orientation == Orientation::Horizontal ? s.links_v : s.links_h;
}

std::vector<Point> DoorProfile::path_to(Point v, LinkDir last) const {
    if (!grid) return {v};
    return grid->path_to(v, last);
}

namespace {

DoorSample sample_at(const RegionGrid& g, Point v) {
    RegionGrid::Cost any = g.cost(v), h = g.cost(v, LinkDir::H), w = g.cost(v, LinkDir::V);
    DoorSample s{v, any.dist, kInfLinks, kInfLinks, any.links};
    if (h.finite() && h.dist == any.dist) s.links_h = h.links;
    if (w.finite() && w.dist == any.dist) s.links_v = w.links;
    return s;
}

}  // namespace

DoorProfile door_profile(const OrthoSegment& piece, const Pocket& pocket, const OrthoSegment& door,
                         const std::vector<Coord>& hx, const std::vector<Coord>& hy) {
    std::vector<Coord> xs = hx, ys = hy;
    add_coords(xs, ys, piece);
    add_coords(xs, ys, door);
    auto grid = std::make_shared<RegionGrid>(pocket.polygon, std::move(xs), std::move(ys));
    grid->run({piece});
    DoorProfile out;
    out.door = door;
    for (const Point& v : grid->nodes_on(door)) {
        DoorSample s = sample_at(*grid, v);
        if (s.dist < kInfDist) out.samples.push_back(s);
    }
    std::vector<Point> straight;
    for (const DoorSample& s : out.samples)
        if (s.links_any <= 1) straight.push_back(s.v);
    if (!straight.empty()) {
        auto [lo, hi] = std::minmax_element(straight.begin(), straight.end());
        out.direct = OrthoSegment::between(*lo, *hi);
    } else if (!out.samples.empty()) {
        const DoorSample* best = &out.samples.front();
        for (const DoorSample& s : out.samples)
            if (s.dist < best->dist) best = &s;
        out.unique_closest = std::make_pair(grid->path_to(best->v).front(), best->v);
    }
    out.grid = std::move(grid);
    return out;
}

DoorProfile terminal_profile(const OrthoSegment& piece, const std::vector<Coord>& hx, const std::vector<Coord>& hy) {
    DoorProfile out;
    out.door = piece;
    out.degenerate = true;
    std::vector<Point> pts{piece.first(), piece.second()};
    if (piece.orientation == Orientation::Horizontal) {
        for (Coord x : hx)
            if (x > piece.lo && x < piece.hi) pts.push_back({x, piece.fixed});
    } else {
        for (Coord y : hy)
            if (y > piece.lo && y < piece.hi) pts.push_back({piece.fixed, y});
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Point& p : pts) out.samples.push_back({p, 0, 1, 1, 0});
    return out;
}

DoorProfile polygon_profile(const RectPolygon& s, const std::vector<Coord>& hx, const std::vector<Coord>& hy) {
    Rect b = bounding_box(s);
    std::vector<Coord> xs = hx, ys = hy;
    for (const Point& v : s.vertices) xs.push_back(v.x), ys.push_back(v.y);
    auto grid = std::make_shared<RegionGrid>(RectPolygon::from_rect(b), std::move(xs), std::move(ys));
    grid->run(s.edges());
    DoorProfile out;
    out.door = OrthoSegment::between({b.xlo, b.yhi}, {b.xhi, b.yhi});
    std::vector<Point> pts;
    for (const OrthoSegment& side : RectPolygon::from_rect(b).edges())
        for (const Point& v : grid->nodes_on(side)) pts.push_back(v);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Point& v : pts) out.samples.push_back(sample_at(*grid, v));
    out.grid = std::move(grid);
    return out;
}

DoorComposition compose_through_doors(const DoorProfile& src, const DoorProfile& dst,
                                      const std::vector<RectPolygon>& obstacles) {
    std::vector<SweepSource> sources;
    for (std::size_t i = 0; i < src.samples.size(); ++i) {
        const DoorSample& s = src.samples[i];
        int tag = static_cast<int>(i) * 3;
        if (s.links_any == 0) sources.push_back({s.v, s.dist, 0, LinkDir::None, tag});
        if (s.links_h < kInfLinks) sources.push_back({s.v, s.dist, s.links_h, LinkDir::H, tag + 1});
        if (s.links_v < kInfLinks) sources.push_back({s.v, s.dist, s.links_v, LinkDir::V, tag + 2});
    }
    std::vector<SweepSink> sinks;
    for (std::size_t i = 0; i < dst.samples.size(); ++i) {
        const DoorSample& s = dst.samples[i];
        int tag = static_cast<int>(i) * 3;
        if (s.links_any == 0) sinks.push_back({s.v, s.dist, 0, LinkDir::None, tag});
        if (s.links_h < kInfLinks) sinks.push_back({s.v, s.dist, s.links_h, LinkDir::H, tag + 1});
        if (s.links_v < kInfLinks) sinks.push_back({s.v, s.dist, s.links_v, LinkDir::V, tag + 2});
    }
    DoorComposition out;
    SeededAnswer a = seeded_solve(obstacles, sources, sinks);
    out.events = a.events;
    if (!a.found) return out;
    auto dir_of = [](int tag) { return tag % 3 == 0 ? LinkDir::None : tag % 3 == 1 ? LinkDir::H : LinkDir::V; };
    const DoorSample& vs = src.samples[static_cast<std::size_t>(a.source_tag / 3)];
    const DoorSample& ut = dst.samples[static_cast<std::size_t>(a.sink_tag / 3)];
    std::vector<Point> pts = src.path_to(vs.v, dir_of(a.source_tag));
    pts.insert(pts.end(), a.polyline.begin(), a.polyline.end());
    std::vector<Point> tail = dst.path_to(ut.v, dir_of(a.sink_tag));
    pts.insert(pts.end(), tail.rbegin(), tail.rend());
    out.path.polyline = simplify_polyline(pts);
    auto [len, links] = path_metrics(out.path.polyline);
    out.path.length = len;
    out.path.links = links;
    out.feasible = true;
    return out;
}

}  // namespace mlsp
