#include "mlsp/oracle.h"

#include <algorithm>
#include <limits>
#include <queue>

namespace mlsp {

namespace {

constexpr int kDx[4] = {1, 0, -1, 0};
constexpr int kDy[4] = {0, 1, 0, -1};

void sort_unique(std::vector<Coord>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t index_of(const std::vector<Coord>& v, Coord c) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
}

// Grid nodes lying on the closed terminal.
std::vector<std::pair<std::size_t, std::size_t>> terminal_nodes(const HananGraph& g, const Terminal& t) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    Rect b = t.box();
    std::size_t i0 = index_of(g.xs, b.xlo), i1 = index_of(g.xs, b.xhi);
    std::size_t j0 = index_of(g.ys, b.ylo), j1 = index_of(g.ys, b.yhi);
    for (std::size_t j = j0; j <= j1 && j < g.ny(); ++j) {
        for (std::size_t i = i0; i <= i1 && i < g.nx(); ++i) {
            Point p{g.xs[i], g.ys[j]};
            bool on = t.kind == TerminalKind::Polygon ? locate(t.polygon, p) != Location::Outside : t.segment.contains(p);
            if (on) out.emplace_back(i, j);
        }
    }
    return out;
}

struct Cost {
    Coord len = std::numeric_limits<Coord>::max();
    int links = std::numeric_limits<int>::max();
    auto operator<=>(const Cost&) const = default;
};

}  // namespace

int HananGraph::owner(long i, long j) const {
    if (i < 0 || j < 0 || i >= static_cast<long>(nx()) - 1 || j >= static_cast<long>(ny()) - 1) return 0;
    return cell_owner[static_cast<std::size_t>(j) * (nx() - 1) + static_cast<std::size_t>(i)];
}

bool HananGraph::node_free(std::size_t i, std::size_t j) const {
    long a = static_cast<long>(i), b = static_cast<long>(j);
    int o = owner(a - 1, b - 1);
    return !(o != 0 && owner(a, b - 1) == o && owner(a - 1, b) == o && owner(a, b) == o);
}

bool HananGraph::edge_free(std::size_t i, std::size_t j, int dir) const {
    long a = static_cast<long>(i), b = static_cast<long>(j);
    int o1, o2;
    switch (dir) {
        case 0: o1 = owner(a, b - 1), o2 = owner(a, b); break;
        case 2: o1 = owner(a - 1, b - 1), o2 = owner(a - 1, b); break;
        case 1: o1 = owner(a - 1, b), o2 = owner(a, b); break;
        default: o1 = owner(a - 1, b - 1), o2 = owner(a, b - 1); break;
    }
    return !(o1 != 0 && o1 == o2);
}

HananGraph HananGraph::build(const Instance& inst, std::vector<Coord> xs, std::vector<Coord> ys) {
    for (const auto& o : inst.obstacles)
        for (const Point& v : o.vertices) xs.push_back(v.x), ys.push_back(v.y);
    for (const Point& c : inst.source.corners()) xs.push_back(c.x), ys.push_back(c.y);
    for (const Point& c : inst.target.corners()) xs.push_back(c.x), ys.push_back(c.y);
    sort_unique(xs);
    sort_unique(ys);
    if (xs.size() > kOracleMaxSide || ys.size() > kOracleMaxSide)
        throw OracleRefused("Hanan grid " + std::to_string(xs.size()) + " x " + std::to_string(ys.size()) +
                            " exceeds the 500 x 500 oracle limit");
    HananGraph g{std::move(xs), std::move(ys), {}};
    std::size_t cw = g.nx() > 0 ? g.nx() - 1 : 0, ch = g.ny() > 0 ? g.ny() - 1 : 0;
    g.cell_owner.assign(cw * ch, 0);
    for (std::size_t k = 0; k < inst.obstacles.size(); ++k) {
        const RectPolygon& p = inst.obstacles[k];
        Rect b = bounding_box(p);
        std::size_t j0 = index_of(g.ys, b.ylo), j1 = index_of(g.ys, b.yhi);
        std::vector<Coord> cross;
        for (std::size_t j = j0; j < j1; ++j) {
            cross.clear();
            for (std::size_t e = 0; e < p.size(); ++e) {
                Point a = p[e], c = p[e + 1];
                if (a.x != c.x) continue;
                if (std::min(a.y, c.y) <= g.ys[j] && std::max(a.y, c.y) >= g.ys[j + 1]) cross.push_back(a.x);
            }
            std::sort(cross.begin(), cross.end());
            for (std::size_t q = 0; q + 1 < cross.size(); q += 2) {
                std::size_t i0 = index_of(g.xs, cross[q]), i1 = index_of(g.xs, cross[q + 1]);
                for (std::size_t i = i0; i < i1; ++i) g.cell_owner[j * cw + i] = static_cast<int>(k) + 1;
            }
        }
    }
    return g;
}

OracleAnswer oracle_solve(const Instance& inst) {
    HananGraph g = HananGraph::build(inst);
    auto src = terminal_nodes(g, inst.source);
    auto dst = terminal_nodes(g, inst.target);
    std::size_t nx = g.nx(), ny = g.ny();
    std::vector<char> is_target(nx * ny, 0);
    for (auto [i, j] : dst) is_target[j * nx + i] = 1;

    OracleAnswer ans;
    for (auto [i, j] : src) {
        if (is_target[j * nx + i]) {
            ans.dist = 0;
            ans.min_links = 0;
            ans.witness = {{g.xs[i], g.ys[j]}};
            ans.closest_pairs = oracle_closest_pairs(inst);
            return ans;
        }
    }

    std::size_t states = nx * ny * 4;
    std::vector<Cost> best(states);
    std::vector<long> pred(states, -1);
    using Entry = std::pair<Cost, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    for (auto [i, j] : src) {
        for (int d = 0; d < 4; ++d) {
            std::size_t s = (j * nx + i) * 4 + static_cast<std::size_t>(d);
            best[s] = Cost{0, 1};
            pq.push({best[s], s});
        }
    }
    std::size_t goal = SIZE_MAX;
    while (!pq.empty()) {
        auto [c, s] = pq.top();
        pq.pop();
        if (c != best[s]) continue;
        std::size_t node = s / 4;
        int d = static_cast<int>(s % 4);
        std::size_t i = node % nx, j = node / nx;
        // A state only exists once a link has moved, except at sources where
        // the heading is free; both cases are target hits.
        if (is_target[node] && c.len > 0) {
            goal = s;
            break;
        }
        for (int nd = 0; nd < 4; ++nd) {
            long ni = static_cast<long>(i) + kDx[nd], nj = static_cast<long>(j) + kDy[nd];
            if (ni < 0 || nj < 0 || ni >= static_cast<long>(nx) || nj >= static_cast<long>(ny)) continue;
            if (!g.edge_free(i, j, nd)) continue;
            Coord step = nd % 2 == 0 ? std::abs(g.xs[static_cast<std::size_t>(ni)] - g.xs[i])
                                     : std::abs(g.ys[static_cast<std::size_t>(nj)] - g.ys[j]);
            bool at_start = c.len == 0;
            Cost nc{c.len + step, c.links + ((nd == d || at_start) ? 0 : 1)};
            std::size_t ns = (static_cast<std::size_t>(nj) * nx + static_cast<std::size_t>(ni)) * 4 +
                             static_cast<std::size_t>(nd);
            if (nc < best[ns]) {
                best[ns] = nc;
                pred[ns] = static_cast<long>(s);
                pq.push({nc, ns});
            }
        }
    }
    if (goal == SIZE_MAX) throw std::logic_error("oracle: target unreachable");
    ans.dist = best[goal].len;
    ans.min_links = best[goal].links;
    std::vector<Point> pts;
    for (long s = static_cast<long>(goal); s != -1; s = pred[static_cast<std::size_t>(s)]) {
        std::size_t node = static_cast<std::size_t>(s) / 4;
        pts.push_back({g.xs[node % nx], g.ys[node / nx]});
    }
    std::reverse(pts.begin(), pts.end());
    ans.witness = simplify_polyline(pts);
    ans.closest_pairs = oracle_closest_pairs(inst);
    return ans;
}

namespace {

std::vector<Coord> lengths_from(const HananGraph& g, const std::vector<std::pair<std::size_t, std::size_t>>& seeds) {
    std::size_t nx = g.nx(), ny = g.ny();
    std::vector<Coord> dist(nx * ny, std::numeric_limits<Coord>::max());
    using Entry = std::pair<Coord, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    for (auto [i, j] : seeds) {
        dist[j * nx + i] = 0;
        pq.push({0, j * nx + i});
    }
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        std::size_t i = v % nx, j = v / nx;
        for (int nd = 0; nd < 4; ++nd) {
            long ni = static_cast<long>(i) + kDx[nd], nj = static_cast<long>(j) + kDy[nd];
            if (ni < 0 || nj < 0 || ni >= static_cast<long>(nx) || nj >= static_cast<long>(ny)) continue;
            if (!g.edge_free(i, j, nd)) continue;
            std::size_t w = static_cast<std::size_t>(nj) * nx + static_cast<std::size_t>(ni);
            Coord step = nd % 2 == 0 ? std::abs(g.xs[static_cast<std::size_t>(ni)] - g.xs[i])
                                     : std::abs(g.ys[static_cast<std::size_t>(nj)] - g.ys[j]);
            if (d + step < dist[w]) {
                dist[w] = d + step;
                pq.push({dist[w], w});
            }
        }
    }
    return dist;
}

}  // namespace

std::pair<Coord, int> oracle_solve_dag(const Instance& inst) {
    HananGraph g = HananGraph::build(inst);
    auto src = terminal_nodes(g, inst.source);
    auto dst = terminal_nodes(g, inst.target);
    std::size_t nx = g.nx(), ny = g.ny();
    std::vector<Coord> ds = lengths_from(g, src);
    Coord best = std::numeric_limits<Coord>::max();
    for (auto [i, j] : dst) best = std::min(best, ds[j * nx + i]);
    if (best == 0) return {0, 0};

    // Nodes in order of distance; DAG edges go from u to v when the step is tight.
    std::vector<std::size_t> order(nx * ny);
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ds[a] < ds[b]; });
    constexpr int kInf = std::numeric_limits<int>::max() / 4;
    // links[v*5 + d]: d < 4 last heading, d == 4 not yet moved (sources only).
    std::vector<int> links(nx * ny * 5, kInf);
    for (auto [i, j] : src) links[(j * nx + i) * 5 + 4] = 0;
    for (std::size_t v : order) {
        if (ds[v] == std::numeric_limits<Coord>::max()) break;
        std::size_t i = v % nx, j = v / nx;
        for (int nd = 0; nd < 4; ++nd) {
            long ni = static_cast<long>(i) + kDx[nd], nj = static_cast<long>(j) + kDy[nd];
            if (ni < 0 || nj < 0 || ni >= static_cast<long>(nx) || nj >= static_cast<long>(ny)) continue;
            if (!g.edge_free(i, j, nd)) continue;
            std::size_t w = static_cast<std::size_t>(nj) * nx + static_cast<std::size_t>(ni);
            Coord step = nd % 2 == 0 ? std::abs(g.xs[static_cast<std::size_t>(ni)] - g.xs[i])
                                     : std::abs(g.ys[static_cast<std::size_t>(nj)] - g.ys[j]);
            if (ds[v] + step != ds[w]) continue;
            int cand = links[v * 5 + 4] == 0 ? 1 : kInf;
            for (int d = 0; d < 4; ++d) {
                int l = links[v * 5 + static_cast<std::size_t>(d)];
                if (l >= kInf) continue;
                cand = std::min(cand, l + (d == nd ? 0 : 1));
            }
            int& slot = links[w * 5 + static_cast<std::size_t>(nd)];
            slot = std::min(slot, cand);
        }
    }
    int lk = kInf;
    for (auto [i, j] : dst) {
        std::size_t v = j * nx + i;
        if (ds[v] != best) continue;
        for (int d = 0; d < 4; ++d) lk = std::min(lk, links[v * 5 + static_cast<std::size_t>(d)]);
    }
    return {best, lk};
}

std::set<std::pair<Point, Point>> oracle_closest_pairs(const Instance& inst) {
    HananGraph g = HananGraph::build(inst);
    auto src = terminal_nodes(g, inst.source);
    auto dst = terminal_nodes(g, inst.target);
    std::size_t nx = g.nx();
    std::vector<Coord> dt = lengths_from(g, dst);
    Coord best = std::numeric_limits<Coord>::max();
    for (auto [i, j] : src) best = std::min(best, dt[j * nx + i]);
    std::set<std::pair<Point, Point>> pairs;
    for (auto s : src) {
        if (dt[s.second * nx + s.first] != best) continue;
        std::vector<Coord> d1 = lengths_from(g, {s});
        for (auto [i, j] : dst)
            if (d1[j * nx + i] == best) pairs.insert({{g.xs[s.first], g.ys[s.second]}, {g.xs[i], g.ys[j]}});
    }
    return pairs;
}

Instance boxed_instance(const Instance& inst) {
    Instance out = inst;
    for (auto& o : out.obstacles) o = RectPolygon::from_rect(bounding_box(o));
    return out;
}

Instance hulled_instance(const Instance& inst) {
    Instance out = inst;
    for (auto& o : out.obstacles) o = rectilinear_convex_hull(o);
    return out;
}

}  // namespace mlsp
