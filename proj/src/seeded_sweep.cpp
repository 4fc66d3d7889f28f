#include "mlsp/seeded_sweep.h"

#include <algorithm>
#include <limits>
#include <map>

namespace mlsp {

int join_links(int links_a, LinkDir a, int links_b, LinkDir b) {
    return links_a + links_b - (a == b && a != LinkDir::None ? 1 : 0);
}

namespace {

constexpr Coord kInfK = std::numeric_limits<Coord>::max() / 4;

// Best partial path in the current state. K is length minus the sweep
// abscissa, so it stays constant along horizontal travel.
struct Val {
    Coord k = kInfK;
    int links = 0;
    int rec = -1;    // last materialized vertex
    int turn = -1;   // vertical states: baseline where the vertical link starts
    bool finite() const { return k < kInfK; }
    bool operator<(const Val& o) const { return k != o.k ? k < o.k : links < o.links; }
};

struct Record {
    Point p;
    int prev = -1;
    int tag = -1;
};

struct Best {
    bool found = false;
    Coord dist = 0;
    int links = 0;
    int rec = -1;
    Point end;
    int sink_tag = -1;

    void offer(Coord d, int l, int r, Point e, int tag) {
        if (found && (d > dist || (d == dist && l >= links))) return;
        found = true, dist = d, links = l, rec = r, end = e, sink_tag = tag;
    }
};

LinkDir swap_axes(LinkDir d) {
    if (d == LinkDir::H) return LinkDir::V;
    if (d == LinkDir::V) return LinkDir::H;
    return d;
}

// Per slab between consecutive event abscissae: which gaps between
// consecutive baselines lie inside an obstacle.
std::vector<std::vector<char>> slab_interiors(const std::vector<RectPolygon>& obs, const std::vector<Coord>& xs,
                                              const std::vector<Coord>& ys) {
    std::size_t gaps = ys.size() > 0 ? ys.size() - 1 : 0;
    std::vector<std::vector<char>> out(xs.size() > 0 ? xs.size() - 1 : 0, std::vector<char>(gaps, 0));
    auto yi = [&](Coord y) { return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()); };
    for (const RectPolygon& p : obs) {
        Rect b = bounding_box(p);
        std::vector<OrthoSegment> hs;
        for (const OrthoSegment& e : p.edges())
            if (e.orientation == Orientation::Horizontal) hs.push_back(e);
        auto first = std::lower_bound(xs.begin(), xs.end(), b.xlo) - xs.begin();
        for (auto i = static_cast<std::size_t>(first); i + 1 < xs.size() && xs[i + 1] <= b.xhi; ++i) {
            std::vector<Coord> cut;
            for (const OrthoSegment& e : hs)
                if (e.lo <= xs[i] && e.hi >= xs[i + 1]) cut.push_back(e.fixed);
            std::sort(cut.begin(), cut.end());
            for (std::size_t j = 0; j + 1 < cut.size(); j += 2)
                for (std::size_t g = yi(cut[j]); g < yi(cut[j + 1]); ++g) out[i][g] = 1;
        }
    }
    return out;
}

}  // namespace

SeededAnswer seeded_sweep(const std::vector<RectPolygon>& obstacles, const std::vector<SweepSource>& sources_in,
                          const std::vector<SweepSink>& sinks_in, const GridMap& frame) {
    bool swapped = frame.b != 0;
    std::vector<RectPolygon> obs;
    obs.reserve(obstacles.size());
    for (const RectPolygon& p : obstacles) obs.push_back(map_polygon(p, frame));
    std::vector<SweepSource> sources = sources_in;
    for (SweepSource& s : sources) {
        s.p = frame.apply(s.p);
        if (swapped) s.dir = swap_axes(s.dir);
    }
    std::vector<SweepSink> sinks = sinks_in;
    for (SweepSink& s : sinks) {
        s.p = frame.apply(s.p);
        if (swapped) s.dir = swap_axes(s.dir);
    }

    std::vector<Coord> xs, ys;
    for (const RectPolygon& p : obs)
        for (const Point& v : p.vertices) xs.push_back(v.x), ys.push_back(v.y);
    for (const SweepSource& s : sources) xs.push_back(s.p.x), ys.push_back(s.p.y);
    for (const SweepSink& s : sinks) xs.push_back(s.p.x), ys.push_back(s.p.y);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    SeededAnswer answer;
    answer.events = xs.size();
    if (sources.empty() || sinks.empty()) return answer;

    auto yi = [&](Coord y) { return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()); };
    std::multimap<Coord, std::size_t> src_at, sink_at;
    for (std::size_t i = 0; i < sources.size(); ++i) src_at.emplace(sources[i].p.x, i);
    for (std::size_t i = 0; i < sinks.size(); ++i) sink_at.emplace(sinks[i].p.x, i);

    const std::size_t m = ys.size();
    auto slabs = slab_interiors(obs, xs, ys);
    const std::vector<char> none(m > 0 ? m - 1 : 0, 0);

    std::vector<Record> recs;
    auto add_rec = [&](Point p, int prev) {
        if (prev >= 0 && recs[static_cast<std::size_t>(prev)].p == p) return prev;
        recs.push_back({p, prev, -1});
        return static_cast<int>(recs.size()) - 1;
    };
    std::vector<int> root(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
        recs.push_back({sources[i].p, -1, sources[i].tag});
        root[i] = static_cast<int>(recs.size()) - 1;
    }

    std::vector<Val> val(m), vert(m);
    Best best;
    for (std::size_t e = 0; e < xs.size(); ++e) {
        const Coord x = xs[e];
        const std::vector<char>& before = e > 0 ? slabs[e - 1] : none;
        const std::vector<char>& after = e + 1 < xs.size() ? slabs[e] : none;
        auto srcs = src_at.equal_range(x);
        auto snks = sink_at.equal_range(x);

        // Horizontal arrivals and zero-length source-to-sink joins.
        for (auto it = snks.first; it != snks.second; ++it) {
            const SweepSink& t = sinks[it->second];
            const Val& v = val[yi(t.p.y)];
            if (v.finite())
                best.offer(v.k + x + t.dist, join_links(v.links, LinkDir::H, t.links, t.dir), v.rec, t.p, t.tag);
            for (auto jt = srcs.first; jt != srcs.second; ++jt) {
                const SweepSource& s = sources[jt->second];
                if (s.p == t.p)
                    best.offer(s.dist + t.dist, join_links(s.links, s.dir, t.links, t.dir), root[jt->second], t.p,
                               t.tag);
            }
        }

        // Vertical links at x, within maximal runs of passable gaps.
        std::vector<Val> cand(m);
        for (std::size_t k = 0; k < m; ++k)
            if (val[k].finite()) cand[k] = {val[k].k, val[k].links + 1, val[k].rec, static_cast<int>(k)};
        for (auto it = srcs.first; it != srcs.second; ++it) {
            const SweepSource& s = sources[it->second];
            std::size_t k = yi(s.p.y);
            Val c{s.dist - x, s.links + (s.dir == LinkDir::V ? 0 : 1), root[it->second], static_cast<int>(k)};
            if (c < cand[k]) cand[k] = c;
        }
        std::vector<Val> up(m), down(m);
        for (std::size_t k = 0; k < m; ++k) {
            up[k] = cand[k];
            if (k > 0 && !(before[k - 1] && after[k - 1]) && up[k - 1].finite()) {
                Val w = up[k - 1];
                w.k += ys[k] - ys[k - 1];
                if (w < up[k]) up[k] = w;
            }
        }
        for (std::size_t k = m; k-- > 0;) {
            down[k] = cand[k];
            if (k + 1 < m && !(before[k] && after[k]) && down[k + 1].finite()) {
                Val w = down[k + 1];
                w.k += ys[k + 1] - ys[k];
                if (w < down[k]) down[k] = w;
            }
            vert[k] = down[k] < up[k] ? down[k] : up[k];
        }
        std::map<std::pair<int, int>, int> turn_rec;
        auto start_of = [&](const Val& v) {
            auto key = std::make_pair(v.rec, v.turn);
            auto it = turn_rec.find(key);
            if (it != turn_rec.end()) return it->second;
            int r = add_rec({x, ys[static_cast<std::size_t>(v.turn)]}, v.rec);
            turn_rec.emplace(key, r);
            return r;
        };

        for (auto it = snks.first; it != snks.second; ++it) {
            const SweepSink& t = sinks[it->second];
            const Val& v = vert[yi(t.p.y)];
            if (v.finite())
                best.offer(v.k + x + t.dist, join_links(v.links, LinkDir::V, t.links, t.dir), start_of(v), t.p,
                           t.tag);
        }

        // New horizontal states leaving x.
        std::vector<Val> next(m);
        for (std::size_t k = 0; k < m; ++k) {
            bool below = k > 0 && after[k - 1];
            bool above = k + 1 < m && after[k];
            if (below && above) continue;
            Val v = val[k];
            if (vert[k].finite()) {
                Val w{vert[k].k, vert[k].links + 1, -1, -1};
                if (w < v) {
                    w.rec = add_rec({x, ys[k]}, start_of(vert[k]));
                    v = w;
                }
            }
            next[k] = v;
        }
        for (auto it = srcs.first; it != srcs.second; ++it) {
            const SweepSource& s = sources[it->second];
            std::size_t k = yi(s.p.y);
            bool below = k > 0 && after[k - 1];
            bool above = k + 1 < m && after[k];
            if (below && above) continue;
            Val w{s.dist - x, s.links + (s.dir == LinkDir::H ? 0 : 1), root[it->second], -1};
            if (w < next[k]) next[k] = w;
        }
        val.swap(next);
    }

    if (!best.found) return answer;
    answer.found = true;
    answer.dist = best.dist;
    answer.links = best.links;
    answer.sink_tag = best.sink_tag;
    std::vector<Point> pts{best.end};
    int r = best.rec;
    while (r >= 0) {
        const Record& rec = recs[static_cast<std::size_t>(r)];
        pts.push_back(rec.p);
        if (rec.prev < 0) answer.source_tag = rec.tag;
        r = rec.prev;
    }
    std::reverse(pts.begin(), pts.end());
    answer.polyline = map_points(simplify_polyline(pts), frame.inverse());
    return answer;
}

SeededAnswer seeded_solve(const std::vector<RectPolygon>& obstacles, const std::vector<SweepSource>& sources,
                          const std::vector<SweepSink>& sinks) {
    SeededAnswer best;
    std::size_t events = 0;
    for (const GridMap& f : {GridMap::identity(), GridMap::mirror_x(), GridMap::transpose(), GridMap{0, -1, 1, 0}}) {
        SeededAnswer a = seeded_sweep(obstacles, sources, sinks, f);
        events += a.events;
        if (a.found && (!best.found || a.dist < best.dist || (a.dist == best.dist && a.links < best.links)))
            best = std::move(a);
    }
    best.events = events;
    return best;
}

}  // namespace mlsp
