#include "mlsp/generator.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>

namespace mlsp {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    // Uniform in [lo, hi].
    Coord range(Coord lo, Coord hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<Coord>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int percent) { return range(0, 99) < percent; }

private:
    std::mt19937_64 eng_;
};

// Cell mask in rank space: cells[y][x].
using Mask = std::vector<std::vector<bool>>;

Mask full_mask(std::size_t w, std::size_t h) { return Mask(h, std::vector<bool>(w, true)); }

Mask transformed(const Mask& m, int code) {
    std::size_t h = m.size(), w = m[0].size();
    bool tr = code & 4;
    std::size_t ow = tr ? h : w, oh = tr ? w : h;
    Mask out(oh, std::vector<bool>(ow, false));
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            std::size_t nx = (code & 1) ? w - 1 - x : x;
            std::size_t ny = (code & 2) ? h - 1 - y : y;
            if (tr) std::swap(nx, ny);
            out[ny][nx] = m[y][x];
        }
    return out;
}

Mask random_mask(Rng& rng, int max_vertices) {
    int kind = static_cast<int>(rng.range(0, 10));
    Mask m;
    if (kind <= 2) {
        m = full_mask(1, 1);
    } else if (kind <= 4) {
        m = full_mask(2, 2);
        m[1][1] = false;
    } else if (kind <= 6) {
        m = full_mask(3, 2);
        m[1][1] = false;
    } else if (kind == 7) {
        std::size_t k = static_cast<std::size_t>(rng.range(2, 4));
        m = full_mask(k, k);
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t x = 0; x < k; ++x) m[y][x] = x + y < k;
    } else if (kind == 10) {
        // Hook: the pocket turns a corner, so part of it sees no door.
        m = full_mask(4, 4);
        m[1][1] = m[2][1] = m[3][1] = m[1][2] = false;
    } else {
        // Comb: columns of random height on a common base; adjacent columns
        // differ so every column contributes corners.
        std::size_t cols = static_cast<std::size_t>(rng.range(2, std::max<Coord>(2, (max_vertices - 2) / 2)));
        std::size_t rows = static_cast<std::size_t>(rng.range(2, 4));
        m = full_mask(cols, rows);
        std::size_t prev = 0;
        for (std::size_t x = 0; x < cols; ++x) {
            std::size_t hgt;
            do hgt = static_cast<std::size_t>(rng.range(1, static_cast<Coord>(rows)));
            while (hgt == prev && rows > 1);
            prev = hgt;
            for (std::size_t y = hgt; y < rows; ++y) m[y][x] = false;
        }
    }
    return transformed(m, static_cast<int>(rng.range(0, 7)));
}

// Picks `count` sorted distinct values in [lo, hi] avoiding `used`, always
// including lo and hi. Returns empty on failure.
std::vector<Coord> pick_coords(Rng& rng, Coord lo, Coord hi, std::size_t count, const std::set<Coord>& used) {
    if (used.count(lo) || used.count(hi) || hi - lo + 1 < static_cast<Coord>(count)) return {};
    std::set<Coord> chosen{lo, hi};
    for (int tries = 0; chosen.size() < count && tries < 200; ++tries) {
        Coord v = rng.range(lo + 1, hi - 1);
        if (!used.count(v)) chosen.insert(v);
    }
    if (chosen.size() < count) return {};
    return {chosen.begin(), chosen.end()};
}

RectPolygon polygon_from_mask(const Mask& m, const std::vector<Coord>& xs, const std::vector<Coord>& ys) {
    CellGrid g{xs, ys, std::vector<std::uint8_t>((xs.size() - 1) * (ys.size() - 1), 0)};
    for (std::size_t y = 0; y < m.size(); ++y)
        for (std::size_t x = 0; x < m[0].size(); ++x) g.set(x, y, m[y][x]);
    auto cycles = cell_boundaries(g);
    return normalize_polygon(cycles.at(0));
}

bool extreme_sides_odd(const RectPolygon& p) {
    RectPolygon h = rectilinear_convex_hull(p);
    Rect b = bounding_box(h);
    for (const OrthoSegment& e : h.edges())
        if (e.orientation == Orientation::Horizontal && (e.fixed == b.ylo || e.fixed == b.yhi) && e.length() % 2 == 0)
            return false;
    return true;
}

struct Placement {
    std::set<Coord> used_x, used_y;
};

std::optional<RectPolygon> random_shape(Rng& rng, const GenOptions& opt, Coord side_max, const Placement& pl,
                                        int max_vertices, bool odd_extremes) {
    Mask m = random_mask(rng, max_vertices);
    std::size_t w = m[0].size(), h = m.size();
    Coord bw = rng.range(static_cast<Coord>(w) + 1, std::max<Coord>(static_cast<Coord>(w) + 1, side_max));
    Coord bh = rng.range(static_cast<Coord>(h) + 1, std::max<Coord>(static_cast<Coord>(h) + 1, side_max));
    if (bw > opt.coord_max || bh > opt.coord_max) return std::nullopt;
    Coord x0 = rng.range(0, opt.coord_max - bw), y0 = rng.range(0, opt.coord_max - bh);
    auto xs = pick_coords(rng, x0, x0 + bw, w + 1, pl.used_x);
    auto ys = pick_coords(rng, y0, y0 + bh, h + 1, pl.used_y);
    if (xs.empty() || ys.empty()) return std::nullopt;
    RectPolygon p = polygon_from_mask(m, xs, ys);
    if (static_cast<int>(p.size()) > max_vertices) return std::nullopt;
    if (odd_extremes && !extreme_sides_odd(p)) return std::nullopt;
    return p;
}

bool point_ok(const Instance& inst, const std::vector<Rect>& boxes, Point p, bool allow_pocket) {
    for (std::size_t i = 0; i < inst.obstacles.size(); ++i) {
        if (locate(inst.obstacles[i], p) != Location::Outside) return false;
        if (!allow_pocket && boxes[i].contains_open(p)) return false;
    }
    return true;
}

}  // namespace

Instance generate_instance(const GenOptions& opt) {
    if (opt.obstacles < 0) throw GenerationFailure("obstacle count must be non-negative");
    if (opt.coord_max < 8) throw GenerationFailure("coordinate range too small");
    Rng rng(opt.seed);
    Instance inst;
    Placement pl;
    std::vector<Rect> boxes;
    Coord side_max = std::max<Coord>(4, static_cast<Coord>(1.3 * static_cast<double>(opt.coord_max) /
                                                              std::sqrt(static_cast<double>(opt.obstacles) + 1.0)));

    for (int k = 0; k < opt.obstacles; ++k) {
        bool placed = false;
        for (int attempt = 0; attempt < 400 && !placed; ++attempt) {
            auto p = random_shape(rng, opt, std::max<Coord>(4, side_max * (400 - attempt) / 400), pl, 12, true);
            if (!p) continue;
            Rect b = bounding_box(*p);
            bool clash = std::any_of(boxes.begin(), boxes.end(), [&](const Rect& o) { return o.interiors_overlap(b); });
            if (clash) continue;
            for (const Point& v : p->vertices) pl.used_x.insert(v.x), pl.used_y.insert(v.y);
            boxes.push_back(b);
            inst.obstacles.push_back(std::move(*p));
            placed = true;
        }
        if (!placed)
            throw GenerationFailure("could not place obstacle " + std::to_string(k) + " within coordinate range " +
                                    std::to_string(opt.coord_max));
    }

    auto free_coord = [&](const std::set<Coord>& used, Coord lo, Coord hi) -> std::optional<Coord> {
        for (int t = 0; t < 200; ++t) {
            Coord v = rng.range(lo, hi);
            if (!used.count(v)) return v;
        }
        return std::nullopt;
    };

    std::vector<Rect> terminal_boxes;
    auto make_terminal = [&]() -> Terminal {
        for (int attempt = 0; attempt < 2000; ++attempt) {
            if (opt.kind == TerminalKind::Point) {
                Coord lo_x = 0, hi_x = opt.coord_max, lo_y = 0, hi_y = opt.coord_max;
                if (opt.allow_box_pierce && !boxes.empty() && rng.chance(50)) {
                    const Rect& b = boxes[static_cast<std::size_t>(rng.range(0, static_cast<Coord>(boxes.size()) - 1))];
                    lo_x = b.xlo, hi_x = b.xhi, lo_y = b.ylo, hi_y = b.yhi;
                }
                auto x = free_coord(pl.used_x, lo_x, hi_x), y = free_coord(pl.used_y, lo_y, hi_y);
                if (!x || !y) continue;
                Point p{*x, *y};
                if (point_ok(inst, boxes, p, opt.allow_box_pierce)) return Terminal::point(p);
            } else if (opt.kind == TerminalKind::Segment) {
                bool horiz = rng.chance(50);
                const std::set<Coord>& fixed_used = horiz ? pl.used_y : pl.used_x;
                const std::set<Coord>& span_used = horiz ? pl.used_x : pl.used_y;
                auto f = free_coord(fixed_used, 0, opt.coord_max);
                auto a = free_coord(span_used, 0, opt.coord_max);
                if (!f || !a) continue;
                Coord len_max = std::max<Coord>(2, opt.coord_max / 3);
                auto b = free_coord(span_used, std::max<Coord>(0, *a - len_max), std::min(opt.coord_max, *a + len_max));
                if (!b || *a == *b) continue;
                Point pa = horiz ? Point{*a, *f} : Point{*f, *a};
                Point pb = horiz ? Point{*b, *f} : Point{*f, *b};
                OrthoSegment s = OrthoSegment::between(pa, pb);
                bool ok = true;
                int entered = 0;
                for (std::size_t i = 0; i < inst.obstacles.size() && ok; ++i) {
                    if (meets_closed(inst.obstacles[i], s)) ok = false;
                    if (segment_enters_box(s, boxes[i])) ++entered;
                }
                if (ok && entered <= (opt.allow_box_pierce ? 2 : 0)) return Terminal::segment_between(pa, pb);
            } else {
                Coord side = std::max<Coord>(6, opt.coord_max / 6);
                auto p = random_shape(rng, opt, side, pl, opt.max_terminal_vertices, false);
                if (!p) continue;
                Rect b = bounding_box(*p);
                bool clash = std::any_of(boxes.begin(), boxes.end(), [&](const Rect& o) { return o.interiors_overlap(b); }) ||
                             std::any_of(terminal_boxes.begin(), terminal_boxes.end(), [&](const Rect& o) {
                                 return o.xlo <= b.xhi && b.xlo <= o.xhi && o.ylo <= b.yhi && b.ylo <= o.yhi;
                             });
                if (clash) continue;
                terminal_boxes.push_back(b);
                return Terminal::polygon_of(std::move(*p));
            }
        }
        throw GenerationFailure("could not place a terminal within coordinate range " + std::to_string(opt.coord_max));
    };
    inst.source = make_terminal();
    inst.target = make_terminal();
    return inst;
}

}  // namespace mlsp
