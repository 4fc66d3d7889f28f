#include "mlsp/ray_shooter.h"

#include <algorithm>

namespace mlsp {

void RayShooter::Stabber::build(std::vector<Item> items, bool closed) {
    coords_.clear();
    for (const Item& it : items) coords_.push_back(it.lo), coords_.push_back(it.hi);
    std::sort(coords_.begin(), coords_.end());
    coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
    slots_ = 2 * coords_.size() + 1;
    nodes_.assign(4 * slots_, {});
    for (const Item& it : items) {
        std::size_t l = slot(it.lo), r = slot(it.hi);
        if (!closed) {
            if (r <= l + 1) continue;
            ++l, --r;
        }
        insert(1, 0, slots_ - 1, l, r, {it.pos, it.id});
    }
    for (auto& n : nodes_) std::sort(n.begin(), n.end());
}

std::size_t RayShooter::Stabber::slot(Coord v) const {
    auto it = std::lower_bound(coords_.begin(), coords_.end(), v);
    std::size_t j = static_cast<std::size_t>(it - coords_.begin());
    if (it != coords_.end() && *it == v) return 2 * j + 1;
    return 2 * j;
}

void RayShooter::Stabber::insert(std::size_t node, std::size_t nl, std::size_t nr, std::size_t l, std::size_t r,
                                 std::pair<Coord, std::size_t> entry) {
    if (r < nl || nr < l) return;
    if (l <= nl && nr <= r) {
        nodes_[node].push_back(entry);
        return;
    }
    std::size_t mid = (nl + nr) / 2;
    insert(2 * node, nl, mid, l, r, entry);
    insert(2 * node + 1, mid + 1, nr, l, r, entry);
}

std::optional<std::pair<Coord, std::size_t>> RayShooter::Stabber::query(Coord across, Coord from, bool forward) const {
    if (slots_ == 0) return std::nullopt;
    std::size_t s = slot(across);
    std::optional<std::pair<Coord, std::size_t>> best;
    auto better = [&](const std::pair<Coord, std::size_t>& c) {
        if (!best) return true;
        if (c.first != best->first) return forward ? c.first < best->first : c.first > best->first;
        return c.second < best->second;
    };
    std::size_t node = 1, nl = 0, nr = slots_ - 1;
    while (true) {
        const auto& v = nodes_[node];
        if (!v.empty()) {
            if (forward) {
                auto it = std::upper_bound(v.begin(), v.end(), std::make_pair(from, SIZE_MAX));
                if (it != v.end() && better(*it)) best = *it;
            } else {
                auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(from, std::size_t{0}));
                if (it != v.begin()) {
                    // Among equal positions prefer the smallest id.
                    Coord p = std::prev(it)->first;
                    auto first = std::lower_bound(v.begin(), it, std::make_pair(p, std::size_t{0}));
                    if (better(*first)) best = *first;
                }
            }
        }
        if (nl == nr) break;
        std::size_t mid = (nl + nr) / 2;
        if (s <= mid) node = 2 * node, nr = mid;
        else node = 2 * node + 1, nl = mid + 1;
    }
    return best;
}

RayShooter::RayShooter(std::vector<OrthoSegment> segments, bool closed) : segs_(std::move(segments)), closed_(closed) {
    std::vector<Stabber::Item> hr, vr, chf, chb, cvf, cvb;
    for (std::size_t i = 0; i < segs_.size(); ++i) {
        const OrthoSegment& s = segs_[i];
        if (s.is_point) {
            hr.push_back({s.first().x, s.first().y, s.first().y, i});
            vr.push_back({s.first().y, s.first().x, s.first().x, i});
            continue;
        }
        if (s.orientation == Orientation::Vertical) {
            hr.push_back({s.fixed, s.lo, s.hi, i});
            cvf.push_back({s.lo, s.fixed, s.fixed, i});
            cvb.push_back({s.hi, s.fixed, s.fixed, i});
        } else {
            vr.push_back({s.fixed, s.lo, s.hi, i});
            chf.push_back({s.lo, s.fixed, s.fixed, i});
            chb.push_back({s.hi, s.fixed, s.fixed, i});
        }
    }
    horizontal_rays_.build(std::move(hr), closed);
    vertical_rays_.build(std::move(vr), closed);
    if (closed) {
        collinear_h_fwd_.build(std::move(chf), true);
        collinear_h_bwd_.build(std::move(chb), true);
        collinear_v_fwd_.build(std::move(cvf), true);
        collinear_v_bwd_.build(std::move(cvb), true);
    }
}

std::optional<RayShooter::Hit> RayShooter::shoot(Point o, Direction d) const {
    bool horizontal = d == Direction::Left || d == Direction::Right;
    bool forward = d == Direction::Right || d == Direction::Up;
    Coord across = horizontal ? o.y : o.x;
    Coord from = horizontal ? o.x : o.y;
    auto a = (horizontal ? horizontal_rays_ : vertical_rays_).query(across, from, forward);
    std::optional<std::pair<Coord, std::size_t>> b;
    if (closed_) {
        const Stabber& c = horizontal ? (forward ? collinear_h_fwd_ : collinear_h_bwd_)
                                      : (forward ? collinear_v_fwd_ : collinear_v_bwd_);
        b = c.query(across, from, forward);
    }
    std::optional<std::pair<Coord, std::size_t>> best = a;
    if (b && (!best || (forward ? b->first < best->first : b->first > best->first) ||
              (b->first == best->first && b->second < best->second)))
        best = b;
    if (!best) return std::nullopt;
    Point p = horizontal ? Point{best->first, o.y} : Point{o.x, best->first};
    return Hit{p, best->second};
}

std::optional<RayShooter::Hit> shoot_linear(const std::vector<OrthoSegment>& segs, Point o, Direction d, bool closed) {
    bool horizontal = d == Direction::Left || d == Direction::Right;
    bool forward = d == Direction::Right || d == Direction::Up;
    Coord across = horizontal ? o.y : o.x;
    Coord from = horizontal ? o.x : o.y;
    std::optional<std::pair<Coord, std::size_t>> best;
    auto offer = [&](Coord pos, std::size_t id) {
        if (forward ? pos <= from : pos >= from) return;
        if (!best || (forward ? pos < best->first : pos > best->first) || (pos == best->first && id < best->second))
            best = std::make_pair(pos, id);
    };
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const OrthoSegment& s = segs[i];
        bool perpendicular = s.is_point || (horizontal ? s.orientation == Orientation::Vertical
                                                       : s.orientation == Orientation::Horizontal);
        Coord pos = horizontal ? s.first().x : s.first().y;
        Coord lo = horizontal ? s.first().y : s.first().x;
        Coord hi = horizontal ? s.second().y : s.second().x;
        if (perpendicular) {
            bool in = closed ? (lo <= across && across <= hi) : (lo < across && across < hi);
            if (in) offer(pos, i);
        } else if (closed && s.fixed == across && !(s.lo <= from && from <= s.hi)) {
            offer(forward ? s.lo : s.hi, i);
        }
    }
    if (!best) return std::nullopt;
    Point p = horizontal ? Point{best->first, o.y} : Point{o.x, best->first};
    return RayShooter::Hit{p, best->second};
}

}  // namespace mlsp
