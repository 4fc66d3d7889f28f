#include "mlsp/xy_sweep.h"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace mlsp {

namespace {

class Sweeper {
public:
    Sweeper(const StaircaseRegion& r, const SweepOptions& opt, LinkCountResult& out)
        : r_(r), opt_(opt), out_(out) {
        std::size_t m = r.baselines.size();
        if (opt.use_tree) store_ = std::make_unique<LinkTree>(m);
        else store_ = std::make_unique<ArrayLinkStore>(m);
    }

    void run() {
        out_.events = r_.events;
        out_.events.insert(out_.events.end(), opt_.extra.begin(), opt_.extra.end());
        std::stable_sort(out_.events.begin(), out_.events.end(), event_before);
        out_.trace.by_event.assign(out_.events.size(), {});
        for (std::size_t e = 0; e < out_.events.size(); ++e) {
            handle(static_cast<int>(e), out_.events[e]);
            if (opt_.debug_log) log_event(out_.events[e]);
        }
    }

private:
    using Ranges = std::map<std::size_t, std::size_t>;

    Ranges::iterator containing(std::size_t i) {
        auto it = ranges_.upper_bound(i);
        if (it == ranges_.begin()) return ranges_.end();
        --it;
        return it->second >= i ? it : ranges_.end();
    }

    Ranges::iterator ending_at(std::size_t i) {
        auto it = containing(i);
        if (it == ranges_.end() || it->second != i) fail("no range ends at baseline", i);
        return it;
    }

    Ranges::iterator starting_at(std::size_t i) {
        auto it = ranges_.find(i);
        if (it == ranges_.end()) fail("no range starts at baseline", i);
        return it;
    }

    [[noreturn]] void fail(const char* what, std::size_t i) const {
        throw std::logic_error(std::string("sweep: ") + what + " " + std::to_string(i));
    }

    RangeMin query(std::size_t a, std::size_t b) {
        RangeMin q = store_->range_min(a, b);
        out_.minima.emplace_back(q.value, q.index);
        return q;
    }

    void record(int e, const SweepEvent& ev, const RangeMin& q) {
        if (q.value >= kInfLinks) return;
        out_.trace.by_event[static_cast<std::size_t>(e)] = {true, q.index, q.provenance,
                                                          from_x(q.provenance), ev.x};
    }

    Coord from_x(int prov) const { return prov < 0 ? r_.s.x : out_.events[static_cast<std::size_t>(prov)].x; }

    void handle(int e, const SweepEvent& ev) {
        std::size_t a = ev.alpha, b = ev.beta;
        switch (ev.kind) {
            case EventKind::Originate: {
                if (containing(a) != ranges_.end()) fail("originate over an active baseline", a);
                ranges_[a] = b;
                store_->assign(a, a, opt_.start_links, e);
                if (b > a) store_->assign(a + 1, b, opt_.start_turn_links, e);
                originate_ = e;
                break;
            }
            case EventKind::Seed: {
                if (containing(a) == ranges_.end()) {
                    ++out_.dropped_seeds;
                    break;
                }
                store_->relax(a, a, ev.seed, e);
                break;
            }
            case EventKind::Attach: {
                auto it = ending_at(a);
                RangeMin q = query(it->first, a);
                record(e, ev, q);
                store_->assign(a + 1, b, add_links(q.value, 2), e);
                it->second = b;
                break;
            }
            case EventKind::Expose: {
                auto it = starting_at(b);
                std::size_t end = it->second;
                ranges_.erase(it);
                ranges_[a] = end;
                store_->assign(a, b - 1, kInfLinks, -1);
                break;
            }
            case EventKind::Detach: {
                auto it = starting_at(a);
                std::size_t end = it->second;
                if (end < b) fail("detach beyond its range", b);
                RangeMin q = query(a, b - 1);
                record(e, ev, q);
                store_->assign(a, b - 1, kInfLinks, -1);
                store_->relax(b, end, add_links(q.value, 2), e);
                ranges_.erase(it);
                ranges_[b] = end;
                break;
            }
            case EventKind::Retract: {
                auto it = containing(a);
                if (it == ranges_.end() || it->second != b) fail("retract does not end a range at", b);
                store_->assign(a + 1, b, kInfLinks, -1);
                it->second = a;
                break;
            }
            case EventKind::Split: {
                auto it = containing(a);
                if (it == ranges_.end() || it->second < b) fail("split outside a range at", a);
                std::size_t start = it->first, end = it->second;
                RangeMin q = query(start, b - 1);
                record(e, ev, q);
                if (b > a + 1) store_->assign(a + 1, b - 1, kInfLinks, -1);
                store_->relax(b, end, add_links(q.value, 2), e);
                it->second = a;
                ranges_[b] = end;
                break;
            }
            case EventKind::Merge: {
                auto lo = ending_at(a);
                auto hi = starting_at(b);
                std::size_t start = lo->first, end = hi->second;
                RangeMin q = query(start, a);
                record(e, ev, q);
                int v = add_links(q.value, 2);
                if (b > a + 1) store_->assign(a + 1, b - 1, v, e);
                store_->relax(b, end, v, e);
                ranges_.erase(hi);
                lo->second = end;
                break;
            }
            case EventKind::Read: {
                EndChoice c;
                if (containing(a) != ranges_.end()) {
                    RangeMin q = query(a, a);
                    c = {q.value, a, q.provenance, false};
                }
                out_.reads[ev.tag] = c;
                break;
            }
            case EventKind::Terminate: {
                RangeMin top = query(b, b);
                EndChoice c{top.value, b, top.provenance, false};
                if (b > a) {
                    RangeMin q = query(a, b - 1);
                    int via = add_links(q.value, opt_.terminal == TerminalRule::Any ? 1 : 2);
                    if (via < c.value) c = {via, q.index, q.provenance, true};
                }
                if (ev.x == r_.s.x && r_.baselines[a] == r_.s.y && originate_ >= 0) {
                    // t straight above s: one vertical link.
                    int direct = opt_.start_turn_links - 1;
                    if (opt_.terminal == TerminalRule::Horizontal) direct = add_links(direct, 1);
                    if (direct < c.value) c = {direct, a, originate_, true};
                }
                out_.terminal = c;
                out_.lambda = c.value;
                break;
            }
        }
    }

    void log_event(const SweepEvent& ev) {
        std::ostringstream os;
        os << ev.x << ' ' << event_kind_name(ev.kind) << ' ' << ev.alpha << ' ' << ev.beta;
        for (const auto& [lo, hi] : ranges_) os << " [" << lo << ',' << hi << ']';
        out_.log.push_back(os.str());
    }

    const StaircaseRegion& r_;
    const SweepOptions& opt_;
    LinkCountResult& out_;
    std::unique_ptr<LinkStore> store_;
    Ranges ranges_;
    int originate_ = -1;
};

SweepPath walk_back(const StaircaseRegion& r, const LinkCountResult& res, Point end, const EndChoice& c) {
    if (c.value >= kInfLinks) throw std::logic_error("reconstruct: end point not reached");
    SweepPath out;
    std::vector<Point> pts{end};
    std::size_t b = c.baseline;
    if (c.vertical) pts.push_back({end.x, r.baselines[b]});
    int e = c.provenance;
    int last = static_cast<int>(res.events.size());
    while (true) {
        if (e < 0 || e >= last) throw std::logic_error("reconstruct: broken back-pointer chain");
        last = e;
        const SweepEvent& ev = res.events[static_cast<std::size_t>(e)];
        Coord y = r.baselines[b];
        if (ev.kind == EventKind::Originate) {
            if (r.baselines[b] != r.s.y) pts.push_back({r.s.x, y});
            pts.push_back(r.s);
            break;
        }
        if (ev.kind == EventKind::Seed) {
            if (ev.alpha != b) throw std::logic_error("reconstruct: seed on another baseline");
            pts.push_back({ev.x, y});
            out.origin_tag = ev.tag;
            break;
        }
        const CanonicalSegment& cs = res.trace.by_event[static_cast<std::size_t>(e)];
        if (!cs.valid) throw std::logic_error("reconstruct: event without canonical segment");
        pts.push_back({ev.x, y});
        pts.push_back({ev.x, r.baselines[cs.baseline]});
        b = cs.baseline;
        e = cs.from_event;
    }
    std::reverse(pts.begin(), pts.end());
    out.polyline = simplify_polyline(pts);
    return out;
}

}  // namespace

LinkCountResult sweep_min_links(const StaircaseRegion& region, const SweepOptions& opt) {
    LinkCountResult out;
    Sweeper(region, opt, out).run();
    return out;
}

SweepPath reconstruct_path(const StaircaseRegion& region, const LinkCountResult& result) {
    return walk_back(region, result, region.t, result.terminal);
}

SweepPath reconstruct_read(const StaircaseRegion& region, const LinkCountResult& result, int tag) {
    auto it = result.reads.find(tag);
    if (it == result.reads.end()) throw std::logic_error("reconstruct: unknown read tag");
    for (const SweepEvent& ev : result.events)
        if (ev.kind == EventKind::Read && ev.tag == tag)
            return walk_back(region, result, {ev.x, region.baselines[ev.alpha]}, it->second);
    throw std::logic_error("reconstruct: read event missing");
}

}  // namespace mlsp
