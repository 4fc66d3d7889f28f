#include "mlsp/x_composer.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace mlsp {

const char* piece_dir_name(PieceDir d) {
    switch (d) {
        case PieceDir::Up: return "up";
        case PieceDir::Down: return "down";
        case PieceDir::Flat: return "flat";
    }
    return "?";
}

namespace {

constexpr Coord kUnreached = std::numeric_limits<Coord>::max() / 4;

bool is_source(NodeKind k) { return k == NodeKind::SourceTop || k == NodeKind::SourceBottom; }
bool is_mid(NodeKind k) { return k == NodeKind::TopMid || k == NodeKind::BottomMid; }

// Direction of the piece that leaves a node.
PieceDir out_dir(NodeKind k) {
    switch (k) {
        case NodeKind::TopMid: return PieceDir::Down;
        case NodeKind::BottomMid: return PieceDir::Up;
        case NodeKind::SourceTop: return PieceDir::Up;
        case NodeKind::SourceBottom: return PieceDir::Down;
        case NodeKind::Target: return PieceDir::Flat;
    }
    return PieceDir::Flat;
}

Point side_midpoint(const RectPolygon& poly, bool top) {
    Rect b = bounding_box(poly);
    Coord y = top ? b.yhi : b.ylo;
    for (const OrthoSegment& e : poly.edges()) {
        if (e.orientation != Orientation::Horizontal || e.fixed != y) continue;
        if ((e.lo + e.hi) % 2 != 0) throw std::logic_error("side midpoint is not integral; scale the instance first");
        return {(e.lo + e.hi) / 2, y};
    }
    throw std::logic_error("obstacle without a horizontal extreme side");
}

}  // namespace

DividerSweep::DividerSweep(const Domain& dom, Point s, Point s_low) : dom_(dom) {
    graph_.s = s;
    graph_.s_low = s_low;
    DividerRecord top, bottom;
    top.kind = NodeKind::SourceTop;
    top.point = top.closest_source = s;
    top.reachable = true;
    bottom = top;
    bottom.kind = NodeKind::SourceBottom;
    bottom.point = bottom.closest_source = s_low;
    graph_.nodes = {top, bottom};
    std::vector<OrthoSegment> verticals;
    for (std::size_t i = 0; i < dom.obstacles().size(); ++i) {
        const RectPolygon& p = dom.obstacles()[i];
        for (bool is_top : {true, false}) {
            DividerRecord r;
            r.kind = is_top ? NodeKind::TopMid : NodeKind::BottomMid;
            r.obstacle = i;
            r.point = side_midpoint(p, is_top);
            graph_.nodes.push_back(r);
        }
        for (const OrthoSegment& e : p.edges())
            if (e.orientation == Orientation::Vertical) verticals.push_back(e), edge_owner_.push_back(i);
    }
    left_ = std::make_unique<RayShooter>(std::move(verticals), false);
    ru_ = dom.trace(s, Alpha::ru).polyline;
    rd_mirrored_ = map_points(dom.trace(s_low, Alpha::rd).polyline, GridMap::mirror_y());

    std::vector<int> order;
    for (int i = 2; i < static_cast<int>(graph_.nodes.size()); ++i) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return graph_.nodes[a].point < graph_.nodes[b].point; });
    for (int id : order) resolve(id);
}

int DividerSweep::add_point(Point p) {
    DividerRecord r;
    r.kind = NodeKind::Target;
    r.point = p;
    graph_.nodes.push_back(r);
    int id = static_cast<int>(graph_.nodes.size()) - 1;
    resolve(id);
    return id;
}

void DividerSweep::resolve(int id) {
    DividerRecord& r = graph_.nodes[static_cast<std::size_t>(id)];
    const Point p = r.point, s = graph_.s, sl = graph_.s_low;
    r.reachable = false;
    if (p.x < s.x) return;
    auto hit = left_->shoot(p, Direction::Left);
    Coord hit_x = hit ? hit->point.x : std::numeric_limits<Coord>::min();
    if (hit_x < s.x && sl.y <= p.y && p.y <= s.y) {
        r.reachable = r.flat = true;
        r.dist = p.x - s.x;
        r.closest_source = {s.x, p.y};
        return;
    }
    if (p.y >= s.y && staircase_side(ru_, p) >= 0) {
        r.reachable = true;
        r.dist = l1(s, p);
        r.closest_source = s;
        r.preds = {{0, PieceDir::Up}};
        return;
    }
    Point pm = GridMap::mirror_y().apply(p), slm = GridMap::mirror_y().apply(sl);
    if (pm.y >= slm.y && staircase_side(rd_mirrored_, pm) >= 0) {
        r.reachable = true;
        r.dist = l1(sl, p);
        r.closest_source = sl;
        r.preds = {{1, PieceDir::Down}};
        return;
    }
    if (hit_x <= s.x) return;
    std::size_t owner = edge_owner_[hit->segment];
    Coord best = kUnreached;
    std::vector<DividerPred> preds;
    for (int cand : {DividerGraph::top_of(owner), DividerGraph::bottom_of(owner)}) {
        const DividerRecord& c = graph_.nodes[static_cast<std::size_t>(cand)];
        if (!c.reachable) continue;
        Coord d = c.dist + l1(c.point, p);
        PieceDir dir = c.point.y > p.y ? PieceDir::Down : PieceDir::Up;
        if (d < best) best = d, preds = {{cand, dir}};
        else if (d == best) preds.push_back({cand, dir});
    }
    if (preds.empty()) return;
    DividerRecord& rr = graph_.nodes[static_cast<std::size_t>(id)];
    rr.reachable = true;
    rr.dist = best;
    rr.preds = preds;
    rr.closest_source = graph_.nodes[static_cast<std::size_t>(preds.front().node)].closest_source;
}

DividerGraph sweep_divider_distances(const Domain& dom, Point s, Point s_low) {
    return DividerSweep(dom, s, s_low).graph();
}

DividerSet find_divider_sequences(const DividerGraph& g, int target) {
    DividerSet out;
    out.target = target;
    const DividerRecord& t = g.nodes[static_cast<std::size_t>(target)];
    if (!t.reachable) return out;
    out.direct = t.flat;
    std::set<int> seen{target};
    std::vector<int> stack{target};
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        out.nodes.push_back(q);
        for (const DividerPred& p : g.nodes[static_cast<std::size_t>(q)].preds)
            if (seen.insert(p.node).second) stack.push_back(p.node);
    }
    std::sort(out.nodes.begin(), out.nodes.end(), [&](int a, int b) {
        return g.nodes[static_cast<std::size_t>(b)].point < g.nodes[static_cast<std::size_t>(a)].point;
    });
    for (int q : out.nodes) {
        const DividerRecord& r = g.nodes[static_cast<std::size_t>(q)];
        if (r.preds.size() > 1) out.ties.push_back(q);
        if (is_source(r.kind)) continue;
        std::vector<PieceDir> dirs;
        if (r.flat) dirs.push_back(PieceDir::Flat);
        for (const DividerPred& p : r.preds)
            if (p.dir != out_dir(r.kind) && std::find(dirs.begin(), dirs.end(), p.dir) == dirs.end())
                dirs.push_back(p.dir);
        if (!dirs.empty()) out.glue[q] = dirs;
    }
    return out;
}

namespace {

struct Walker {
    const DividerGraph& g;
    const DividerSet& set;

    const DividerRecord& node(int i) const { return g.nodes[static_cast<std::size_t>(i)]; }

    // A node where a piece in direction d may begin.
    bool starts(int n, PieceDir d) const {
        const DividerRecord& r = node(n);
        if (is_source(r.kind)) return out_dir(r.kind) == d;
        return is_mid(r.kind) && out_dir(r.kind) == d && set.glue.count(n) > 0;
    }

    // Possible starts of the d-piece ending at q, smallest x first.
    std::vector<int> starts_before(int q, PieceDir d) const {
        std::vector<int> out;
        std::set<int> seen;
        std::vector<int> stack{q};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const DividerPred& p : node(v).preds) {
                if (p.dir != d || !seen.insert(p.node).second) continue;
                if (starts(p.node, d)) out.push_back(p.node);
                if (is_mid(node(p.node).kind)) stack.push_back(p.node);
            }
        }
        std::sort(out.begin(), out.end(), [&](int a, int b) { return node(a).point < node(b).point; });
        return out;
    }
};

GridMap frame_of(PieceDir d) { return d == PieceDir::Down ? GridMap::mirror_y() : GridMap::identity(); }

// Doubled-coordinate membership in the free interior of a node's region,
// for a point given (doubled) in the composer's frame.
bool inside_free(const SubregionNode& n, Point p2) {
    Point q = n.frame.apply(p2);
    std::vector<Point> up, low;
    for (const Point& v : n.region.upper) up.push_back({2 * v.x, 2 * v.y});
    for (const Point& v : n.region.lower) low.push_back({2 * v.x, 2 * v.y});
    Point s2{2 * n.region.s.x, 2 * n.region.s.y};
    if (q.x <= s2.x || q.y <= s2.y) return false;
    if (staircase_side(up, q) != -1 || staircase_side(low, q) != 1) return false;
    for (const RectPolygon& h : n.region.hole_polygons)
        if (locate_doubled(h, q.x, q.y) != Location::Outside) return false;
    return true;
}

bool interiors_meet(const SubregionNode& a, const SubregionNode& b) {
    std::vector<Coord> xs, ys;
    for (const SubregionNode* n : {&a, &b}) {
        GridMap back = n->frame.inverse();
        for (const auto* chain : {&n->region.upper, &n->region.lower})
            for (const Point& v : *chain) {
                Point w = back.apply(v);
                xs.push_back(w.x), ys.push_back(w.y);
            }
        for (const RectPolygon& h : n->region.hole_polygons)
            for (const Point& v : h.vertices) {
                Point w = back.apply(v);
                xs.push_back(w.x), ys.push_back(w.y);
            }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            Point c{xs[i] + xs[i + 1], ys[j] + ys[j + 1]};
            if (inside_free(a, c) && inside_free(b, c)) return true;
        }
    return false;
}

}  // namespace

SubregionDag build_subregion_dag(const Domain& dom, const Domain& dom_mirrored, const DividerGraph& g,
                                 const DividerSet& set, const DagOptions& opt) {
    SubregionDag dag;
    Walker w{g, set};
    std::map<std::pair<PieceDir, int>, int> key_to_node;
    std::map<std::pair<int, PieceDir>, int> terminate_node;
    for (const auto& [q, dirs] : set.glue) {
        for (PieceDir d : dirs) {
            if (d == PieceDir::Flat) continue;
            std::vector<int> st = w.starts_before(q, d);
            if (st.empty()) continue;
            auto key = std::make_pair(d, st.front());
            auto [it, fresh] = key_to_node.emplace(key, static_cast<int>(dag.nodes.size()));
            if (fresh) {
                SubregionNode n;
                n.dir = d;
                n.f = st.front();
                n.frame = frame_of(d);
                dag.nodes.push_back(n);
            }
            SubregionNode& n = dag.nodes[static_cast<std::size_t>(it->second)];
            n.terminates.push_back(q);
            for (int c : st)
                if (std::find(n.originates.begin(), n.originates.end(), c) == n.originates.end())
                    n.originates.push_back(c);
            terminate_node[{q, d}] = it->second;
        }
    }
    auto pt = [&](int i) { return g.nodes[static_cast<std::size_t>(i)].point; };
    for (SubregionNode& n : dag.nodes) {
        auto by_x = [&](int a, int b) { return pt(a) < pt(b); };
        std::sort(n.terminates.begin(), n.terminates.end(), by_x);
        std::sort(n.originates.begin(), n.originates.end(), by_x);
        n.g = n.terminates.back();
        const Domain& d = n.dir == PieceDir::Down ? dom_mirrored : dom;
        try {
            n.region = build_staircase_region(d, n.frame.apply(pt(n.f)), n.frame.apply(pt(n.g)));
            n.built = true;
        } catch (const RegionPrecondition& e) {
            n.failure = e.what();
            ++dag.chain_violations;
            continue;
        }
        dag.total_baselines += n.region.baselines.size();
        bool ok = true;
        for (int c : n.originates)
            if (c != n.f && staircase_side(n.region.upper, n.frame.apply(pt(c))) != 0) ok = false;
        for (int q : n.terminates)
            if (q != n.g && staircase_side(n.region.lower, n.frame.apply(pt(q))) != 0) ok = false;
        if (!ok) {
            n.failure = "divider off the region boundary";
            ++dag.chain_violations;
        }
    }
    // A glued divider lying on a node's terminate chain must share the node's f.
    for (const SubregionNode& n : dag.nodes) {
        if (!n.built) continue;
        for (const auto& [key, v] : terminate_node) {
            if (key.second != n.dir) continue;
            Point q = n.frame.apply(pt(key.first));
            if (q.x <= n.region.s.x || q.x > n.region.t.x) continue;
            if (staircase_side(n.region.lower, q) != 0) continue;
            ++dag.agreement_checks;
            if (dag.nodes[static_cast<std::size_t>(v)].f != n.f) ++dag.agreement_violations;
        }
    }
    // Edges from the node where an originate was computed to the node that seeds it.
    std::vector<std::set<int>> preds(dag.nodes.size());
    for (std::size_t v = 0; v < dag.nodes.size(); ++v) {
        for (int c : dag.nodes[v].originates) {
            auto it = set.glue.find(c);
            if (it == set.glue.end()) continue;
            for (PieceDir d : it->second) {
                auto u = terminate_node.find({c, d});
                if (u == terminate_node.end()) continue;
                if (preds[v].insert(u->second).second) dag.edges.emplace_back(u->second, static_cast<int>(v));
            }
        }
    }
    // Kahn's algorithm; predecessors always end left of their successors.
    std::vector<int> indeg(dag.nodes.size(), 0);
    for (const auto& e : dag.edges) ++indeg[static_cast<std::size_t>(e.second)];
    std::vector<int> ready;
    for (std::size_t v = 0; v < dag.nodes.size(); ++v)
        if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        dag.order.push_back(v);
        for (const auto& e : dag.edges)
            if (e.first == v && --indeg[static_cast<std::size_t>(e.second)] == 0) ready.push_back(e.second);
    }
    if (dag.order.size() != dag.nodes.size()) throw std::logic_error("subregion graph has a cycle");
    if (opt.check_overlap) {
        for (std::size_t i = 0; i < dag.nodes.size(); ++i)
            for (std::size_t j = i + 1; j < dag.nodes.size(); ++j)
                if (dag.nodes[i].built && dag.nodes[j].built && interiors_meet(dag.nodes[i], dag.nodes[j]))
                    ++dag.overlap_violations;
    }
    return dag;
}

namespace {

struct StoredSweep {
    StaircaseRegion region;
    LinkCountResult result;
    GridMap frame;
    int origin = -1;  // node at region.s
};

struct Source {
    int sweep = -1;  // -1: horizontal segment from S
    bool terminal = false;
};

class Composer {
public:
    Composer(const Domain& dom, Point s, Point s_low, Point t, const ComposeOptions& opt)
        : dom_(dom), opt_(opt), sweep_(dom, s, s_low) {
        std::vector<RectPolygon> mirrored;
        for (const RectPolygon& p : dom.obstacles()) mirrored.push_back(map_polygon(p, GridMap::mirror_y()));
        dom_my_ = std::make_unique<Domain>(std::move(mirrored), dom.sentinel());
        target_ = sweep_.add_point(t);
    }

    ComposeResult run(SubregionDag* dag_out) {
        ComposeResult out;
        const DividerGraph& g = sweep_.graph();
        const DividerRecord& t = node(target_);
        if (!t.reachable) throw std::logic_error("target not reached by the divider sweep");
        out.dist = t.dist;
        set_ = find_divider_sequences(g, target_);
        lam_.assign(g.nodes.size(), kInfLinks);
        src_.assign(g.nodes.size(), {});
        for (const auto& [q, dirs] : set_.glue)
            if (std::find(dirs.begin(), dirs.end(), PieceDir::Flat) != dirs.end()) lam_[static_cast<std::size_t>(q)] = 1;
        DagOptions dopt;
        dopt.check_overlap = opt_.check_overlap;
        SubregionDag dag = build_subregion_dag(dom_, *dom_my_, g, set_, dopt);
        for (int v : dag.order) run_node(dag.nodes[static_cast<std::size_t>(v)], out);
        out.lambda = lam_[static_cast<std::size_t>(target_)];
        if (out.lambda < kInfLinks) {
            out.path.polyline = simplify_polyline(path_to(target_));
            auto [len, links] = path_metrics(out.path.polyline);
            out.path.length = len;
            out.path.links = links;
        }
        out.sweeps = sweeps_.size();
        for (const StoredSweep& sw : sweeps_) out.events += sw.result.events.size();
        if (dag_out) *dag_out = std::move(dag);
        return out;
    }

private:
    const DividerRecord& node(int i) const { return sweep_.graph().nodes[static_cast<std::size_t>(i)]; }

    void start_values(int f, SweepOptions& so) const {
        if (is_source(node(f).kind)) {
            so.start_links = 1, so.start_turn_links = 2;
        } else {
            int h = lam_[static_cast<std::size_t>(f)];
            so.start_links = h, so.start_turn_links = add_links(h, 2);
        }
    }

    void offer(int q, int value, int sweep, bool terminal) {
        if (value < lam_[static_cast<std::size_t>(q)]) {
            lam_[static_cast<std::size_t>(q)] = value;
            src_[static_cast<std::size_t>(q)] = {sweep, terminal};
        }
    }

    void run_node(const SubregionNode& n, ComposeResult& out) {
        bool usable = n.built && n.failure.empty() && !opt_.pairs_only;
        if (usable) {
            SweepOptions so;
            so.use_tree = opt_.use_tree;
            start_values(n.f, so);
            so.terminal = n.g == target_ ? TerminalRule::Any : TerminalRule::Horizontal;
            for (int c : n.originates) {
                if (c == n.f) continue;
                Point p = n.frame.apply(node(c).point);
                std::size_t a = n.region.index_of(p.y);
                so.extra.push_back({p.x, EventKind::Seed, a, a, lam_[static_cast<std::size_t>(c)], c});
            }
            for (int q : n.terminates) {
                if (q == n.g) continue;
                Point p = n.frame.apply(node(q).point);
                std::size_t a = n.region.index_of(p.y);
                so.extra.push_back({p.x, EventKind::Read, a, a, 0, q});
            }
            StoredSweep sw{n.region, sweep_min_links(n.region, so), n.frame, n.f};
            if (sw.result.dropped_seeds > 0) usable = false;
            else {
                int id = static_cast<int>(sweeps_.size());
                sweeps_.push_back(std::move(sw));
                const LinkCountResult& res = sweeps_.back().result;
                std::vector<int> unreached;
                for (int q : n.terminates) {
                    int v = q == n.g ? res.lambda : res.reads.at(q).value;
                    if (v >= kInfLinks) unreached.push_back(q);
                    else offer(q, v, id, q == n.g);
                }
                for (int q : unreached) pairs_for(n, q, out);
                return;
            }
        }
        for (int q : n.terminates) pairs_for(n, q, out);
    }

    // Per-pair sweeps from every start of the piece ending at q.
    void pairs_for(const SubregionNode& n, int q, ComposeResult& out) {
        ++out.fallbacks;
        Walker w{sweep_.graph(), set_};
        const Domain& d = n.dir == PieceDir::Down ? *dom_my_ : dom_;
        for (int c : w.starts_before(q, n.dir)) {
            StaircaseRegion r;
            try {
                r = build_staircase_region(d, n.frame.apply(node(c).point), n.frame.apply(node(q).point));
            } catch (const RegionPrecondition&) {
                continue;
            }
            SweepOptions so;
            so.use_tree = opt_.use_tree;
            start_values(c, so);
            so.terminal = q == target_ ? TerminalRule::Any : TerminalRule::Horizontal;
            LinkCountResult res = sweep_min_links(r, so);
            int id = static_cast<int>(sweeps_.size());
            int v = res.lambda;
            sweeps_.push_back({std::move(r), std::move(res), n.frame, c});
            offer(q, v, id, true);
        }
    }

    std::vector<Point> path_to(int q) const {
        const Source& src = src_[static_cast<std::size_t>(q)];
        Point p = node(q).point;
        if (src.sweep < 0) return {{sweep_.graph().s.x, p.y}, p};
        const StoredSweep& sw = sweeps_[static_cast<std::size_t>(src.sweep)];
        SweepPath piece = src.terminal ? reconstruct_path(sw.region, sw.result)
                                       : reconstruct_read(sw.region, sw.result, q);
        int origin = piece.origin_tag >= 0 ? piece.origin_tag : sw.origin;
        std::vector<Point> out;
        if (!is_source(node(origin).kind)) out = path_to(origin);
        for (const Point& v : map_points(piece.polyline, sw.frame.inverse())) out.push_back(v);
        return out;
    }

    const Domain& dom_;
    ComposeOptions opt_;
    DividerSweep sweep_;
    std::unique_ptr<Domain> dom_my_;
    int target_ = -1;
    DividerSet set_;
    std::vector<int> lam_;
    std::vector<Source> src_;
    std::vector<StoredSweep> sweeps_;
};

}  // namespace

ComposeResult compose_min_link_path(const Domain& dom, Point s, Point s_low, Point t, const ComposeOptions& opt,
                                    SubregionDag* dag_out) {
    return Composer(dom, s, s_low, t, opt).run(dag_out);
}

}  // namespace mlsp
