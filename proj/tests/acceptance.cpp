// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any gated criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mlsp/io.h"
#include "mlsp/oracle.h"
#include "mlsp/solver.h"
#include "mlsp/staircase.h"
#include "mlsp/x_composer.h"
#include "mlsp/xy_sweep.h"
#include "support.h"

#ifndef MLSP_TEST_DATA
#define MLSP_TEST_DATA "tests/data"
#endif

using namespace mlsp;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Instance framed_points(const testing::FramedPair& f) {
    Instance inst;
    inst.obstacles = f.obstacles;
    inst.source = Terminal::point(f.s);
    inst.target = Terminal::point(f.t);
    return inst;
}

std::size_t vertex_count(const std::vector<RectPolygon>& obs) {
    std::size_t n = 0;
    for (const RectPolygon& p : obs) n += p.size();
    return n;
}

// Solver against oracle over generated instances until `want` are tested.
Outcome oracle_equivalence(int want, const std::function<GenOptions(std::uint64_t)>& options) {
    int tested = 0, bad = 0;
    std::string first;
    for (std::uint64_t seed = 1; tested < want && seed <= static_cast<std::uint64_t>(20 * want); ++seed) {
        auto inst = testing::try_generate(options(seed));
        if (!inst) continue;
        std::string why;
        try {
            why = testing::check_against_oracle(*inst, solve(*inst).path, oracle_solve(*inst));
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (!why.empty() && bad++ == 0) first = "seed " + std::to_string(seed) + ": " + why;
        ++tested;
    }
    std::ostringstream os;
    os << tested << " instances, " << bad << " mismatches";
    if (!first.empty()) os << " (first " << first << ")";
    return {tested >= want && bad == 0, os.str()};
}

Outcome criterion1() {
    return oracle_equivalence(1200, [](std::uint64_t seed) {
        GenOptions g;
        g.obstacles = 1 + static_cast<int>(seed % 30);
        g.coord_max = 200;
        g.seed = seed;
        // Point-point, segment-segment and both pierce variants in turn.
        g.kind = seed % 2 ? TerminalKind::Segment : TerminalKind::Point;
        g.allow_box_pierce = seed % 4 >= 2;
        return g;
    });
}

// Mixed point/segment pairs are not produced by the generator; pair a
// generated point with a generated segment from a second draw.
Outcome criterion1_mixed() {
    int tested = 0, bad = 0;
    for (std::uint64_t seed = 1; tested < 200 && seed <= 4000; ++seed) {
        GenOptions g;
        g.obstacles = 1 + static_cast<int>(seed % 30);
        g.coord_max = 200;
        g.seed = seed;
        g.allow_box_pierce = seed % 2;
        auto base = testing::try_generate(g);
        g.kind = TerminalKind::Segment;
        auto seg = testing::try_generate(g);
        if (!base || !seg) continue;
        Instance inst = *base;
        (seed % 4 < 2 ? inst.source : inst.target) = seg->source;
        if (!validate(inst).ok()) continue;
        if (!testing::check_against_oracle(inst, solve(inst).path, oracle_solve(inst)).empty()) ++bad;
        ++tested;
    }
    return {tested >= 200 && bad == 0, std::to_string(tested) + " point/segment instances, " + std::to_string(bad) +
                                           " mismatches"};
}

Outcome criterion2() {
    return oracle_equivalence(200, [](std::uint64_t seed) {
        GenOptions g;
        g.obstacles = 1 + static_cast<int>(seed % 30);
        g.coord_max = 200;
        g.kind = TerminalKind::Polygon;
        g.max_terminal_vertices = 20;
        g.seed = seed;
        return g;
    });
}

Outcome criterion3() {
    Instance inst = parse_instance(read_file(std::string(MLSP_TEST_DATA) + "/box_shortcut.json"));
    if (!validate(inst).ok()) return {false, "instance does not validate"};
    auto pairs = oracle_closest_pairs(inst);
    OracleAnswer best = oracle_solve(inst);
    OracleAnswer boxed = oracle_solve(boxed_instance(inst));
    PathResult solved = solve(inst).path;
    std::string why = testing::check_against_oracle(inst, solved, best);
    std::ostringstream os;
    os << pairs.size() << " closest pairs; optimum " << best.dist << "/" << best.min_links << " links, box-avoiding "
       << boxed.dist << "/" << boxed.min_links << " links; solver " << solved.length << "/" << solved.links;
    return {pairs.size() >= 2 && best.min_links < boxed.min_links && why.empty(), os.str()};
}

Outcome criterion4() {
    int regions = 0, bad = 0;
    long events = 0;
    for (std::uint64_t seed = 1; regions < 520 && seed <= 20000; ++seed) {
        GenOptions g;
        g.obstacles = 3 + static_cast<int>(seed % 28);
        g.seed = seed;
        auto inst = testing::try_generate(g);
        if (!inst) continue;
        auto f = testing::frame_point_pair(hulled_instance(*inst));
        if (!f || f->region > Region::Dxy4) continue;
        StaircaseRegion r = build_staircase_region(Domain(f->obstacles, f->sentinel), f->s, f->t);
        LinkCountResult tree = sweep_min_links(r);
        SweepOptions naive;
        naive.use_tree = false;
        LinkCountResult shadow = sweep_min_links(r, naive);
        if (tree.lambda != shadow.lambda || tree.minima != shadow.minima) ++bad;
        events += static_cast<long>(tree.events.size());
        ++regions;
    }
    return {regions >= 500 && bad == 0, std::to_string(regions) + " regions (" + std::to_string(events) +
                                            " events), " + std::to_string(bad) + " disagreements"};
}

Outcome criterion5() {
    const int want = 200;
    int crossing = 0, traced = 0, traced_bad = 0;
    int dxy = 0, dxy_bad = 0, solved = 0, unaligned = 0;
    int dx = 0, winders = 0, winder_bad = 0, overlap = 0, agreement = 0, agreement_checks = 0, chain = 0;
    for (std::uint64_t seed = 1; seed <= 20000 && (traced < want || dxy < want || solved < want || dx < want); ++seed) {
        GenOptions g;
        g.obstacles = 2 + static_cast<int>(seed % 25);
        g.coord_max = 160;
        g.seed = seed;
        g.kind = seed % 3 == 0 ? TerminalKind::Segment : TerminalKind::Point;
        g.allow_box_pierce = seed % 5 == 0;
        auto inst = testing::try_generate(g);
        if (!inst) continue;

        if (solved < want) {
            auto [xs, ys] = testing::baseline_coords(*inst);
            if (!testing::aligned(solve(*inst).path.polyline, xs, ys)) ++unaligned;
            ++solved;
        }
        if (!inst->source.is_point() || !inst->target.is_point() || g.allow_box_pierce) continue;

        Instance hull = hulled_instance(*inst);
        Point s = hull.source.segment.first();
        if (traced < want) {
            Domain dom(hull.obstacles, sentinel_for(testing::max_abs(hull)));
            EightPaths e = eight_paths(dom, s, s);
            if (!testing::quadrant_pairs_do_not_cross(e)) ++crossing;
            for (Alpha a : kAllAlphas)
                if (!testing::up_right_monotone(map_points(e[a].polyline, GridMap::canonical(a)))) ++traced_bad;
            ++traced;
        }

        auto f = testing::frame_point_pair(scale_by_two(hull).instance);
        if (!f) continue;
        Domain dom(f->obstacles, f->sentinel);
        if (f->region <= Region::Dxy4) {
            if (dxy >= want) continue;
            StaircaseRegion r = build_staircase_region(dom, f->s, f->t);
            if (!testing::up_right_monotone(reconstruct_path(r, sweep_min_links(r)).polyline)) ++dxy_bad;
            ++dxy;
        } else {
            if (dx >= want) continue;
            testing::WinderAudit w = testing::audit_winders(oracle_solve(framed_points(*f)).witness, f->obstacles);
            winders += w.winders;
            winder_bad += w.violations;
            ComposeOptions opt;
            opt.check_overlap = true;
            SubregionDag dag;
            compose_min_link_path(dom, f->s, f->s, f->t, opt, &dag);
            overlap += dag.overlap_violations;
            agreement += dag.agreement_violations;
            agreement_checks += dag.agreement_checks;
            chain += dag.chain_violations;
            ++dx;
        }
    }
    std::ostringstream os;
    os << "non-crossing " << crossing << "/" << traced << ", traced monotone " << traced_bad << "/" << traced
       << ", Dxy monotone " << dxy_bad << "/" << dxy << ", aligned " << unaligned << "/" << solved << ", winders "
       << winder_bad << "/" << winders << " over " << dx << " paths, overlap " << overlap << ", agreement "
       << agreement << "/" << agreement_checks << ", chain " << chain;
    bool enough = traced >= want && dxy >= want && solved >= want && dx >= want && winders > 0 && agreement_checks > 0;
    bool clean = crossing + traced_bad + dxy_bad + unaligned + winder_bad + overlap + agreement + chain == 0;
    return {enough && clean, os.str()};
}

Outcome criterion6() {
    const int sizes[] = {50, 100, 200, 400, 800};
    const int reps = 3;
    std::ostringstream os;
    bool events_ok = true;
    double prev_ms = 0, worst_ratio = 0;
    for (int size : sizes) {
        std::vector<double> ms;
        std::int64_t worst_excess = 0;
        for (int r = 0; r < reps; ++r) {
            GenOptions g;
            g.obstacles = size;
            g.coord_max = std::max(200, 40 * size);
            g.seed = static_cast<std::uint64_t>(1 + r);
            Instance inst = generate_instance(g);
            auto t0 = std::chrono::steady_clock::now();
            SolveReport rep = solve(inst);
            ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
            std::int64_t bound = 8 * (rep.stats.at("N") + rep.stats.at("n"));
            worst_excess = std::max(worst_excess, rep.stats.at("events") - bound);
        }
        std::sort(ms.begin(), ms.end());
        double med = ms[ms.size() / 2];
        if (prev_ms > 0) worst_ratio = std::max(worst_ratio, med / prev_ms);
        prev_ms = med;
        if (worst_excess > 0) events_ok = false;
        os << size << ":" << static_cast<int>(med * 100) / 100.0 << "ms ";
    }
    os << "worst doubling ratio " << static_cast<int>(worst_ratio * 100) / 100.0
       << (worst_ratio <= 2.6 ? " (within" : " (outside") << " the advisory 2.6), events <= 8(N+n) "
       << (events_ok ? "held" : "violated");
    return {events_ok, os.str()};
}

Outcome criterion7() {
    int tested = 0, bad = 0;
    for (std::uint64_t seed = 1; tested < 250 && seed <= 5000; ++seed) {
        GenOptions g;
        g.obstacles = 1 + static_cast<int>(seed % 30);
        g.coord_max = 200;
        g.kind = seed % 2 ? TerminalKind::Segment : TerminalKind::Point;
        g.seed = seed;
        auto inst = testing::try_generate(g);
        if (!inst) continue;
        OracleAnswer a = oracle_solve(*inst), b = oracle_solve(hulled_instance(*inst));
        if (a.dist != b.dist || a.min_links != b.min_links) ++bad;
        ++tested;
    }
    return {tested >= 200 && bad == 0, std::to_string(tested) + " instances, " + std::to_string(bad) + " changed"};
}

Outcome criterion8() {
    int instances = 0, doors = 0, hidden = 0, bad = 0;
    std::string first;
    for (std::uint64_t seed = 1; (instances < 120 || hidden < 20) && seed <= 20000; ++seed) {
        GenOptions g;
        g.obstacles = 3 + static_cast<int>(seed % 20);
        g.coord_max = 160;
        g.kind = seed % 2 ? TerminalKind::Segment : TerminalKind::Point;
        g.allow_box_pierce = true;
        g.seed = seed;
        auto inst = testing::try_generate(g);
        if (!inst) continue;
        auto cases = testing::pocket_cases(*inst);
        if (cases.empty()) continue;
        ++instances;
        for (const testing::PocketCase& c : cases) {
            std::string why = testing::check_pocket_case(c, *inst);
            if (!why.empty() && bad++ == 0) first = "seed " + std::to_string(seed) + ": " + why;
            ++doors;
            if (c.profile.unique_closest) ++hidden;
        }
    }
    std::ostringstream os;
    os << instances << " pocket-bearing instances, " << doors << " doors (" << hidden << " hidden), " << bad
       << " violations";
    if (!first.empty()) os << " (first " << first << ")";
    return {instances >= 100 && hidden >= 20 && bad == 0, os.str()};
}

}  // namespace

int main() {
    struct Named {
        const char* name;
        Outcome (*run)();
    };
    const Named criteria[] = {
        {"1 oracle equivalence, point/segment terminals", criterion1},
        {"1 oracle equivalence, mixed point/segment pairs", criterion1_mixed},
        {"2 oracle equivalence, polygon terminals", criterion2},
        {"3 box shortcut instance", criterion3},
        {"4 link tree against the naive sweep", criterion4},
        {"5 structural invariants", criterion5},
        {"6 scaling", criterion6},
        {"7 hull preprocessing soundness", criterion7},
        {"8 pocket uniqueness, affinity and offsets", criterion8},
    };
    int failed = 0;
    for (const Named& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %s: %s  %s  [%.1fs]\n", c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
