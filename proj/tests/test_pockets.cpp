#include "doctest.h"
#include "mlsp/oracle.h"
#include "mlsp/pockets.h"
#include "mlsp/solver.h"
#include "support.h"

using namespace mlsp;

namespace {

// Box [0,9]x[0,8] with a notch [3,6]x[3,8] open at the top.
RectPolygon notch_up() { return normalize_polygon({{0, 0}, {9, 0}, {9, 8}, {6, 8}, {6, 3}, {3, 3}, {3, 8}, {0, 8}}); }

// Box [0,9]x[10,18] with a notch [3,6]x[10,15] open at the bottom.
RectPolygon notch_down() {
    return normalize_polygon({{0, 10}, {3, 10}, {3, 15}, {6, 15}, {6, 10}, {9, 10}, {9, 18}, {0, 18}});
}

// Lower-left staircase; its pocket is the upper-right staircase with doors
// on the top and right sides of the box.
RectPolygon stairs() { return normalize_polygon({{0, 0}, {9, 0}, {9, 3}, {6, 3}, {6, 6}, {3, 6}, {3, 9}, {0, 9}}); }

std::optional<Instance> pierce_instance(std::uint64_t seed) {
    GenOptions g;
    g.obstacles = 3 + static_cast<int>(seed % 15);
    g.coord_max = 120;
    g.kind = seed % 2 ? TerminalKind::Segment : TerminalKind::Point;
    g.allow_box_pierce = true;
    g.seed = seed;
    return testing::try_generate(g);
}

// Box [0,10]^2 with an L-shaped pocket entered from the top at x in [1,3]
// and running right along y in [2,4].
RectPolygon hook() {
    return normalize_polygon({{0, 0}, {10, 0}, {10, 10}, {3, 10}, {3, 4}, {8, 4}, {8, 2}, {1, 2}, {1, 10}, {0, 10}});
}

}  // namespace

TEST_CASE("terminal split into pieces") {
    std::vector<RectPolygon> obs{notch_up(), notch_down()};
    SUBCASE("outside every box") {
        auto s = split_terminal(OrthoSegment::between({20, 0}, {20, 9}), obs);
        REQUIRE(s.pieces.size() == 1);
        CHECK(s.pieces[0].box == -1);
    }
    SUBCASE("leaving one box through its door") {
        auto s = split_terminal(OrthoSegment::between({4, 5}, {4, 9}), obs);
        REQUIRE(s.pieces.size() == 2);
        CHECK(s.pieces[0].segment == OrthoSegment::between({4, 5}, {4, 8}));
        CHECK(s.pieces[0].box == 0);
        CHECK(s.pieces[1].segment == OrthoSegment::between({4, 8}, {4, 9}));
        CHECK(s.pieces[1].box == -1);
    }
    SUBCASE("joining two pockets") {
        auto s = split_terminal(OrthoSegment::between({4, 5}, {4, 13}), obs);
        REQUIRE(s.pieces.size() == 3);
        CHECK(s.pieces[0].box == 0);
        CHECK(s.pieces[1].segment == OrthoSegment::between({4, 8}, {4, 10}));
        CHECK(s.pieces[1].box == -1);
        CHECK(s.pieces[2].segment == OrthoSegment::between({4, 10}, {4, 13}));
        CHECK(s.pieces[2].box == 1);
    }
    SUBCASE("point in a pocket") {
        auto s = split_terminal(OrthoSegment::point({5, 12}), obs);
        REQUIRE(s.pieces.size() == 1);
        CHECK(s.pieces[0].box == 1);
    }
}

TEST_CASE("pocket of a notch") {
    Pocket p = pocket_of(OrthoSegment::point({4, 5}), notch_up());
    CHECK(bounding_box(p.polygon) == Rect{3, 6, 3, 8});
    CHECK(p.polygon.size() == 4);
    REQUIRE(p.door_h);
    CHECK(*p.door_h == OrthoSegment::between({3, 8}, {6, 8}));
    CHECK_FALSE(p.door_v);
    CHECK(p.doors().size() == 1);
}

TEST_CASE("pocket of a staircase has two doors") {
    Pocket p = pocket_of(OrthoSegment::point({7, 7}), stairs());
    CHECK(p.polygon == normalize_polygon({{3, 9}, {3, 6}, {6, 6}, {6, 3}, {9, 3}, {9, 9}}));
    REQUIRE(p.door_h);
    REQUIRE(p.door_v);
    CHECK(*p.door_h == OrthoSegment::between({3, 9}, {9, 9}));
    CHECK(*p.door_v == OrthoSegment::between({9, 3}, {9, 9}));
}

TEST_CASE("no pocket in a rectangle or on the polygon") {
    RectPolygon r = RectPolygon::from_rect({0, 4, 0, 4});
    CHECK_THROWS_AS(pocket_of(OrthoSegment::point({2, 2}), r), PocketError);
    CHECK_THROWS_AS(pocket_of(OrthoSegment::point({3, 5}), notch_up()), PocketError);
    CHECK_THROWS_AS(pocket_of(OrthoSegment::point({20, 5}), notch_up()), PocketError);
}

TEST_CASE("paths inside a pocket") {
    Pocket p = pocket_of(OrthoSegment::point({7, 7}), stairs());
    SUBCASE("horizontally visible") {
        PocketPath r = simple_polygon_mlsp({4, 8}, {8, 8}, p);
        CHECK(r.path.length == 4);
        CHECK(r.path.links == 1);
        CHECK(r.links_h == 1);
    }
    SUBCASE("around the inner corner") {
        PocketPath r = simple_polygon_mlsp({4, 8}, {8, 4}, p);
        CHECK(r.path.length == 8);
        CHECK(r.path.links == 2);
        CHECK(testing::path_is_free(r.path.polyline, {stairs()}));
    }
    SUBCASE("outside the pocket") {
        CHECK_THROWS_AS(simple_polygon_mlsp({1, 1}, {8, 4}, p), PocketError);
    }
}

TEST_CASE("door profiles") {
    SUBCASE("straight link to the door") {
        Pocket p = pocket_of(OrthoSegment::point({4, 5}), notch_up());
        DoorProfile prof = door_profile(OrthoSegment::point({4, 5}), p, *p.door_h, {}, {});
        REQUIRE(prof.direct);
        CHECK(*prof.direct == OrthoSegment::point({4, 8}));
        CHECK_FALSE(prof.unique_closest);
        CHECK(prof.samples.size() == 3);  // endpoints and the piece's own x
    }
    SUBCASE("a hidden door has one closest pair") {
        Pocket p = pocket_of(OrthoSegment::point({6, 3}), hook());
        REQUIRE(p.door_h);
        CHECK(*p.door_h == OrthoSegment::between({1, 10}, {3, 10}));
        Instance inst;
        inst.obstacles = {hook()};
        inst.source = Terminal::point({6, 3});
        inst.target = Terminal::point({20, 20});
        auto [hx, hy] = testing::baseline_coords(inst);
        DoorProfile prof = door_profile(OrthoSegment::point({6, 3}), p, *p.door_h, hx, hy);
        CHECK_FALSE(prof.direct);
        REQUIRE(prof.unique_closest);
        CHECK(*prof.unique_closest == std::pair<Point, Point>{{6, 3}, {3, 10}});
        REQUIRE(prof.samples.size() == 2);
        for (const DoorSample& s : prof.samples) {
            CHECK(s.dist == 10 + (3 - s.v.x));
            CHECK(prof.crossing_links(s) == 2);
        }
        testing::PocketCase c{OrthoSegment::point({6, 3}), p, *p.door_h, prof};
        CHECK(testing::check_pocket_case(c, inst) == "");
    }
}

TEST_CASE("pocket profiles agree with the clipped oracle") {
    int cases = 0, hidden = 0;
    for (std::uint64_t seed = 1; seed <= 400 && cases < 60; ++seed) {
        auto inst = pierce_instance(seed);
        if (!inst) continue;
        for (const testing::PocketCase& c : testing::pocket_cases(*inst)) {
            INFO("seed " << seed);
            CHECK(testing::check_pocket_case(c, *inst) == "");
            ++cases;
            if (c.profile.unique_closest) ++hidden;
        }
    }
    CHECK(cases >= 60);
    MESSAGE(cases << " pocket doors, " << hidden << " hidden");
}

TEST_CASE("paths inside random pockets match the clipped oracle") {
    int tested = 0;
    for (std::uint64_t seed = 1; seed <= 400 && tested < 40; ++seed) {
        auto inst = pierce_instance(seed);
        if (!inst) continue;
        for (const testing::PocketCase& c : testing::pocket_cases(*inst)) {
            Point p = c.piece.first(), q = c.door.first();
            PocketPath r = simple_polygon_mlsp(p, q, c.pocket);
            testing::ClippedOracle o(c.pocket.polygon, {p.x, q.x}, {p.y, q.y});
            o.run({p});
            CHECK(r.path.length == o.cost(q).dist);
            CHECK(r.path.links == o.cost(q).links);
            CHECK(path_metrics(r.path.polyline) == std::pair<Coord, int>{r.path.length, r.path.links});
            CHECK(testing::path_is_free(r.path.polyline, inst->obstacles));
            ++tested;
        }
    }
    CHECK(tested >= 40);
}

TEST_CASE("solving with terminals in pockets") {
    auto solve_vs_oracle = [](const Instance& inst) {
        PathResult r = solve(inst).path;
        OracleAnswer a = oracle_solve(inst);
        CHECK(testing::check_against_oracle(inst, r, a) == "");
    };
    SUBCASE("source in a pocket, target far to the right") {
        Instance inst;
        inst.obstacles = {notch_up()};
        inst.source = Terminal::point({4, 5});
        inst.target = Terminal::point({30, 2});
        solve_vs_oracle(inst);
    }
    SUBCASE("both terminals in pockets of one obstacle") {
        Instance inst;
        inst.obstacles = {hook()};
        inst.source = Terminal::point({6, 3});
        inst.target = Terminal::point({2, 9});
        solve_vs_oracle(inst);
    }
    SUBCASE("segment through two pockets to a point") {
        Instance inst;
        inst.obstacles = {notch_up(), notch_down()};
        inst.source = Terminal::segment_between({4, 5}, {4, 13});
        inst.target = Terminal::point({-5, 20});
        solve_vs_oracle(inst);
    }
    SUBCASE("terminal lying on a door") {
        Instance inst;
        inst.obstacles = {notch_up()};
        inst.source = Terminal::segment_between({3, 8}, {6, 8});
        inst.target = Terminal::point({4, 4});
        solve_vs_oracle(inst);
    }
    SUBCASE("random pierce instances") {
        int tested = 0;
        for (std::uint64_t seed = 1; seed <= 600 && tested < 60; ++seed) {
            auto inst = pierce_instance(seed);
            if (!inst || testing::pocket_cases(*inst).empty()) continue;
            INFO("seed " << seed);
            solve_vs_oracle(*inst);
            ++tested;
        }
        CHECK(tested >= 60);
    }
}
