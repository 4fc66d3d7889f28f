#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "mlsp/io.h"
#include "support.h"

using namespace mlsp;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("instances round-trip through JSON") {
    for (TerminalKind kind : {TerminalKind::Point, TerminalKind::Segment, TerminalKind::Polygon}) {
        GenOptions g;
        g.obstacles = 15;
        g.kind = kind;
        g.seed = 5;
        Instance inst = generate_instance(g);
        std::string text = print_instance(inst);
        Instance back = parse_instance(text);
        CHECK(back == inst);
        CHECK(print_instance(back) == text);
        CHECK(text.back() == '\n');
    }
}

TEST_CASE("minimal document") {
    Instance inst = parse_instance(R"({"version": 1, "obstacles": [[[0,0],[2,0],[2,2],[0,2]]],
        "source": {"kind": "point", "at": [-1, 1]},
        "target": {"kind": "segment", "from": [3, 0], "to": [3, 5]}})");
    REQUIRE(inst.obstacles.size() == 1);
    CHECK(inst.obstacles[0] == RectPolygon::from_rect({0, 2, 0, 2}));
    CHECK(inst.source == Terminal::point({-1, 1}));
    CHECK(inst.target == Terminal::segment_between({3, 0}, {3, 5}));
}

TEST_CASE("parse errors name the place") {
    CHECK(contains(error_of("{\n  \"version\": 1,\n  \"obstacles\": [,]\n}"), "line 3"));
    CHECK(contains(error_of(R"({"version": 2, "obstacles": []})"), "version"));
    CHECK(contains(error_of(R"({"version": 1, "obstacles": []})"), "missing field \"source\""));
    std::string bad_point = R"({"version": 1, "obstacles": [[[0,0],[2,0],[2,"x"],[0,2]]],
        "source": {"kind": "point", "at": [5, 5]}, "target": {"kind": "point", "at": [6, 6]}})";
    CHECK(contains(error_of(bad_point), "obstacles[0][2][1]"));
    std::string diagonal = R"({"version": 1, "obstacles": [],
        "source": {"kind": "segment", "from": [0, 0], "to": [1, 1]}, "target": {"kind": "point", "at": [6, 6]}})";
    CHECK(contains(error_of(diagonal), "source"));
    std::string kind = R"({"version": 1, "obstacles": [],
        "source": {"kind": "circle"}, "target": {"kind": "point", "at": [6, 6]}})";
    CHECK(contains(error_of(kind), "source.kind"));
    std::string not_rectilinear = R"({"version": 1, "obstacles": [[[0,0],[2,1],[0,2]]],
        "source": {"kind": "point", "at": [5, 5]}, "target": {"kind": "point", "at": [6, 6]}})";
    CHECK(contains(error_of(not_rectilinear), "obstacles[0]"));
}

TEST_CASE("results round-trip through JSON") {
    ResultDoc r;
    r.distance = 42;
    r.links = 3;
    r.path = {{0, 0}, {10, 0}, {10, 30}, {12, 30}};
    r.stats = {{"events", 17}, {"n", 8}};
    std::string text = print_result(r);
    CHECK(parse_result(text) == r);
    CHECK(print_result(parse_result(text)) == text);
    CHECK_THROWS_AS(parse_result(R"({"distance": 1, "path": []})"), ParseError);
    CHECK_THROWS_AS(parse_result(R"({"distance": 1, "links": 1, "path": [], "stats": {"a": "b"}})"), ParseError);
}

TEST_CASE("files") {
    auto path = std::filesystem::temp_directory_path() / "mlsp_io_test.json";
    write_file(path.string(), "abc\n");
    CHECK(read_file(path.string()) == "abc\n");
    std::filesystem::remove(path);
    CHECK_THROWS(read_file(path.string()));
}
