#include "doctest.h"
#include "mlsp/render.h"
#include "mlsp/solver.h"
#include "support.h"

using namespace mlsp;

namespace {

std::size_t count(const std::string& s, const std::string& part) {
    std::size_t n = 0;
    for (std::size_t at = s.find(part); at != std::string::npos; at = s.find(part, at + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("rendering is deterministic") {
    GenOptions g;
    g.obstacles = 12;
    g.seed = 8;
    Instance inst = generate_instance(g);
    SolveReport r = solve(inst);
    RenderPath p{r.path.polyline, r.path.length, r.path.links};
    std::string a = render_svg(inst, &p);
    CHECK(a == render_svg(inst, &p));
    CHECK(count(a, "<polygon ") == 12);
    CHECK(count(a, "stroke-dasharray") == 12);
    CHECK(count(a, "<polyline ") == 1);
    CHECK(a.find("links: " + std::to_string(r.path.links)) != std::string::npos);
}

TEST_CASE("an empty instance draws only the frame and terminals") {
    Instance inst;
    inst.source = Terminal::point({0, 0});
    inst.target = Terminal::segment_between({5, 0}, {5, 5});
    std::string svg = render_svg(inst);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count(svg, "<svg ") == 1);
    CHECK(count(svg, "</svg>") == 1);
    CHECK(count(svg, "<polygon ") == 0);
    CHECK(count(svg, "<polyline ") == 0);
    CHECK(count(svg, "<text") == 0);
}

TEST_CASE("polygon terminals are outlined") {
    Instance inst;
    inst.source = Terminal::polygon_of(RectPolygon::from_rect({0, 3, 0, 3}));
    inst.target = Terminal::point({9, 9});
    std::string svg = render_svg(inst);
    CHECK(count(svg, "<polygon ") == 1);
    CHECK(svg.find("<polygon points=\"") < svg.find("<circle "));
    CHECK(count(svg, "#2e8b57") == 1);
}
