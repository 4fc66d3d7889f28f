#include "mlsp/render.h"

#include <algorithm>
#include <sstream>

namespace mlsp {

namespace {

constexpr Coord kMargin = 20;

class Canvas {
public:
    explicit Canvas(const Instance& inst) {
        std::vector<Point> all;
        for (const RectPolygon& p : inst.obstacles) all.insert(all.end(), p.vertices.begin(), p.vertices.end());
        for (const Terminal* t : {&inst.source, &inst.target}) {
            auto c = t->corners();
            all.insert(all.end(), c.begin(), c.end());
        }
        if (all.empty()) all.push_back({0, 0});
        xlo_ = xhi_ = all.front().x;
        ylo_ = yhi_ = all.front().y;
        for (const Point& p : all) {
            xlo_ = std::min(xlo_, p.x), xhi_ = std::max(xhi_, p.x);
            ylo_ = std::min(ylo_, p.y), yhi_ = std::max(yhi_, p.y);
        }
        Coord span = std::max({xhi_ - xlo_, yhi_ - ylo_, Coord{1}});
        // Integer zoom so that the drawing is at least ~600 units wide.
        zoom_ = std::max<Coord>(1, 600 / span);
    }

    Coord width() const { return (xhi_ - xlo_) * zoom_ + 2 * kMargin; }
    Coord height() const { return (yhi_ - ylo_) * zoom_ + 2 * kMargin + 30; }
    Coord x(Coord v) const { return (v - xlo_) * zoom_ + kMargin; }
    Coord y(Coord v) const { return (yhi_ - v) * zoom_ + kMargin; }

    std::string points(const std::vector<Point>& pts) const {
        std::ostringstream os;
        for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << x(pts[i].x) << ',' << y(pts[i].y);
        return os.str();
    }

private:
    Coord xlo_, xhi_, ylo_, yhi_, zoom_ = 1;
};

void terminal(std::ostringstream& os, const Canvas& c, const Terminal& t, const char* colour) {
    if (t.kind == TerminalKind::Polygon) {
        os << "  <polygon points=\"" << c.points(t.polygon.vertices) << "\" fill=\"" << colour
           << "\" fill-opacity=\"0.3\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    } else if (t.kind == TerminalKind::Segment) {
        Point a = t.segment.first(), b = t.segment.second();
        os << "  <line x1=\"" << c.x(a.x) << "\" y1=\"" << c.y(a.y) << "\" x2=\"" << c.x(b.x) << "\" y2=\"" << c.y(b.y)
           << "\" stroke=\"" << colour << "\" stroke-width=\"4\"/>\n";
    } else {
        Point a = t.segment.first();
        os << "  <circle cx=\"" << c.x(a.x) << "\" cy=\"" << c.y(a.y) << "\" r=\"4\" fill=\"" << colour << "\"/>\n";
    }
}

}  // namespace

std::string render_svg(const Instance& inst, const RenderPath* path) {
    Canvas c(inst);
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << c.width() << "\" height=\""
       << c.height() << "\" viewBox=\"0 0 " << c.width() << ' ' << c.height() << "\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << c.width() << "\" height=\"" << c.height()
       << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (const RectPolygon& p : inst.obstacles) {
        Rect b = bounding_box(p);
        os << "  <rect x=\"" << c.x(b.xlo) << "\" y=\"" << c.y(b.yhi) << "\" width=\"" << c.x(b.xhi) - c.x(b.xlo)
           << "\" height=\"" << c.y(b.ylo) - c.y(b.yhi)
           << "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (const RectPolygon& p : inst.obstacles)
        os << "  <polygon points=\"" << c.points(p.vertices) << "\" fill=\"#d3d3d3\" stroke=\"#555555\"/>\n";
    terminal(os, c, inst.source, "#1f5fbf");
    terminal(os, c, inst.target, "#2e8b57");
    if (path) {
        os << "  <polyline points=\"" << c.points(path->polyline)
           << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
        os << "  <text x=\"" << kMargin << "\" y=\"" << c.height() - 10
           << "\" font-family=\"monospace\" font-size=\"14\">links: " << path->links << "  length: " << path->length
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace mlsp
