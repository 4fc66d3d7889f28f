#include "mlsp/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mlsp {

using nlohmann::json;

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line, col = 1;
        else ++col;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("syntax error at " + line_col(text, e.byte) + ": " + e.what());
    }
}

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

Coord as_coord(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
    return v.get<Coord>();
}

Point as_point(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) throw ParseError(where + ": expected [x, y]");
    return {as_coord(v[0], where + "[0]"), as_coord(v[1], where + "[1]")};
}

std::vector<Point> as_points(const json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array of points");
    std::vector<Point> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_point(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

RectPolygon as_polygon(const json& v, const std::string& where) {
    try {
        return normalize_polygon(as_points(v, where));
    } catch (const InvalidPolygon& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Terminal as_terminal(const json& v, const std::string& where) {
    const json& kind = field(v, "kind", where);
    if (!kind.is_string()) throw ParseError(where + ".kind: expected a string");
    std::string k = kind.get<std::string>();
    if (k == "point") return Terminal::point(as_point(field(v, "at", where), where + ".at"));
    if (k == "segment") {
        Point a = as_point(field(v, "from", where), where + ".from");
        Point b = as_point(field(v, "to", where), where + ".to");
        if (a.x != b.x && a.y != b.y) throw ParseError(where + ": segment is not axis-parallel");
        return Terminal::segment_between(a, b);
    }
    if (k == "polygon") return Terminal::polygon_of(as_polygon(field(v, "vertices", where), where + ".vertices"));
    throw ParseError(where + ".kind: unknown terminal kind \"" + k + "\"");
}

json point_json(const Point& p) { return json::array({p.x, p.y}); }

json points_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (const Point& p : pts) a.push_back(point_json(p));
    return a;
}

json terminal_json(const Terminal& t) {
    switch (t.kind) {
        case TerminalKind::Point: return {{"kind", "point"}, {"at", point_json(t.segment.first())}};
        case TerminalKind::Segment:
            return {{"kind", "segment"}, {"from", point_json(t.segment.first())}, {"to", point_json(t.segment.second())}};
        case TerminalKind::Polygon: return {{"kind", "polygon"}, {"vertices", points_json(t.polygon.vertices)}};
    }
    return {};
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json doc = parse_json(text);
    const json& version = field(doc, "version", "document");
    if (!version.is_number_integer() || version.get<int>() != 1)
        throw ParseError("document.version: only version 1 is supported");
    Instance inst;
    const json& obs = field(doc, "obstacles", "document");
    if (!obs.is_array()) throw ParseError("document.obstacles: expected an array");
    for (std::size_t i = 0; i < obs.size(); ++i)
        inst.obstacles.push_back(as_polygon(obs[i], "obstacles[" + std::to_string(i) + "]"));
    inst.source = as_terminal(field(doc, "source", "document"), "source");
    inst.target = as_terminal(field(doc, "target", "document"), "target");
    return inst;
}

std::string print_instance(const Instance& inst) {
    json obs = json::array();
    for (const auto& p : inst.obstacles) obs.push_back(points_json(p.vertices));
    json doc = {{"version", 1}, {"obstacles", obs}, {"source", terminal_json(inst.source)},
                {"target", terminal_json(inst.target)}};
    return doc.dump(2) + "\n";
}

ResultDoc parse_result(const std::string& text) {
    json doc = parse_json(text);
    ResultDoc r;
    r.distance = as_coord(field(doc, "distance", "document"), "distance");
    const json& links = field(doc, "links", "document");
    if (!links.is_number_integer()) throw ParseError("links: expected an integer");
    r.links = links.get<int>();
    r.path = as_points(field(doc, "path", "document"), "path");
    if (doc.contains("stats")) {
        const json& st = doc["stats"];
        if (!st.is_object()) throw ParseError("stats: expected an object");
        for (auto it = st.begin(); it != st.end(); ++it) r.stats[it.key()] = as_coord(it.value(), "stats." + it.key());
    }
    return r;
}

std::string print_result(const ResultDoc& r) {
    json st = json::object();
    for (const auto& [k, v] : r.stats) st[k] = v;
    json doc = {{"distance", r.distance}, {"links", r.links}, {"path", points_json(r.path)}, {"stats", st}};
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace mlsp
