#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mlsp/generator.h"
#include "mlsp/io.h"
#include "mlsp/oracle.h"
#include "mlsp/render.h"
#include "mlsp/solver.h"

using namespace mlsp;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kParse = 2, kRefused = 3 };

// Loads and validates an instance; on failure prints the reason and sets the
// exit code.
bool load(const std::string& path, Instance& inst, int& code, bool require_valid = true) {
    try {
        inst = parse_instance(read_file(path));
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        code = kParse;
        return false;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        code = kParse;
        return false;
    }
    if (!require_valid) return true;
    ValidationReport rep = validate(inst);
    if (!rep.ok()) {
        for (const ValidationIssue& i : rep.issues) std::cerr << path << ": " << i.message << "\n";
        code = kInvalid;
        return false;
    }
    return true;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) std::cout << text;
    else write_file(out, text);
}

TerminalKind kind_of(const std::string& s) {
    if (s == "segment") return TerminalKind::Segment;
    if (s == "polygon") return TerminalKind::Polygon;
    return TerminalKind::Point;
}

template <class T>
T median(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-link shortest paths among rectilinear obstacles"};
    app.require_subcommand(1);
    int code = kOk;

    std::string file, json_out, svg_out, result_in;
    bool debug_events = false;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
    solve_cmd->add_option("file", file, "Instance file")->required();
    solve_cmd->add_option("--json", json_out, "Write the result document here instead of stdout");
    solve_cmd->add_option("--svg", svg_out, "Also render the instance and path");
    solve_cmd->add_flag("--debug-events", debug_events, "Print the sweep event log to stderr");

    auto* oracle_cmd = app.add_subcommand("oracle", "Solve an instance with the Hanan-grid oracle");
    oracle_cmd->add_option("file", file, "Instance file")->required();
    oracle_cmd->add_option("--json", json_out, "Write the result document here instead of stdout");

    auto* check_cmd = app.add_subcommand("check", "Validate an instance");
    check_cmd->add_option("file", file, "Instance file")->required();

    GenOptions gen;
    std::string kind = "point", gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--obstacles", gen.obstacles, "Number of obstacles")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--coord-max", gen.coord_max, "Coordinate range [0, M]")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--kind", kind, "Terminal kind")->check(CLI::IsMember({"point", "segment", "polygon"}));
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_flag("--allow-box-pierce", gen.allow_box_pierce, "Let terminals enter bounding boxes");
    gen_cmd->add_option("-o,--out", gen_out, "Output file (default stdout)");

    std::vector<int> sizes{50, 100, 200, 400, 800};
    int reps = 3;
    std::uint64_t bench_seed = 1;
    std::string csv_out;
    auto* bench_cmd = app.add_subcommand("bench", "Time the solver on random point instances");
    bench_cmd->add_option("--sizes", sizes, "Obstacle counts")->delimiter(',');
    bench_cmd->add_option("--reps", reps, "Instances per size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "First seed");
    bench_cmd->add_option("--csv", csv_out, "Output file (default stdout)");

    std::string render_out;
    auto* render_cmd = app.add_subcommand("render", "Render an instance (and a result) as SVG");
    render_cmd->add_option("file", file, "Instance file")->required();
    render_cmd->add_option("--result", result_in, "Result document to draw");
    render_cmd->add_option("-o,--out", render_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) {
            Instance inst;
            if (!load(file, inst, code)) return code;
            SolveOptions opt;
            opt.debug_events = debug_events;
            SolveReport rep = solve(inst, opt);
            if (debug_events)
                for (const std::string& line : rep.event_log) std::cerr << line << "\n";
            ResultDoc doc{rep.path.length, rep.path.links, rep.path.polyline, rep.stats};
            emit(print_result(doc), json_out);
            if (!svg_out.empty()) {
                RenderPath rp{rep.path.polyline, rep.path.length, rep.path.links};
                write_file(svg_out, render_svg(inst, &rp));
            }
        } else if (*oracle_cmd) {
            Instance inst;
            if (!load(file, inst, code)) return code;
            try {
                OracleAnswer a = oracle_solve(inst);
                ResultDoc doc{a.dist, a.min_links, a.witness,
                              {{"closest_pairs", static_cast<std::int64_t>(a.closest_pairs.size())}}};
                emit(print_result(doc), json_out);
            } catch (const OracleRefused& e) {
                std::cerr << e.what() << "\n";
                return kRefused;
            }
        } else if (*check_cmd) {
            Instance inst;
            if (!load(file, inst, code)) return code;
            std::cout << "ok\n";
        } else if (*gen_cmd) {
            gen.kind = kind_of(kind);
            try {
                emit(print_instance(generate_instance(gen)), gen_out);
            } catch (const GenerationFailure& e) {
                std::cerr << e.what() << "\n";
                return kInvalid;
            }
        } else if (*bench_cmd) {
            std::ostringstream csv;
            csv << "n,N,events,ms\n";
            for (int size : sizes) {
                std::vector<std::int64_t> ns, bigns, events;
                std::vector<double> ms;
                for (int r = 0; r < reps; ++r) {
                    GenOptions g;
                    g.obstacles = size;
                    g.coord_max = std::max<Coord>(200, 40 * static_cast<Coord>(size));
                    g.seed = bench_seed + static_cast<std::uint64_t>(r);
                    Instance inst = generate_instance(g);
                    auto t0 = std::chrono::steady_clock::now();
                    SolveReport rep = solve(inst);
                    auto t1 = std::chrono::steady_clock::now();
                    ns.push_back(rep.stats.at("n"));
                    bigns.push_back(rep.stats.at("N"));
                    events.push_back(rep.stats.at("events"));
                    ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
                }
                csv << median(ns) << ',' << median(bigns) << ',' << median(events) << ',' << median(ms) << "\n";
            }
            emit(csv.str(), csv_out);
        } else if (*render_cmd) {
            Instance inst;
            if (!load(file, inst, code, false)) return code;
            std::string svg;
            if (!result_in.empty()) {
                ResultDoc r;
                try {
                    r = parse_result(read_file(result_in));
                } catch (const ParseError& e) {
                    std::cerr << result_in << ": " << e.what() << "\n";
                    return kParse;
                }
                RenderPath rp{r.path, r.distance, r.links};
                svg = render_svg(inst, &rp);
            } else {
                svg = render_svg(inst);
            }
            emit(svg, render_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return code;
}
