#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlsp/geometry.h"
#include "mlsp/monotone_paths.h"
#include "mlsp/staircase.h"
#include "mlsp/xy_sweep.h"

namespace mlsp {

// Everything here works in the frame where the source is a vertical segment
// (possibly a point) from s_low up to s and the target lies in the region
// to its right between the ru path of s and the rd path of s_low.

// Vertical direction of the monotone piece that ends at a node.
enum class PieceDir : std::uint8_t { Up, Down, Flat };
const char* piece_dir_name(PieceDir d);

struct DividerPred {
    int node = -1;
    PieceDir dir = PieceDir::Up;
};

enum class NodeKind : std::uint8_t { SourceTop, SourceBottom, TopMid, BottomMid, Target };

struct DividerRecord {
    NodeKind kind = NodeKind::TopMid;
    Point point;
    std::size_t obstacle = 0;  // midpoints only
    bool reachable = false;
    Coord dist = 0;            // d(S, point)
    Point closest_source;      // one closest point of S
    bool flat = false;         // reached by a horizontal segment from S
    std::vector<DividerPred> preds;  // at most two
};

struct DividerGraph {
    Point s, s_low;
    // 0: s, 1: s_low, then top and bottom side midpoints of each obstacle.
    std::vector<DividerRecord> nodes;
    static int top_of(std::size_t obstacle) { return 2 + 2 * static_cast<int>(obstacle); }
    static int bottom_of(std::size_t obstacle) { return 3 + 2 * static_cast<int>(obstacle); }
};

class DividerSweep {
public:
    DividerSweep(const Domain& dom, Point s, Point s_low);

    // d(S, .) for every side midpoint, in increasing x.
    const DividerGraph& graph() const { return graph_; }
    // Appends a record for an arbitrary free point (the target).
    int add_point(Point p);

private:
    void resolve(int id);

    const Domain& dom_;
    DividerGraph graph_;
    std::vector<Point> ru_, rd_mirrored_;
    std::unique_ptr<RayShooter> left_;
    std::vector<std::size_t> edge_owner_;
};

DividerGraph sweep_divider_distances(const Domain& dom, Point s, Point s_low);

// Nodes on some shortest path to the target found by walking predecessors,
// with the directions in which each is a divider (the place where two
// monotone pieces meet on a horizontal link).
struct DividerSet {
    int target = -1;
    std::vector<int> nodes;               // closure, decreasing x
    std::map<int, std::vector<PieceDir>> glue;  // divider directions per node
    std::vector<int> ties;                // nodes with two optimal predecessors
    bool direct = false;                  // target seen horizontally from S
};

DividerSet find_divider_sequences(const DividerGraph& g, int target);

struct SubregionNode {
    PieceDir dir = PieceDir::Up;
    int f = -1;  // originating node (smallest x)
    int g = -1;  // right end (largest x)
    std::vector<int> originates;  // seeded nodes, f first
    std::vector<int> terminates;  // read nodes, g last
    StaircaseRegion region;       // in the frame where the piece runs up-right
    GridMap frame;
    bool built = false;
    std::string failure;
};

struct SubregionDag {
    std::vector<SubregionNode> nodes;
    std::vector<std::pair<int, int>> edges;  // (u, v): a terminate of u originates in v
    std::vector<int> order;                  // topological
    // Runtime audits of the structural invariants.
    int chain_violations = 0;     // originate off the upper chain or terminate off the lower chain
    int agreement_checks = 0;
    int agreement_violations = 0;  // glued dividers on a node's terminate chain with a different f
    int overlap_violations = 0;    // interiors of two nodes meet
    std::size_t total_baselines = 0;
};

struct DagOptions {
    bool check_overlap = false;
};

SubregionDag build_subregion_dag(const Domain& dom, const Domain& dom_mirrored, const DividerGraph& g,
                                 const DividerSet& set, const DagOptions& opt = {});

struct ComposeResult {
    PathResult path;
    int lambda = kInfLinks;
    Coord dist = 0;
    std::size_t sweeps = 0;
    std::size_t events = 0;
    int fallbacks = 0;  // per-pair sweeps used where a group sweep was unusable
};

struct ComposeOptions {
    bool use_tree = true;
    bool check_overlap = false;
    // Replace every group sweep by per-pair sweeps.
    bool pairs_only = false;
};

// Minimum-link shortest path from the vertical source segment to t. The
// domain holds the (rectilinear convex) obstacles in the composer's frame.
ComposeResult compose_min_link_path(const Domain& dom, Point s, Point s_low, Point t,
                                    const ComposeOptions& opt = {}, SubregionDag* dag_out = nullptr);

}  // namespace mlsp
