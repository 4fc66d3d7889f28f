#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mlsp/instance.h"

namespace mlsp {

// Hanan grid of an instance: every obstacle corner and terminal corner
// coordinate, plus any extra coordinates the caller asks for.
struct HananGraph {
    std::vector<Coord> xs, ys;
    // Cell (i, j) spans [xs[i], xs[i+1]] x [ys[j], ys[j+1]]; value is the
    // owning obstacle index + 1, or 0 for free cells.
    std::vector<int> cell_owner;
    std::size_t nx() const { return xs.size(); }
    std::size_t ny() const { return ys.size(); }
    int owner(long i, long j) const;
    bool node_free(std::size_t i, std::size_t j) const;
    // Edge from (i, j) to the neighbour in direction dir (0 +x, 1 +y, 2 -x, 3 -y).
    bool edge_free(std::size_t i, std::size_t j, int dir) const;

    static HananGraph build(const Instance& inst, std::vector<Coord> extra_x = {}, std::vector<Coord> extra_y = {});
};

struct OracleAnswer {
    Coord dist = 0;
    int min_links = 0;
    std::vector<Point> witness;
    std::set<std::pair<Point, Point>> closest_pairs;
};

class OracleRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleMaxSide = 500;

// Lexicographic (length, links) Dijkstra over (node, heading) states of the
// Hanan grid. Throws OracleRefused when the grid exceeds 500 x 500 nodes.
OracleAnswer oracle_solve(const Instance& inst);

// Second, independent route: length-only Dijkstra, then a min-link dynamic
// program over the shortest-path DAG. Returns (dist, links).
std::pair<Coord, int> oracle_solve_dag(const Instance& inst);

// All grid-representable closest pairs of source and target.
std::set<std::pair<Point, Point>> oracle_closest_pairs(const Instance& inst);

// Instance with each obstacle replaced by its bounding box.
Instance boxed_instance(const Instance& inst);

// Instance with each obstacle replaced by its rectilinear convex hull.
Instance hulled_instance(const Instance& inst);

}  // namespace mlsp
