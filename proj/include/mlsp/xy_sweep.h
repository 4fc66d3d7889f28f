#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlsp/geometry.h"
#include "mlsp/link_tree.h"
#include "mlsp/staircase.h"

namespace mlsp {

// How the terminate event turns baseline values into a link count at t.
enum class TerminalRule : std::uint8_t {
    Any,         // last link horizontal or vertical
    Horizontal,  // last link must be horizontal (a path glued at t continues horizontally)
};

struct SweepOptions {
    bool use_tree = true;
    // Link counts at s for a path leaving horizontally and for one that has
    // already turned upwards at s and runs horizontally again. A point source
    // uses (1, 2); a point reached with h links along a horizontal uses
    // (h, h + 2).
    int start_links = 1;
    int start_turn_links = 2;
    TerminalRule terminal = TerminalRule::Any;
    // Extra Seed/Read events merged into the region's own events.
    std::vector<SweepEvent> extra;
    bool debug_log = false;
};

// Horizontal segment recorded when an event sets baseline values: the path
// runs along `baseline` from the x of `from_event` to the event's x, then
// turns vertically at the event.
struct CanonicalSegment {
    bool valid = false;
    std::size_t baseline = 0;
    int from_event = -1;
    Coord x1 = 0, x2 = 0;
};

struct CanonicalTrace {
    std::vector<CanonicalSegment> by_event;  // indexed like LinkCountResult::events
};

// How a point on the sweep line (t or a Read point) is reached.
struct EndChoice {
    int value = kInfLinks;
    std::size_t baseline = 0;
    int provenance = -1;
    bool vertical = false;  // arrives along the event's vertical from `baseline`
};

struct LinkCountResult {
    int lambda = kInfLinks;
    EndChoice terminal;
    std::map<int, EndChoice> reads;  // by Read tag
    std::vector<SweepEvent> events;  // merged, sorted
    CanonicalTrace trace;
    // Every range minimum computed by the sweep, in order (value and index).
    std::vector<std::pair<int, std::size_t>> minima;
    int dropped_seeds = 0;
    std::vector<std::string> log;
};

// Runs the sweep over the region's events. Throws std::logic_error when the
// range structure becomes inconsistent.
LinkCountResult sweep_min_links(const StaircaseRegion& region, const SweepOptions& opt = {});

struct SweepPath {
    std::vector<Point> polyline;  // from the origin to the end point
    int origin_tag = -1;          // Seed tag, or -1 for s
};

// Backward walk over canonical segments from t.
SweepPath reconstruct_path(const StaircaseRegion& region, const LinkCountResult& result);
// Same, ending at the point of the Read event with the given tag.
SweepPath reconstruct_read(const StaircaseRegion& region, const LinkCountResult& result, int tag);

}  // namespace mlsp
