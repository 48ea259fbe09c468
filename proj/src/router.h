// router.h - optimal net routing, fixed-route validation, ring oscillators
#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fabric.h"
#include "net.h"
#include "timing.h"

namespace wsm {

enum class Objective : uint8_t {
    MinDelay,      // smallest summed per-boarding delay
    MinHops,       // fewest counted boardings
    Lexicographic, // delay first, hops as tie-break
};

struct RouteQuery {
    TileCoord src_tile;
    std::string src_pin = "CLBLM_M_A";
    TileCoord dst_tile;
    std::string dst_pin = "CLBLM_M_A1";
    // When present, every counted boarding must use one of these families;
    // the glue families (pin feeds, CLB outputs, bounce-in, pin-bounce) are
    // always available. Must be non-empty when present.
    std::optional<std::set<Kind>> allowed_kinds;
    Objective objective = Objective::MinHops;
    std::string name = "net0";
};

// Delay and boarding count of a net. Without a model every counted boarding
// costs one unit, so the delay and hop objectives coincide.
struct RouteCost {
    double delay = 0.0;
    int hops = 0;
};
RouteCost net_cost(const Fabric& f, const Net& net, const DelayModel* model = nullptr);

// Uniform-cost search over (tile, node) states; PIP steps pay the boarded
// family's delay, wire rides are free. Ties break on fewer hops, then on the
// deterministic expansion order, so equal queries return equal node lists.
Net route(const Fabric& f, const RouteQuery& q, const DelayModel* model = nullptr);

// Validate an explicit walk (PIP steps, wire rides, one final pin step) and
// wrap it as a Net without searching.
Net route_fixed(const Fabric& f, const std::string& name,
                const std::vector<std::pair<TileCoord, std::string>>& nodes);

// Re-route a baseline between its own endpoints and return the result only
// when it is no worse than the baseline on every component the objective
// cares about (delay for MinDelay, hops for MinHops, both for
// Lexicographic); otherwise, or on any failure, return the baseline.
Net optimize_route(const Fabric& f, const Net& baseline, Objective objective,
                   const DelayModel* model = nullptr);

// A closed routing loop through one inverter and one buffer. Every counted
// boarding uses the designated family; pin feeds and CLB outputs are glue.
struct RingOscillator {
    Kind kind = Kind::Single;
    std::vector<PipRef> loop;            // every PIP around the cycle, in order
    std::array<LogicCell, 2> cells;      // [0] inverter, [1] buffer
    int interconnect_count = 0;          // counted boardings around the loop
    Net net_a;                           // inverter output -> buffer input
    Net net_b;                           // buffer output -> inverter input
    std::vector<std::pair<TileCoord, std::string>> walk; // both nets, in order
};

// Build a loop of `target_count` boardings of `kind` anchored at `anchor`
// (0 picks the smallest loop). The second oscillator of a pair is
// conventionally anchored one column east.
RingOscillator build_ro(const Fabric& f, Kind kind, TileCoord anchor, int target_count = 0);

// Counted boardings of an oscillator, in loop order, for timing.
std::vector<std::pair<std::string, Kind>> counted_hops(const RingOscillator& ro);

TimingReport estimate(const RingOscillator& ro, const DelayModel& m);

} // namespace wsm
