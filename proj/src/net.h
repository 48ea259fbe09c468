// net.h - routed nets and logic-cell handles
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nodename.h"

namespace wsm {

struct LogicCell {
    TileCoord tile;
    std::string out_pin;       // CLB output pin name, empty when unused
    std::string in_pin;        // CLB input pin name, empty when unused
    bool inverting = false;
};

// A net is an ordered walk over fabric nodes. The first node is the driving
// LOGIC_OUTS tap, the last a CLB input pin; a wire ride appears as the same
// name twice, once at each tail tile. The driving CLB pin itself is kept in
// source_pin rather than in the node list.
struct Net {
    std::string name;
    std::string source_pin;
    std::string dest_pin;
    std::vector<std::pair<TileCoord, std::string>> nodes;

    bool operator==(const Net&) const = default;
};

} // namespace wsm
