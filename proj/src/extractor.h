// extractor.h - endpoint placement, per-level PIP extraction, net files
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fabric.h"
#include "net.h"

namespace wsm {

// Downhill PIP endpoints visible at the k-th distinct switch matrix a net
// traverses. Level 1 is the source WSM; the pin is the node by which the net
// first enters that WSM (the LOGIC_OUTS tap at level 1, the arriving wire
// afterwards).
struct LevelReport {
    int level = 0;
    TileCoord tile;
    std::string pin;
    std::set<std::string> pips;
};

// Bind a source and a destination logic cell next to the given tiles.
// Stateless: the source always takes output pin CLBLM_M_A, the destination
// input pin CLBLM_M_A1, so co-located endpoints still get distinct pins.
std::pair<LogicCell, LogicCell> place_endpoints(const Fabric& f, TileCoord src_tile,
                                                TileCoord dst_tile);

// Walk the net, assign a level to each distinct WSM in first-visit order, and
// report the full downhill set of each level's entry pin. Stops after
// max_level levels (pass 0 for no limit).
std::vector<LevelReport> extract_levels(const Fabric& f, const Net& net, int max_level);

std::string report_levels_csv(const std::vector<LevelReport>& levels);
std::string report_levels_text(const std::vector<LevelReport>& levels);

// Net description file:
//   # comment
//   net <name>
//   anchor <tile>           tile of the first node
//   source_pin <pin>        optional driving CLB pin
//   nodes <tok> <tok> ...   node names in walk order, wire rides written as
//                           the same name twice (once per tail); several
//                           `nodes` lines concatenate
// Tiles are inferred by walking displacements from the anchor; when a tapped
// wire makes the ride ambiguous the loader backtracks until the whole list
// fits the fabric.
Net parse_net_text(const Fabric& f, const std::string& text);
Net load_net(const Fabric& f, const std::string& path);
std::string net_to_text(const Net& net);

// Tile inference used by the net loader; exposed for tests.
std::vector<std::pair<TileCoord, std::string>> infer_walk(const Fabric& f, TileCoord anchor,
                                                          const std::vector<std::string>& tokens);

} // namespace wsm
