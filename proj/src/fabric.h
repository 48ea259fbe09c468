// fabric.h - the switch-matrix grid: per-tile node universe, PIPs, adjacency
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "interconnect.h"
#include "nodename.h"

namespace wsm {

// One switch-matrix attachment slot. Every tile carries the same slot list;
// the per-kind slot totals are the reference census.
struct UniverseSlot {
    std::string name;
    Kind kind;
    bool src_ok; // a PIP may read the signal here (wire arrivals, taps, locals)
    bool dst_ok; // a PIP may drive it here (wire begins, pin feeds, locals)
};

class Fabric {
public:
    static constexpr uint64_t kDefaultSeed = 1;

    static Fabric build(int width, int height, uint64_t seed = kDefaultSeed);
    static Fabric load(const std::string& path);
    static Fabric from_text(const std::string& text);

    void save(const std::string& path) const;
    std::string to_text() const;

    int width() const { return width_; }
    int height() const { return height_; }
    uint64_t seed() const { return seed_; }
    bool in_bounds(TileCoord t) const
    {
        return t.x >= 0 && t.x < width_ && t.y >= 0 && t.y < height_;
    }

    // The slot list shared by every tile, and its per-kind totals.
    static const std::vector<UniverseSlot>& tile_universe();
    static const std::map<Kind, int>& universe_census();

    // Census of one tile (bounds-checked; identical across tiles by design).
    std::map<Kind, int> census(TileCoord t) const;

    bool has_node(TileCoord t, const std::string& name) const;

    // PIP adjacency inside one tile. Unknown names raise unknown-node.
    const std::set<std::string>& downhill_nodes(TileCoord t, const std::string& name) const;
    const std::set<std::string>& uphill_nodes(TileCoord t, const std::string& name) const;

    // Far-end tiles reachable by boarding wire `name` at `tile`: the full-span
    // arrival and any mid-span taps for point wires, every other in-bounds tile
    // of the segment for long lines. Empty for names that cannot be boarded.
    std::vector<TileCoord> ride_targets(TileCoord tile, const std::string& name) const;

    // Begin tiles whose wire `name` can be ridden to land on `tile` (inverse
    // of ride_targets).
    std::vector<TileCoord> ride_sources(TileCoord tile, const std::string& name) const;

    // Whole downhill map of a tile, for iteration in saves and tests.
    const std::map<std::string, std::set<std::string>>& downhill_map(TileCoord t) const;

    bool add_pip(TileCoord t, const std::string& src, const std::string& dst);

    bool operator==(const Fabric& o) const;

    // Planar (CLB-side) pin mapping, identical at every tile.
    static std::string imux_for_input_pin(const std::string& pin);  // CLBLM_M_D6 -> IMUX_L23
    static std::string input_pin_for_imux(const std::string& imux); // IMUX_L23 -> CLBLM_M_D6
    static std::string logic_out_for_output_pin(const std::string& pin); // CLBLM_M_A -> LOGIC_OUTS2
    static std::string output_pin_for_logic_out(const std::string& node);

    // Tile where the LOGIC_OUTS tap of `pin` driven from `tile` attaches
    // (one column east for the MUX pins, the tile itself otherwise).
    TileCoord output_tap_tile(TileCoord tile, const std::string& pin) const;

private:
    Fabric() = default;
    void generate_base(TileCoord t);
    void generate_extras(TileCoord t);
    void check_tile(TileCoord t) const;

    int width_ = 0;
    int height_ = 0;
    uint64_t seed_ = kDefaultSeed;
    // tile index = y * width + x
    std::vector<std::map<std::string, std::set<std::string>>> down_, up_;
};

} // namespace wsm
