// nodename.h - node/tile/PIP name grammar and wire displacement geometry
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "interconnect.h"

namespace wsm {

// Shape families a node name can take. Directional covers every two-letter
// wire name (SE2BEG1, NN1BEG3, WR1BEG1, ...); the rest are fixed stems.
enum class NodeClass : uint8_t {
    Directional,
    LogicOuts,  // LOGIC_OUTS<n>        CLB output taps
    Imux,       // IMUX<n>              pin feed, undecorated form
    ImuxL,      // IMUX_L<n>            pin feed
    BypAlt,     // BYP_ALT<n>           bounce-in glue
    FanAlt,     // FAN_ALT<n>           bounce-in glue
    Lv,         // LV<n>                vertical long line
    LvL,        // LV_L<n>              vertical 12-span long line
    ClbPin,     // CLBLM_M_A / CLBLM_M_D6 / CLBLM_M_AMUX
    GndVcc,     // VCC_WIRE, GND_WIRE
    Bounce,     // BOUNCE_N<n> / BOUNCE_S<n> / BOUNCE_X<n>
    PinBounceW, // BYP_BOUNCE<n>, FAN_BOUNCE<n>
    Gclk,       // GCLK<n>              global clock line
    Lh,         // LH<n>                horizontal long line
};

enum class Terminal : uint8_t { None, Beg, End };

struct NodeName {
    std::string raw;
    NodeClass cls = NodeClass::Directional;
    std::string prefix;                // direction pair or fixed stem
    int length = 0;                    // digits before BEG/END; 0 when absent
    Terminal terminal = Terminal::None;
    std::string variant;               // "_N", "_S", "_L", pin letter, ... ; "" if none
    int index = 0;
    Kind kind = Kind::Single;

    bool operator==(const NodeName& o) const { return raw == o.raw; }
};

// Throws ParseError naming the offending substring.
NodeName parse_node(std::string_view s);

// Rebuilds the textual form from the parsed fields (not from `raw`), so the
// round-trip tests exercise the whole grammar.
std::string format_node(const NodeName& n);

// Displacement of the wire's far end relative to its begin tile, in tiles.
// nullopt for names that never leave their tile.
std::optional<std::pair<int, int>> displacement(const NodeName& n);

struct TileCoord {
    int x = 0;
    int y = 0;
    bool operator==(const TileCoord&) const = default;
    auto operator<=>(const TileCoord&) const = default;
};

enum class TileClass : uint8_t { IntR, IntL, Clb };

// Columns alternate starting with INT_R at x = 0.
TileClass tile_class_for(TileCoord t);

std::string format_tile(TileCoord t);                  // class chosen by column parity
std::string format_tile(TileCoord t, TileClass cls);
std::pair<TileCoord, TileClass> parse_tile(std::string_view s);

// Far-end tile of an inter-tile wire anchored at `start`: BEG names (and
// undecorated line names) advance by the displacement, END names point back
// at the begin tile. Throws NotInterTileError for local-only names.
TileCoord end_tile(TileCoord start, const NodeName& n);

struct PipRef {
    TileCoord tile;
    TileClass cls = TileClass::IntR;   // as printed; generated fabrics use parity
    NodeName src;
    NodeName dst;

    bool operator==(const PipRef& o) const
    {
        return tile == o.tile && cls == o.cls && src == o.src && dst == o.dst;
    }
};

PipRef parse_pip(std::string_view s);
std::string format_pip(const PipRef& p);

} // namespace wsm
