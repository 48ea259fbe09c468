#include "fabric.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "error.h"

namespace wsm {

namespace {

// ---------------------------------------------------------------------------
// per-tile node universe
//
// Every tile carries the same attachment slots; only realized wire
// continuations depend on position (they are dropped at the grid border).
// Slot totals per family match the reference per-WSM census.
// ---------------------------------------------------------------------------

struct NameGeom {
    Kind kind = Kind::Single;
    bool point_wire = false;             // boardable single-segment wire
    std::pair<int, int> disp{0, 0};      // full-span arrival offset
    std::vector<std::pair<int, int>> taps; // extra mid-span alight offsets
    bool line = false;                   // boardable multi-tap long line
    char line_axis = 'y';
    int line_span = 0;
    bool src_ok = false;
    bool dst_ok = false;
};

struct UniverseTables {
    std::vector<UniverseSlot> slots;
    std::map<std::string, NameGeom> names;
    std::map<Kind, int> census;
    std::vector<std::string> point_wires; // construction order
};

std::vector<std::string> single_begins()
{
    std::vector<std::string> v;
    auto four = [&](const char* stem, int variant_at, char variant) {
        for (int i = 0; i < 4; i++) {
            if (i == variant_at)
                v.push_back(std::string(stem) + "BEG_" + variant + std::to_string(i));
            else
                v.push_back(std::string(stem) + "BEG" + std::to_string(i));
        }
    };
    four("ER1", 0, 'S'); // ER1BEG_S0 ER1BEG1 ER1BEG2 ER1BEG3
    four("EL1", 3, 'N'); // EL1BEG0 .. EL1BEG_N3
    four("NR1", -1, ' ');
    four("NL1", 3, 'N');
    four("SR1", -1, ' ');
    four("SL1", -1, ' ');
    four("WR1", -1, ' ');
    four("WL1", -1, ' ');
    v.push_back("NN1BEG3");
    v.push_back("WN1BEG_N3");
    return v; // 34 names
}

std::vector<std::string> double_begins()
{
    std::vector<std::string> v;
    auto range = [&](const char* stem, int n) {
        for (int i = 0; i < n; i++)
            v.push_back(std::string(stem) + "BEG" + std::to_string(i));
    };
    range("EE2", 5);
    range("WW2", 5);
    range("NN2", 5);
    range("SS2", 4);
    range("NE2", 4);
    range("NW2", 4);
    range("SE2", 4);
    range("SW2", 4);
    return v; // 35 names
}

std::vector<std::string> stems_by_four(std::initializer_list<const char*> stems)
{
    std::vector<std::string> v;
    for (const char* stem : stems)
        for (int i = 0; i < 4; i++)
            v.push_back(std::string(stem) + "BEG" + std::to_string(i));
    return v;
}

const std::map<std::string, std::pair<int, int>>& tap_offsets()
{
    // mid-span taps; one extra arrival slot each at every tile
    static const std::map<std::string, std::pair<int, int>> taps = {
        {"EE4BEG0", {2, 0}},
        {"NN6BEG0", {0, 3}},
        {"SS6BEG0", {0, -3}},
        {"NE6BEG0", {0, 2}},
        {"SW6BEG0", {0, -2}},
    };
    return taps;
}

UniverseTables build_universe()
{
    UniverseTables u;
    auto add_slot = [&](const std::string& name, Kind k, bool src, bool dst) {
        u.slots.push_back({name, k, src, dst});
        u.census[k]++;
    };
    auto add_point_wire = [&](const std::string& name, Kind k) {
        NodeName n = parse_node(name);
        auto d = displacement(n);
        if (!d)
            throw Error("internal", "point wire without displacement: " + name);
        NameGeom g;
        g.kind = k;
        g.point_wire = true;
        g.disp = *d;
        if (auto it = tap_offsets().find(name); it != tap_offsets().end())
            g.taps.push_back(it->second);
        g.src_ok = true; // arrival slot
        g.dst_ok = true; // begin slot
        u.names.emplace(name, std::move(g));
        u.point_wires.push_back(name);
        add_slot(name, k, false, true); // begin
        add_slot(name, k, true, false); // arrival
        for (size_t i = 0; i < u.names[name].taps.size(); i++)
            add_slot(name, k, true, false); // tap arrival
    };
    auto add_local = [&](const std::string& name, Kind k, bool src, bool dst) {
        NameGeom g;
        g.kind = k;
        g.src_ok = src;
        g.dst_ok = dst;
        u.names.emplace(name, std::move(g));
        add_slot(name, k, src, dst);
    };
    auto add_line = [&](const std::string& name, Kind k, char axis, int span, bool boardable) {
        NameGeom g;
        g.kind = k;
        g.line = true;
        g.line_axis = axis;
        g.line_span = span;
        g.src_ok = true;
        g.dst_ok = boardable;
        u.names.emplace(name, std::move(g));
        add_slot(name, k, true, boardable);
    };

    for (const auto& n : single_begins())
        add_point_wire(n, Kind::Single);
    for (const auto& n : double_begins())
        add_point_wire(n, Kind::Double);
    for (const auto& n : stems_by_four({"EE4", "WW4"}))
        add_point_wire(n, Kind::Hquad);
    for (const auto& n : stems_by_four({"NN6", "SS6"}))
        add_point_wire(n, Kind::Vquad);
    for (const auto& n : stems_by_four({"NE6", "NW6", "SE6", "SW6"}))
        add_point_wire(n, Kind::BentQuad);
    for (int i = 0; i < 4; i++)
        add_point_wire("BOUNCE_N" + std::to_string(i), Kind::BounceAcross);
    for (int i = 0; i < 4; i++)
        add_point_wire("BOUNCE_S" + std::to_string(i), Kind::BounceAcross);
    add_local("BOUNCE_X0", Kind::BounceAcross, true, true);

    for (int i : {0, 6, 12})
        add_line("LV" + std::to_string(i), Kind::Vlong, 'y', 20, true);
    for (int i : {0, 18})
        add_line("LV_L" + std::to_string(i), Kind::Vlong12, 'y', 12, true);
    for (int i : {0, 6, 12})
        add_line("LH" + std::to_string(i), Kind::Hlong, 'x', 20, true);
    for (int i = 0; i < 12; i++)
        add_line("GCLK" + std::to_string(i), Kind::Global, 'y', 20, false);

    for (int i = 0; i < 42; i++)
        add_local("IMUX_L" + std::to_string(i), Kind::Pinfeed, false, true);
    // CLB outputs: twenty local taps plus four arrivals fed from the column
    // to the west (the spanning members of the family)
    for (int i = 0; i < 20; i++)
        add_local("LOGIC_OUTS" + std::to_string(i), Kind::Outbound, true, false);
    for (int i = 20; i < 24; i++)
        add_local("LOGIC_OUTS" + std::to_string(i), Kind::Outbound, true, false);
    for (int i = 0; i < 8; i++)
        add_local("BYP_ALT" + std::to_string(i), Kind::BounceIn, true, true);
    add_local("FAN_ALT0", Kind::BounceIn, true, true);
    for (int i = 0; i < 8; i++)
        add_local("BYP_BOUNCE" + std::to_string(i), Kind::PinBounce, true, true);
    for (int i = 0; i < 8; i++)
        add_local("FAN_BOUNCE" + std::to_string(i), Kind::PinBounce, true, true);
    add_local("VCC_WIRE", Kind::HvccGndOut, true, false);
    add_local("GND_WIRE", Kind::HvccGndOut, true, false);

    return u;
}

const UniverseTables& universe()
{
    static const UniverseTables u = build_universe();
    return u;
}

const NameGeom* find_name(const std::string& name)
{
    const auto& names = universe().names;
    auto it = names.find(name);
    return it == names.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// default connectivity
//
// The same functional catalog is stamped into every tile:
//   - the two reference downhill sets (kept verbatim; nothing
//     else may drive from those two sources),
//   - the hops used by the bundled NetA route,
//   - entry, transition and exit connections for the wires the
//     ring-oscillator builder rides,
// and a seeded layer of extra connections gives each fabric its own flavor
// without touching the reference sources.
// ---------------------------------------------------------------------------

const std::vector<std::string>& logic_outs2_set()
{
    static const std::vector<std::string> v = {
        "WW4BEG0", "NW2BEG0", "WW2BEG0", "NR1BEG0", "WR1BEG1", "NN6BEG0",
        "WN1BEG_N3", "NN1BEG3", "SW6BEG0", "NE6BEG0", "SW2BEG0", "NE2BEG0",
        "SS6BEG0", "IMUX_L8", "SS2BEG0", "IMUX_L40", "SR1BEG1", "IMUX_L32",
        "SL1BEG0", "IMUX_L24", "SE6BEG0", "IMUX_L16", "SE2BEG0", "IMUX_L0",
        "NL1BEG_N3", "ER1BEG1", "BYP_ALT0", "EL1BEG_N3", "FAN_ALT0", "EE4BEG0",
        "NW6BEG0", "EE2BEG0",
    };
    return v;
}

const std::vector<std::string>& nn1beg3_set()
{
    static const std::vector<std::string> v = {
        "WW4BEG0", "LV_L0", "WR1BEG1", "WW2BEG0", "NL1BEG_N3", "WL1BEG2",
        "NW6BEG0", "SW6BEG3", "NW2BEG0", "SW2BEG3", "NN6BEG0", "SS6BEG3",
        "NN2BEG0", "SS2BEG3", "NE6BEG0", "SR1BEG1", "LV_L18", "ER1BEG_S0",
    };
    return v;
}

// wires the ring-oscillator builder knows how to chain into loops
const std::vector<std::string>& loop_wires()
{
    static const std::vector<std::string> v = {
        "ER1BEG1", "ER1BEG2", "WL1BEG1", "WL1BEG2", "NR1BEG1", "NR1BEG2",
        "SL1BEG1", "SL1BEG2",
        "EE2BEG1", "WW2BEG1", "NE2BEG1", "SE2BEG1",
        "EE4BEG0", "EE4BEG1", "WW4BEG1",
        "NN6BEG0", "NN6BEG1", "SS6BEG0", "SS6BEG1",
        "NE6BEG1", "NW6BEG1", "SW6BEG0", "SW6BEG1",
        "BOUNCE_N1", "BOUNCE_S1", "BOUNCE_X0",
        "LV0", "LV6",
    };
    return v;
}

const std::vector<std::pair<std::string, std::string>>& neta_hops()
{
    static const std::vector<std::pair<std::string, std::string>> v = {
        {"WR1BEG1", "NL1BEG_N3"}, {"NL1BEG_N3", "ER1BEG_S0"},
        {"ER1BEG_S0", "NR1BEG0"}, {"NR1BEG0", "ER1BEG1"},
        {"ER1BEG1", "SR1BEG1"},   {"SR1BEG1", "IMUX_L23"},
    };
    return v;
}

const std::vector<std::pair<std::string, std::string>>& loop_transitions()
{
    static const std::vector<std::pair<std::string, std::string>> v = [] {
        std::vector<std::pair<std::string, std::string>> t;
        // any single-tile mover can hand off to any other
        const char* singles[] = {"ER1BEG1", "ER1BEG2", "WL1BEG1", "WL1BEG2",
                                 "NR1BEG1", "NR1BEG2", "SL1BEG1", "SL1BEG2"};
        for (const char* a : singles)
            for (const char* b : singles)
                if (std::string(a) != b)
                    t.emplace_back(a, b);
        auto both = [&](const char* a, const char* b) {
            t.emplace_back(a, b);
            t.emplace_back(b, a);
        };
        t.emplace_back("NE2BEG1", "SE2BEG1");
        t.emplace_back("SE2BEG1", "WW2BEG1");
        both("WW2BEG1", "EE2BEG1");
        both("EE4BEG0", "WW4BEG1");
        both("EE4BEG1", "WW4BEG1");
        t.emplace_back("EE4BEG0", "EE4BEG1");
        both("NN6BEG0", "SS6BEG1");
        both("NN6BEG0", "SS6BEG0");
        both("NE6BEG1", "SW6BEG1");
        t.emplace_back("SW6BEG1", "SW6BEG0");
        both("SW6BEG0", "NE6BEG1");
        both("SW6BEG0", "NW6BEG1");
        both("BOUNCE_N1", "BOUNCE_S1");
        t.emplace_back("BOUNCE_S1", "BOUNCE_X0");
        t.emplace_back("BOUNCE_X0", "BOUNCE_N1");
        both("LV0", "LV6");
        return t;
    }();
    return v;
}

// ---------------------------------------------------------------------------
// seeded extras: stable string/coordinate hashing, independent of the
// standard library so saved fabrics never change across toolchains
// ---------------------------------------------------------------------------

uint64_t fnv1a(std::string_view s)
{
    uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

uint64_t mix64(uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Draw {
    uint64_t state;
    uint64_t next() { return state = mix64(state); }
    size_t pick(size_t n) { return static_cast<size_t>(next() % n); }
};

const std::vector<std::string>& boardable_pool()
{
    static const std::vector<std::string> v = [] {
        std::vector<std::string> p;
        for (const auto& slot : universe().slots)
            if (slot.dst_ok && slot.kind != Kind::Pinfeed)
                if (std::find(p.begin(), p.end(), slot.name) == p.end())
                    p.push_back(slot.name);
        return p;
    }();
    return v;
}

const std::vector<std::string>& imux_pool()
{
    static const std::vector<std::string> v = [] {
        std::vector<std::string> p;
        for (int i = 0; i < 42; i++)
            p.push_back("IMUX_L" + std::to_string(i));
        return p;
    }();
    return v;
}

} // namespace

// ---------------------------------------------------------------------------
// Fabric
// ---------------------------------------------------------------------------

const std::vector<UniverseSlot>& Fabric::tile_universe() { return universe().slots; }

const std::map<Kind, int>& Fabric::universe_census() { return universe().census; }

Fabric Fabric::build(int width, int height, uint64_t seed)
{
    if (width < 1 || height < 1)
        throw InvalidDimensionError("fabric dimensions must be at least 1x1, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    Fabric f;
    f.width_ = width;
    f.height_ = height;
    f.seed_ = seed;
    f.down_.resize(static_cast<size_t>(width) * height);
    f.up_.resize(static_cast<size_t>(width) * height);
    for (int y = 0; y < height; y++)
        for (int x = 0; x < width; x++) {
            f.generate_base({x, y});
            f.generate_extras({x, y});
        }
    return f;
}

void Fabric::generate_base(TileCoord t)
{
    for (const auto& dst : logic_outs2_set())
        add_pip(t, "LOGIC_OUTS2", dst);
    for (const auto& dst : nn1beg3_set())
        add_pip(t, "NN1BEG3", dst);
    for (const auto& [src, dst] : neta_hops())
        add_pip(t, src, dst);
    for (const char* entry : {"LOGIC_OUTS4", "LOGIC_OUTS5", "LOGIC_OUTS20"})
        for (const auto& w : loop_wires())
            add_pip(t, entry, w);
    for (const auto& [src, dst] : loop_transitions())
        add_pip(t, src, dst);
    for (const auto& w : loop_wires()) {
        add_pip(t, w, "IMUX_L0");
        add_pip(t, w, "IMUX_L1");
    }
}

void Fabric::generate_extras(TileCoord t)
{
    const auto& u = universe();
    const auto& wires = boardable_pool();
    const auto& imux = imux_pool();

    // iterate source names in universe construction order, once per name
    std::set<std::string> seen;
    for (const auto& slot : u.slots) {
        if (!slot.src_ok || !seen.insert(slot.name).second)
            continue;
        const std::string& src = slot.name;
        if (src == "LOGIC_OUTS2" || src == "NN1BEG3")
            continue; // reference sources stay verbatim
        Draw d{mix64(seed_) ^ mix64((static_cast<uint64_t>(t.x) << 32) |
                                    static_cast<uint64_t>(static_cast<uint32_t>(t.y))) ^
               fnv1a(src)};
        int n_wire = 0, n_imux = 0;
        const NameGeom& g = u.names.at(src);
        if (g.point_wire) {
            n_wire = 2;
            n_imux = (d.next() & 1) ? 1 : 0;
        } else if (g.line) {
            n_wire = 2;
        } else
            switch (g.kind) {
            case Kind::Outbound: n_wire = 4; break;
            case Kind::HvccGndOut: n_wire = 4; n_imux = 2; break;
            case Kind::BounceIn:
            case Kind::PinBounce:
            case Kind::BounceAcross: n_wire = 3; break; // BOUNCE_X0
            default: n_wire = 2; break;
            }
        for (int i = 0; i < n_wire; i++) {
            for (int attempt = 0; attempt < 8; attempt++) {
                const std::string& dst = wires[d.pick(wires.size())];
                if (dst != src && add_pip(t, src, dst))
                    break;
            }
        }
        for (int i = 0; i < n_imux; i++) {
            for (int attempt = 0; attempt < 8; attempt++) {
                const std::string& dst = imux[d.pick(imux.size())];
                if (add_pip(t, src, dst))
                    break;
            }
        }
    }
}

bool Fabric::add_pip(TileCoord t, const std::string& src, const std::string& dst)
{
    check_tile(t);
    const NameGeom* sg = find_name(src);
    const NameGeom* dg = find_name(dst);
    if (!sg)
        throw ConsistencyError("unknown source node '" + src + "'");
    if (!dg)
        throw ConsistencyError("unknown destination node '" + dst + "'");
    if (!sg->src_ok)
        throw ConsistencyError("node '" + src + "' cannot source a PIP");
    if (!dg->dst_ok)
        throw ConsistencyError("node '" + dst + "' cannot be driven by a PIP");
    if (src == dst)
        throw ConsistencyError("PIP looping '" + src + "' onto itself at " + format_tile(t));
    size_t idx = static_cast<size_t>(t.y) * width_ + t.x;
    bool inserted = down_[idx][src].insert(dst).second;
    if (inserted)
        up_[idx][dst].insert(src);
    return inserted;
}

void Fabric::check_tile(TileCoord t) const
{
    if (!in_bounds(t))
        throw BoundsError("tile " + format_tile(t) + " outside " + std::to_string(width_) +
                          "x" + std::to_string(height_) + " fabric");
}

std::map<Kind, int> Fabric::census(TileCoord t) const
{
    check_tile(t);
    return universe().census;
}

bool Fabric::has_node(TileCoord t, const std::string& name) const
{
    return in_bounds(t) && find_name(name) != nullptr;
}

const std::set<std::string>& Fabric::downhill_nodes(TileCoord t, const std::string& name) const
{
    static const std::set<std::string> empty;
    check_tile(t);
    if (!find_name(name))
        throw UnknownNodeError("node '" + name + "' is not part of any switch matrix");
    const auto& m = down_[static_cast<size_t>(t.y) * width_ + t.x];
    auto it = m.find(name);
    return it == m.end() ? empty : it->second;
}

const std::set<std::string>& Fabric::uphill_nodes(TileCoord t, const std::string& name) const
{
    static const std::set<std::string> empty;
    check_tile(t);
    if (!find_name(name))
        throw UnknownNodeError("node '" + name + "' is not part of any switch matrix");
    const auto& m = up_[static_cast<size_t>(t.y) * width_ + t.x];
    auto it = m.find(name);
    return it == m.end() ? empty : it->second;
}

const std::map<std::string, std::set<std::string>>& Fabric::downhill_map(TileCoord t) const
{
    check_tile(t);
    return down_[static_cast<size_t>(t.y) * width_ + t.x];
}

std::vector<TileCoord> Fabric::ride_targets(TileCoord tile, const std::string& name) const
{
    check_tile(tile);
    const NameGeom* g = find_name(name);
    if (!g)
        throw UnknownNodeError("node '" + name + "' is not part of any switch matrix");
    std::vector<TileCoord> out;
    if (g->point_wire) {
        TileCoord full{tile.x + g->disp.first, tile.y + g->disp.second};
        if (in_bounds(full))
            out.push_back(full);
        for (auto [dx, dy] : g->taps) {
            TileCoord tap{tile.x + dx, tile.y + dy};
            if (in_bounds(tap))
                out.push_back(tap);
        }
    } else if (g->line && g->dst_ok) {
        // segments cover span-sized blocks along the line's axis
        int coord = g->line_axis == 'y' ? tile.y : tile.x;
        int dim = g->line_axis == 'y' ? height_ : width_;
        int lo = (coord / g->line_span) * g->line_span;
        int hi = std::min(lo + g->line_span, dim);
        for (int c = lo; c < hi; c++) {
            if (c == coord)
                continue;
            out.push_back(g->line_axis == 'y' ? TileCoord{tile.x, c} : TileCoord{c, tile.y});
        }
    }
    return out;
}

std::vector<TileCoord> Fabric::ride_sources(TileCoord tile, const std::string& name) const
{
    check_tile(tile);
    const NameGeom* g = find_name(name);
    if (!g)
        throw UnknownNodeError("node '" + name + "' is not part of any switch matrix");
    std::vector<TileCoord> out;
    if (g->point_wire) {
        TileCoord full{tile.x - g->disp.first, tile.y - g->disp.second};
        if (in_bounds(full))
            out.push_back(full);
        for (auto [dx, dy] : g->taps) {
            TileCoord tap{tile.x - dx, tile.y - dy};
            if (in_bounds(tap))
                out.push_back(tap);
        }
    } else if (g->line && g->dst_ok) {
        return ride_targets(tile, name); // block rides are symmetric
    }
    return out;
}

bool Fabric::operator==(const Fabric& o) const
{
    return width_ == o.width_ && height_ == o.height_ && seed_ == o.seed_ && down_ == o.down_;
}

// ---------------------------------------------------------------------------
// description file
// ---------------------------------------------------------------------------

std::string Fabric::to_text() const
{
    std::vector<std::string> lines;
    for (int y = 0; y < height_; y++)
        for (int x = 0; x < width_; x++) {
            TileCoord t{x, y};
            std::string tile = format_tile(t);
            for (const auto& [src, dsts] : downhill_map(t))
                for (const auto& dst : dsts)
                    lines.push_back("pip " + tile + " " + src + " -> " + dst);
        }
    std::sort(lines.begin(), lines.end());
    std::string out = "fabric width=" + std::to_string(width_) +
                      " height=" + std::to_string(height_) + "\n" +
                      "seed=" + std::to_string(seed_) + "\n";
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

void Fabric::save(const std::string& path) const
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f << to_text();
    if (!f)
        throw IoError("failed writing '" + path + "'");
}

Fabric Fabric::from_text(const std::string& text)
{
    int width = -1, height = -1;
    uint64_t seed = kDefaultSeed;
    std::vector<PipRef> pips;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::string body = line.substr(first);
        if (body.rfind("fabric ", 0) == 0) {
            int w = -1, h = -1;
            if (std::sscanf(body.c_str(), "fabric width=%d height=%d", &w, &h) != 2)
                throw ParseError("line " + std::to_string(lineno) + ": bad fabric header '" +
                                 body + "'");
            width = w;
            height = h;
        } else if (body.rfind("seed=", 0) == 0) {
            try {
                seed = std::stoull(body.substr(5));
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad seed '" + body + "'");
            }
        } else if (body.rfind("pip ", 0) == 0 || body == "pip") {
            try {
                pips.push_back(parse_pip(body));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unrecognized line '" + body +
                             "'");
        }
    }

    if (width < 0) {
        // headerless description: size from the largest coordinate used
        int mx = 0, my = 0;
        for (const auto& p : pips) {
            mx = std::max(mx, p.tile.x);
            my = std::max(my, p.tile.y);
        }
        width = mx + 1;
        height = my + 1;
        if (pips.empty())
            throw ParseError("empty fabric description");
    }
    if (width < 1 || height < 1)
        throw InvalidDimensionError("fabric dimensions must be at least 1x1, got " +
                                    std::to_string(width) + "x" + std::to_string(height));

    Fabric f;
    f.width_ = width;
    f.height_ = height;
    f.seed_ = seed;
    f.down_.resize(static_cast<size_t>(width) * height);
    f.up_.resize(static_cast<size_t>(width) * height);
    for (const auto& p : pips) {
        if (!f.in_bounds(p.tile))
            throw ConsistencyError("PIP tile " + format_tile(p.tile, p.cls) + " outside " +
                                   std::to_string(width) + "x" + std::to_string(height) +
                                   " fabric");
        f.add_pip(p.tile, p.src.raw, p.dst.raw);
    }
    return f;
}

Fabric Fabric::load(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return from_text(buf.str());
}

// ---------------------------------------------------------------------------
// planar (CLB pin) mapping: injective both ways
//   inputs  CLBLM_M_<A..G><1..6>  <->  IMUX_L0..41
//   outputs CLBLM_M_<A..H>        <->  LOGIC_OUTS2..9
//           CLBLM_M_<A..D>MUX     <->  LOGIC_OUTS20..23 (tap one column east)
// ---------------------------------------------------------------------------

std::string Fabric::imux_for_input_pin(const std::string& pin)
{
    NodeName n = parse_node(pin);
    if (n.cls != NodeClass::ClbPin || n.index < 1)
        throw UnknownNodeError("'" + pin + "' is not a CLB input pin");
    char letter = n.variant[0];
    if (n.variant.size() != 1 || letter < 'A' || letter > 'G')
        throw UnknownNodeError("CLB input pin '" + pin + "' has no pin-feed mapping");
    return "IMUX_L" + std::to_string((letter - 'A') * 6 + (n.index - 1));
}

std::string Fabric::input_pin_for_imux(const std::string& imux)
{
    NodeName n = parse_node(imux);
    if (n.cls != NodeClass::ImuxL || n.index < 0 || n.index >= 42)
        throw UnknownNodeError("'" + imux + "' is not a mapped pin feed");
    char letter = static_cast<char>('A' + n.index / 6);
    return std::string("CLBLM_M_") + letter + std::to_string(n.index % 6 + 1);
}

std::string Fabric::logic_out_for_output_pin(const std::string& pin)
{
    NodeName n = parse_node(pin);
    if (n.cls != NodeClass::ClbPin || n.index != 0)
        throw UnknownNodeError("'" + pin + "' is not a CLB output pin");
    if (n.variant.size() == 1) {
        char letter = n.variant[0];
        if (letter < 'A' || letter > 'H')
            throw UnknownNodeError("CLB output pin '" + pin + "' has no output tap");
        return "LOGIC_OUTS" + std::to_string(2 + (letter - 'A'));
    }
    if (n.variant.size() == 4 && n.variant.substr(1) == "MUX") {
        char letter = n.variant[0];
        if (letter < 'A' || letter > 'D')
            throw UnknownNodeError("CLB output pin '" + pin + "' has no output tap");
        return "LOGIC_OUTS" + std::to_string(20 + (letter - 'A'));
    }
    throw UnknownNodeError("CLB output pin '" + pin + "' has no output tap");
}

std::string Fabric::output_pin_for_logic_out(const std::string& node)
{
    NodeName n = parse_node(node);
    if (n.cls != NodeClass::LogicOuts)
        throw UnknownNodeError("'" + node + "' is not a CLB output tap");
    if (n.index >= 2 && n.index <= 9)
        return std::string("CLBLM_M_") + static_cast<char>('A' + n.index - 2);
    if (n.index >= 20 && n.index <= 23)
        return std::string("CLBLM_M_") + static_cast<char>('A' + n.index - 20) + "MUX";
    throw UnknownNodeError("'" + node + "' has no CLB pin mapping");
}

TileCoord Fabric::output_tap_tile(TileCoord tile, const std::string& pin) const
{
    check_tile(tile);
    std::string node = logic_out_for_output_pin(pin);
    NodeName n = parse_node(node);
    TileCoord tap = tile;
    if (n.index >= 20)
        tap = {tile.x + 1, tile.y};
    if (!in_bounds(tap))
        throw BoundsError("output pin " + pin + " at " + format_tile(tile) +
                          " taps outside the fabric");
    return tap;
}

} // namespace wsm
