#include "nodename.h"

#include <array>
#include <cctype>
#include <charconv>

#include "error.h"

namespace wsm {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

int to_int(std::string_view s, std::string_view what)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

bool is_axis_letter(char c) { return c == 'N' || c == 'S' || c == 'E' || c == 'W'; }

std::pair<int, int> axis_step(char c)
{
    switch (c) {
    case 'N': return {0, 1};
    case 'S': return {0, -1};
    case 'E': return {1, 0};
    case 'W': return {-1, 0};
    default: throw ParseError(std::string("bad direction letter '") + c + "'");
    }
}

// index classes always print a trailing decimal index
bool class_has_index(NodeClass c)
{
    switch (c) {
    case NodeClass::GndVcc:
        return false;
    case NodeClass::ClbPin:
        return false; // handled specially (inputs carry a 1..6 digit)
    default:
        return true;
    }
}

NodeName make_fixed(std::string_view raw, NodeClass cls, std::string prefix,
                    std::string variant, int index, Kind kind)
{
    NodeName n;
    n.raw = std::string(raw);
    n.cls = cls;
    n.prefix = std::move(prefix);
    n.variant = std::move(variant);
    n.index = index;
    n.kind = kind;
    return n;
}

// stem followed by a mandatory decimal index
bool match_indexed(std::string_view s, std::string_view stem, int& index)
{
    if (s.size() <= stem.size() || s.substr(0, stem.size()) != stem)
        return false;
    std::string_view rest = s.substr(stem.size());
    if (!all_digits(rest))
        return false;
    index = to_int(rest, "index");
    return true;
}

NodeName parse_directional(std::string_view s)
{
    // <A><B><len>(BEG|END)[_N|_S]<index> with A in NSEW, B in NSEWLR
    NodeName n;
    n.raw = std::string(s);
    n.cls = NodeClass::Directional;
    if (s.size() < 6 || !is_axis_letter(s[0]))
        throw ParseError("unrecognized node name '" + std::string(s) + "'");
    char b = s[1];
    if (!is_axis_letter(b) && b != 'L' && b != 'R')
        throw ParseError("unrecognized node name '" + std::string(s) + "'");
    n.prefix = std::string(s.substr(0, 2));

    size_t pos = 2;
    size_t len_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        pos++;
    if (pos == len_start)
        throw ParseError("missing length in '" + std::string(s) + "'");
    n.length = to_int(s.substr(len_start, pos - len_start), "length");
    if (n.length != 1 && n.length != 2 && n.length != 4 && n.length != 6)
        throw ParseError("unsupported wire length in '" + std::string(s) + "'");

    if (s.substr(pos, 3) == "BEG")
        n.terminal = Terminal::Beg;
    else if (s.substr(pos, 3) == "END")
        n.terminal = Terminal::End;
    else
        throw ParseError("missing BEG/END in '" + std::string(s) + "'");
    pos += 3;

    if (pos + 1 < s.size() && s[pos] == '_') {
        char v = s[pos + 1];
        if (v != 'N' && v != 'S')
            throw ParseError("bad variant tag in '" + std::string(s) + "'");
        n.variant = std::string("_") + v;
        pos += 2;
    }

    std::string_view idx = s.substr(pos);
    if (!all_digits(idx))
        throw ParseError("missing index in '" + std::string(s) + "'");
    n.index = to_int(idx, "index");

    bool lr = (b == 'L' || b == 'R');
    bool bent = !lr && b != s[0];
    switch (n.length) {
    case 1: n.kind = Kind::Single; break;
    case 2: n.kind = Kind::Double; break;
    case 4: n.kind = Kind::Hquad; break;
    case 6:
        if (bent)
            n.kind = Kind::BentQuad;
        else
            n.kind = (s[0] == 'N' || s[0] == 'S') ? Kind::Vquad : Kind::Hquad;
        break;
    }
    return n;
}

NodeName parse_clb_pin(std::string_view s)
{
    // CLBLM_M_<letter>[MUX|digit]
    std::string_view rest = s.substr(8);
    if (rest.empty() || !std::isupper(static_cast<unsigned char>(rest[0])))
        throw ParseError("bad CLB pin '" + std::string(s) + "'");
    NodeName n;
    n.raw = std::string(s);
    n.cls = NodeClass::ClbPin;
    n.prefix = "CLBLM_M";
    char letter = rest[0];
    std::string_view tail = rest.substr(1);
    if (tail.empty()) {
        n.variant = std::string(1, letter); // output pin, e.g. CLBLM_M_A
        n.kind = Kind::Outbound;
    } else if (tail == "MUX") {
        n.variant = std::string(1, letter) + "MUX"; // spanning output pin
        n.kind = Kind::Outbound;
    } else if (all_digits(tail)) {
        n.variant = std::string(1, letter); // input pin, e.g. CLBLM_M_D6
        n.index = to_int(tail, "pin digit");
        if (n.index < 1 || n.index > 6)
            throw ParseError("CLB input pin digit out of range in '" + std::string(s) + "'");
        n.kind = Kind::Pinfeed;
    } else {
        throw ParseError("bad CLB pin '" + std::string(s) + "'");
    }
    return n;
}

} // namespace

NodeName parse_node(std::string_view s)
{
    if (s.empty())
        throw ParseError("empty node name");
    int idx = 0;
    if (s == "VCC_WIRE")
        return make_fixed(s, NodeClass::GndVcc, "VCC_WIRE", "", 0, Kind::HvccGndOut);
    if (s == "GND_WIRE")
        return make_fixed(s, NodeClass::GndVcc, "GND_WIRE", "", 0, Kind::HvccGndOut);
    if (match_indexed(s, "LOGIC_OUTS", idx))
        return make_fixed(s, NodeClass::LogicOuts, "LOGIC_OUTS", "", idx, Kind::Outbound);
    if (match_indexed(s, "IMUX_L", idx))
        return make_fixed(s, NodeClass::ImuxL, "IMUX", "_L", idx, Kind::Pinfeed);
    if (match_indexed(s, "IMUX", idx))
        return make_fixed(s, NodeClass::Imux, "IMUX", "", idx, Kind::Pinfeed);
    if (match_indexed(s, "BYP_ALT", idx))
        return make_fixed(s, NodeClass::BypAlt, "BYP_ALT", "", idx, Kind::BounceIn);
    if (match_indexed(s, "FAN_ALT", idx))
        return make_fixed(s, NodeClass::FanAlt, "FAN_ALT", "", idx, Kind::BounceIn);
    if (match_indexed(s, "BYP_BOUNCE", idx))
        return make_fixed(s, NodeClass::PinBounceW, "BYP_BOUNCE", "", idx, Kind::PinBounce);
    if (match_indexed(s, "FAN_BOUNCE", idx))
        return make_fixed(s, NodeClass::PinBounceW, "FAN_BOUNCE", "", idx, Kind::PinBounce);
    if (match_indexed(s, "BOUNCE_N", idx))
        return make_fixed(s, NodeClass::Bounce, "BOUNCE", "_N", idx, Kind::BounceAcross);
    if (match_indexed(s, "BOUNCE_S", idx))
        return make_fixed(s, NodeClass::Bounce, "BOUNCE", "_S", idx, Kind::BounceAcross);
    if (match_indexed(s, "BOUNCE_X", idx))
        return make_fixed(s, NodeClass::Bounce, "BOUNCE", "_X", idx, Kind::BounceAcross);
    if (match_indexed(s, "LV_L", idx))
        return make_fixed(s, NodeClass::LvL, "LV", "_L", idx, Kind::Vlong12);
    if (match_indexed(s, "LV", idx))
        return make_fixed(s, NodeClass::Lv, "LV", "", idx, Kind::Vlong);
    if (match_indexed(s, "LH", idx))
        return make_fixed(s, NodeClass::Lh, "LH", "", idx, Kind::Hlong);
    if (match_indexed(s, "GCLK", idx))
        return make_fixed(s, NodeClass::Gclk, "GCLK", "", idx, Kind::Global);
    if (s.substr(0, 8) == "CLBLM_M_")
        return parse_clb_pin(s);
    return parse_directional(s);
}

std::string format_node(const NodeName& n)
{
    switch (n.cls) {
    case NodeClass::Directional: {
        std::string out = n.prefix + std::to_string(n.length);
        out += (n.terminal == Terminal::End) ? "END" : "BEG";
        out += n.variant;
        out += std::to_string(n.index);
        return out;
    }
    case NodeClass::ClbPin: {
        std::string out = n.prefix + "_" + n.variant;
        if (n.index > 0)
            out += std::to_string(n.index);
        return out;
    }
    case NodeClass::GndVcc:
        return n.prefix;
    default: {
        std::string out = n.prefix + n.variant;
        if (class_has_index(n.cls))
            out += std::to_string(n.index);
        return out;
    }
    }
}

std::optional<std::pair<int, int>> displacement(const NodeName& n)
{
    switch (n.cls) {
    case NodeClass::Directional: {
        char a = n.prefix[0];
        char b = n.prefix[1];
        auto [ax, ay] = axis_step(a);
        if (b == 'L' || b == 'R')
            return std::pair{ax, ay}; // one tile along the first axis
        if (a == b)
            return std::pair{ax * n.length, ay * n.length};
        auto [bx, by] = axis_step(b);
        int first = (n.length + 1) / 2;
        int second = n.length / 2;
        return std::pair{ax * first + bx * second, ay * first + by * second};
    }
    case NodeClass::LogicOuts:
        // the four high-numbered CLB outputs reach the next column east
        if (n.index >= 20)
            return std::pair{1, 0};
        return std::nullopt;
    case NodeClass::Bounce:
        if (n.variant == "_N")
            return std::pair{0, 1};
        if (n.variant == "_S")
            return std::pair{0, -1};
        return std::nullopt; // BOUNCE_X stays put
    case NodeClass::Lv:
    case NodeClass::LvL:
    case NodeClass::Gclk:
        return std::pair{0, kind_info(n.kind).span_clbs};
    case NodeClass::Lh:
        return std::pair{kind_info(n.kind).span_clbs, 0};
    default:
        return std::nullopt;
    }
}

TileClass tile_class_for(TileCoord t) { return t.x % 2 == 0 ? TileClass::IntR : TileClass::IntL; }

std::string format_tile(TileCoord t) { return format_tile(t, tile_class_for(t)); }

std::string format_tile(TileCoord t, TileClass cls)
{
    const char* stem = cls == TileClass::IntR ? "INT_R" : cls == TileClass::IntL ? "INT_L" : "CLB";
    return std::string(stem) + "_X" + std::to_string(t.x) + "Y" + std::to_string(t.y);
}

std::pair<TileCoord, TileClass> parse_tile(std::string_view s)
{
    TileClass cls;
    std::string_view rest;
    if (s.substr(0, 6) == "INT_R_") {
        cls = TileClass::IntR;
        rest = s.substr(6);
    } else if (s.substr(0, 6) == "INT_L_") {
        cls = TileClass::IntL;
        rest = s.substr(6);
    } else {
        throw ParseError("bad tile name '" + std::string(s) + "'");
    }
    if (rest.empty() || rest[0] != 'X')
        throw ParseError("bad tile name '" + std::string(s) + "'");
    size_t ypos = rest.find('Y', 1);
    if (ypos == std::string_view::npos)
        throw ParseError("bad tile name '" + std::string(s) + "'");
    std::string_view xs = rest.substr(1, ypos - 1);
    std::string_view ys = rest.substr(ypos + 1);
    if (!all_digits(xs) || !all_digits(ys))
        throw ParseError("bad tile coordinates in '" + std::string(s) + "'");
    return {TileCoord{to_int(xs, "x"), to_int(ys, "y")}, cls};
}

TileCoord end_tile(TileCoord start, const NodeName& n)
{
    auto d = displacement(n);
    if (!d)
        throw NotInterTileError("'" + n.raw + "' does not leave its tile");
    if (n.terminal == Terminal::End)
        return {start.x - d->first, start.y - d->second};
    return {start.x + d->first, start.y + d->second};
}

PipRef parse_pip(std::string_view s)
{
    // tokens: "pip" <tile> <src> "->" <dst>, any run of blanks between them
    std::array<std::string_view, 6> tok;
    size_t ntok = 0;
    size_t i = 0;
    while (i < s.size() && ntok < tok.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            i++;
        size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t')
            i++;
        if (i > start)
            tok[ntok++] = s.substr(start, i - start);
    }
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
        i++;
    if (ntok != 5 || i != s.size())
        throw ParseError("expected 'pip <tile> <src> -> <dst>' in '" + std::string(s) + "'");
    if (tok[0] != "pip")
        throw ParseError("expected lowercase 'pip' keyword in '" + std::string(s) + "'");
    if (tok[3] != "->")
        throw ParseError("missing '->' separator in '" + std::string(s) + "'");
    PipRef p;
    auto [tile, cls] = parse_tile(tok[1]);
    p.tile = tile;
    p.cls = cls;
    p.src = parse_node(tok[2]);
    p.dst = parse_node(tok[4]);
    return p;
}

std::string format_pip(const PipRef& p)
{
    return "pip " + format_tile(p.tile, p.cls) + " " + format_node(p.src) + " -> " +
           format_node(p.dst);
}

} // namespace wsm
