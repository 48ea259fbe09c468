#include "extractor.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "error.h"

namespace wsm {

namespace {

std::optional<NodeName> try_parse(const std::string& s)
{
    try {
        return parse_node(s);
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

bool is_clb_pin(const std::string& s)
{
    auto n = try_parse(s);
    return n && n->cls == NodeClass::ClbPin;
}

void check_net_node(const Fabric& f, TileCoord t, const std::string& name)
{
    if (!f.in_bounds(t))
        throw ConsistencyError("net node '" + name + "' sits at " + format_tile(t) +
                               ", outside the fabric");
    if (is_clb_pin(name))
        return; // planar side, not a switch-matrix node
    if (!f.has_node(t, name))
        throw ConsistencyError("net node '" + name + "' missing from the fabric");
}

} // namespace

std::pair<LogicCell, LogicCell> place_endpoints(const Fabric& f, TileCoord src_tile,
                                                TileCoord dst_tile)
{
    for (TileCoord t : {src_tile, dst_tile})
        if (!f.in_bounds(t))
            throw PlacementError("tile " + format_tile(t) + " outside " +
                                 std::to_string(f.width()) + "x" + std::to_string(f.height()) +
                                 " fabric");
    LogicCell src{src_tile, "CLBLM_M_A", "", false};
    LogicCell dst{dst_tile, "", "CLBLM_M_A1", false};
    return {src, dst};
}

std::vector<LevelReport> extract_levels(const Fabric& f, const Net& net, int max_level)
{
    if (max_level < 0)
        throw ConfigError("max_level must be >= 0");
    std::vector<LevelReport> out;
    std::set<TileCoord> visited;
    for (const auto& [tile, name] : net.nodes) {
        check_net_node(f, tile, name);
        if (is_clb_pin(name))
            continue;
        if (!visited.insert(tile).second)
            continue; // switch matrix already entered earlier along the net
        if (max_level > 0 && static_cast<int>(out.size()) == max_level)
            break;
        LevelReport r;
        r.level = static_cast<int>(out.size()) + 1;
        r.tile = tile;
        r.pin = name;
        r.pips = f.downhill_nodes(tile, name);
        out.push_back(std::move(r));
    }
    return out;
}

std::string report_levels_csv(const std::vector<LevelReport>& levels)
{
    std::string out = "level,pin,pip_endpoint\n";
    for (const auto& l : levels)
        for (const auto& p : l.pips)
            out += std::to_string(l.level) + "," + l.pin + "," + p + "\n";
    return out;
}

std::string report_levels_text(const std::vector<LevelReport>& levels)
{
    std::string out;
    for (const auto& l : levels) {
        if (!out.empty())
            out += "\n";
        out += "wsm_level=" + std::to_string(l.level) + " pin=" + l.pin +
               " tile=" + format_tile(l.tile) + " endpoints=" + std::to_string(l.pips.size()) +
               "\n";
        for (const auto& p : l.pips)
            out += "  " + p + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// net files
// ---------------------------------------------------------------------------

namespace {

struct WalkSearch {
    const Fabric& f;
    const std::vector<std::string>& tokens;
    std::vector<TileCoord> tiles;
    // deepest failure seen, for the error message
    size_t worst_i = 0;
    std::string worst_why;

    bool fail(size_t i, const std::string& why)
    {
        if (i >= worst_i) {
            worst_i = i;
            worst_why = why;
        }
        return false;
    }

    bool step(size_t i)
    {
        if (i + 1 == tokens.size())
            return true;
        const std::string& cur = tokens[i];
        const std::string& next = tokens[i + 1];
        TileCoord t = tiles[i];
        if (is_clb_pin(cur))
            return fail(i, "CLB pin '" + cur + "' can only end the net");
        if (next == cur) { // wire ride to the far tail
            for (TileCoord t2 : f.ride_targets(t, cur)) {
                tiles[i + 1] = t2;
                if (step(i + 1))
                    return true;
            }
            return fail(i, "wire '" + cur + "' boarded at " + format_tile(t) +
                               " has no usable far tail");
        }
        tiles[i + 1] = t;
        if (is_clb_pin(next)) {
            if (i + 2 != tokens.size())
                return fail(i + 1, "CLB pin '" + next + "' can only end the net");
            std::string imux;
            try {
                imux = Fabric::imux_for_input_pin(next);
            } catch (const Error& e) {
                return fail(i + 1, e.what());
            }
            if (imux != cur)
                return fail(i, "pin '" + next + "' is fed by " + imux + ", not '" + cur + "'");
            return true;
        }
        if (!f.downhill_nodes(t, cur).count(next))
            return fail(i, "no PIP " + format_tile(t) + " " + cur + " -> " + next);
        return step(i + 1);
    }
};

} // namespace

std::vector<std::pair<TileCoord, std::string>> infer_walk(const Fabric& f, TileCoord anchor,
                                                          const std::vector<std::string>& tokens)
{
    std::vector<std::pair<TileCoord, std::string>> out;
    if (tokens.empty())
        return out;
    if (!f.in_bounds(anchor))
        throw ConsistencyError("net anchor " + format_tile(anchor) + " outside the fabric");
    for (const auto& tok : tokens)
        if (!is_clb_pin(tok) && !f.has_node(anchor, tok))
            throw ConsistencyError("net node '" + tok + "' missing from the fabric");
    WalkSearch s{f, tokens};
    s.tiles.resize(tokens.size());
    s.tiles[0] = anchor;
    if (!s.step(0))
        throw FixedRouteError("net does not fit the fabric: " + s.worst_why);
    out.reserve(tokens.size());
    for (size_t i = 0; i < tokens.size(); i++)
        out.emplace_back(s.tiles[i], tokens[i]);
    return out;
}

Net parse_net_text(const Fabric& f, const std::string& text)
{
    std::string name, source_pin;
    std::optional<TileCoord> anchor;
    std::vector<std::string> tokens;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#')
            continue;
        if (key == "net") {
            if (!(ls >> name))
                throw ParseError("line " + std::to_string(lineno) + ": missing net name");
        } else if (key == "anchor") {
            std::string tile;
            if (!(ls >> tile))
                throw ParseError("line " + std::to_string(lineno) + ": missing anchor tile");
            try {
                anchor = parse_tile(tile).first;
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
        } else if (key == "source_pin") {
            if (!(ls >> source_pin))
                throw ParseError("line " + std::to_string(lineno) + ": missing source pin");
        } else if (key == "nodes") {
            std::string tok;
            while (ls >> tok)
                tokens.push_back(tok);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unrecognized key '" + key +
                             "'");
        }
    }
    if (name.empty())
        throw ParseError("net description has no 'net <name>' line");
    if (!tokens.empty() && !anchor)
        throw ParseError("net description has nodes but no 'anchor <tile>' line");

    Net net;
    net.name = name;
    if (!tokens.empty())
        net.nodes = infer_walk(f, *anchor, tokens);
    net.source_pin = source_pin;
    if (net.source_pin.empty() && !net.nodes.empty()) {
        try {
            net.source_pin = Fabric::output_pin_for_logic_out(net.nodes.front().second);
        } catch (const Error&) {
            // nets may legitimately start on an unmapped tap
        }
    }
    if (!net.nodes.empty() && is_clb_pin(net.nodes.back().second))
        net.dest_pin = net.nodes.back().second;
    return net;
}

Net load_net(const Fabric& f, const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_net_text(f, buf.str());
}

std::string net_to_text(const Net& net)
{
    std::string out = "net " + net.name + "\n";
    if (!net.nodes.empty())
        out += "anchor " + format_tile(net.nodes.front().first) + "\n";
    if (!net.source_pin.empty())
        out += "source_pin " + net.source_pin + "\n";
    if (!net.nodes.empty()) {
        out += "nodes";
        for (const auto& [tile, name] : net.nodes)
            out += " " + name;
        out += "\n";
    }
    return out;
}

} // namespace wsm
