#include "emit.h"

#include <algorithm>
#include <array>
#include <cstdio>

#include "error.h"

namespace wsm {

namespace {

bool valid_net_name(const std::string& s)
{
    if (s.empty())
        return false;
    auto word = [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    };
    if (!word(s[0]))
        return false;
    for (char c : s.substr(1))
        if (!word(c) && !(c >= '0' && c <= '9'))
            return false;
    return true;
}

std::string fmt_int(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
}

} // namespace

std::string emit_fixed_route(const Net& net, const EmitterConfig& cfg)
{
    std::string name = cfg.net_name.empty() ? net.name : cfg.net_name;
    if (!valid_net_name(name))
        throw ConfigError("net name '" + name + "' is not a valid identifier");
    std::string tokens;
    for (const auto& [tile, node] : net.nodes) {
        tokens += node;
        tokens += ' ';
    }
    return "set_property FIXED_ROUTE { " + tokens + "} [get_nets " + name + "]\n";
}

std::string report_ros(const std::vector<std::pair<RingOscillator, TimingReport>>& rows,
                       ReportFormat format)
{
    if (rows.empty())
        throw EmptyReportError("no oscillators to report");

    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"ro_type", "frequency_khz", "net_delay_ps", "interconnect_count"});
    for (const auto& [ro, timing] : rows) {
        double per_hop = timing.interconnect_count
                             ? timing.total_loop_delay_ps / timing.interconnect_count
                             : 0.0;
        cells.push_back({std::string(ro_label(ro.kind)), fmt_int(timing.frequency_khz),
                         fmt_int(per_hop), std::to_string(timing.interconnect_count)});
    }

    std::string out;
    if (format == ReportFormat::Csv) {
        for (const auto& row : cells)
            out += row[0] + "," + row[1] + "," + row[2] + "," + row[3] + "\n";
        return out;
    }

    std::array<size_t, 4> width{};
    for (const auto& row : cells)
        for (size_t c = 0; c < 4; c++)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        out += row[0] + std::string(width[0] - row[0].size(), ' ');
        for (size_t c = 1; c < 4; c++)
            out += "  " + std::string(width[c] - row[c].size(), ' ') + row[c];
        out += "\n";
    }
    return out;
}

} // namespace wsm
