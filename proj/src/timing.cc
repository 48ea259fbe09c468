#include "timing.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "error.h"

namespace wsm {

namespace {

std::string fmt_ps(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

DelayModel calibrate(const std::vector<CalibrationRow>& table, double cell_delay)
{
    if (table.empty())
        throw CalibrationError("calibration table is empty");
    if (cell_delay < 0)
        throw CalibrationError("cell delay must be >= 0");

    DelayModel m;
    m.cell_delay = cell_delay;
    std::map<Kind, std::pair<double, int>> sums;                 // per-hop sum, rows
    std::map<std::pair<Kind, int>, std::pair<double, int>> pts;  // hop-sum sum, rows
    for (const auto& row : table) {
        if (row.frequency_khz <= 0)
            throw CalibrationError("non-positive frequency for " +
                                   std::string(ro_label(row.kind)));
        if (row.interconnect_count <= 0)
            throw CalibrationError("non-positive interconnect count for " +
                                   std::string(ro_label(row.kind)));
        double total_ps = 1e9 / (2.0 * row.frequency_khz);
        double hop_sum = total_ps - 2.0 * cell_delay;
        if (hop_sum < 0)
            throw InfeasibleCellDelayError(
                "cell delay " + fmt_ps(cell_delay) + " ps exceeds the " +
                std::string(ro_label(row.kind)) + " loop budget of " + fmt_ps(total_ps) + " ps");
        auto& s = sums[row.kind];
        s.first += hop_sum / row.interconnect_count;
        s.second++;
        auto& p = pts[{row.kind, row.interconnect_count}];
        p.first += hop_sum;
        p.second++;
    }
    for (const auto& [kind, s] : sums)
        m.hop_delay[kind] = s.first / s.second;
    for (const auto& [key, p] : pts)
        m.loop_points[key] = p.first / p.second;
    return m;
}

TimingReport estimate_hops(const std::vector<std::pair<std::string, Kind>>& counted_hops,
                           const DelayModel& m)
{
    TimingReport r;
    r.interconnect_count = static_cast<int>(counted_hops.size());

    double hop_sum = 0.0;
    bool pure = !counted_hops.empty();
    for (const auto& [node, kind] : counted_hops)
        if (kind != counted_hops.front().second)
            pure = false;

    auto point = pure ? m.loop_points.find({counted_hops.front().second, r.interconnect_count})
                      : m.loop_points.end();
    if (pure && point != m.loop_points.end()) {
        hop_sum = point->second;
        double each = hop_sum / r.interconnect_count;
        for (const auto& [node, kind] : counted_hops)
            r.per_hop.push_back({node, kind, each});
    } else {
        for (const auto& [node, kind] : counted_hops) {
            auto it = m.hop_delay.find(kind);
            if (it == m.hop_delay.end())
                throw ModelIncompleteError("no delay entry for kind " +
                                           std::string(kind_name(kind)));
            hop_sum += it->second;
            r.per_hop.push_back({node, kind, it->second});
        }
    }

    r.total_loop_delay_ps = hop_sum + 2.0 * m.cell_delay;
    if (r.total_loop_delay_ps <= 0)
        throw ModelIncompleteError("loop has no delay; cannot form a frequency");
    r.frequency_khz = 1e9 / (2.0 * r.total_loop_delay_ps);
    return r;
}

std::vector<CalibrationRow> parse_calibration_csv(const std::string& text)
{
    std::vector<CalibrationRow> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        if (!header_seen) {
            if (line != "ro_type,frequency_khz,net_delay_ps,interconnect_count")
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header "
                                 "'ro_type,frequency_khz,net_delay_ps,interconnect_count'");
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        std::string kind_s, f_s, d_s, n_s;
        if (!std::getline(ls, kind_s, ',') || !std::getline(ls, f_s, ',') ||
            !std::getline(ls, d_s, ',') || !std::getline(ls, n_s))
            throw ParseError("line " + std::to_string(lineno) + ": expected 4 columns, got '" +
                             line + "'");
        auto kind = kind_from_name(kind_s);
        if (!kind)
            throw ParseError("line " + std::to_string(lineno) + ": unknown interconnect kind '" +
                             kind_s + "'");
        CalibrationRow row;
        row.kind = *kind;
        try {
            row.frequency_khz = std::stod(f_s);
            row.net_delay_ps = std::stod(d_s);
            row.interconnect_count = std::stoi(n_s);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad number in '" + line + "'");
        }
        rows.push_back(row);
    }
    if (!header_seen)
        throw ParseError("calibration CSV has no header line");
    return rows;
}

std::vector<CalibrationRow> load_calibration_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_calibration_csv(buf.str());
}

std::string format_model(const DelayModel& m)
{
    std::string out = "cell_delay_ps " + fmt_ps(m.cell_delay) + "\n";
    for (const auto& [kind, ps] : m.hop_delay)
        out += "hop " + std::string(ro_label(kind)) + " " + fmt_ps(ps) + "\n";
    for (const auto& [key, ps] : m.loop_points)
        out += "point " + std::string(ro_label(key.first)) + " " + std::to_string(key.second) +
               " " + fmt_ps(ps) + "\n";
    return out;
}

} // namespace wsm
