// timing.h - per-kind delay model, calibration, loop timing estimation
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "interconnect.h"

namespace wsm {

// One measured oscillator: family label, loop frequency, the reported
// per-net delay (kept as reference data only) and the loop's hop count.
struct CalibrationRow {
    Kind kind = Kind::Single;
    double frequency_khz = 0.0;
    double net_delay_ps = 0.0;
    int interconnect_count = 0;
};

// Delay model: an average per-boarding delay per family, plus exact loop
// totals for the (family, hop count) geometries seen during calibration so
// those loops reproduce their measured frequency to full precision.
struct DelayModel {
    std::map<Kind, double> hop_delay;                  // ps per counted boarding
    std::map<std::pair<Kind, int>, double> loop_points; // ps hop-sum of a pure loop
    double cell_delay = 0.0;                            // ps per logic cell
};

struct HopDelay {
    std::string node;
    Kind kind = Kind::Single;
    double ps = 0.0;
};

struct TimingReport {
    double total_loop_delay_ps = 0.0;
    double frequency_khz = 0.0;
    std::vector<HopDelay> per_hop;
    int interconnect_count = 0;
};

// A loop at frequency f (kHz) has total delay 1e9/(2f) ps; subtracting the
// two cell delays and dividing by the hop count gives the per-hop value.
// Rows of one family are averaged; each distinct (family, hop count) keeps
// its exact hop-sum as a loop point.
DelayModel calibrate(const std::vector<CalibrationRow>& table, double cell_delay = 0.0);

// Time a loop given its counted boardings. A pure loop matching a
// calibration point uses the exact point total; anything else sums the
// per-family averages. Adds 2*cell_delay and reports f = 1e9/(2*total) kHz.
TimingReport estimate_hops(const std::vector<std::pair<std::string, Kind>>& counted_hops,
                           const DelayModel& m);

// CSV with header `ro_type,frequency_khz,net_delay_ps,interconnect_count`.
std::vector<CalibrationRow> parse_calibration_csv(const std::string& text);
std::vector<CalibrationRow> load_calibration_csv(const std::string& path);

// Text dump of a model: cell delay, per-family averages, loop points.
std::string format_model(const DelayModel& m);

} // namespace wsm
