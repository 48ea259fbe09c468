// emit.h - fixed-route constraint statements and oscillator reports
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "net.h"
#include "router.h"
#include "timing.h"

namespace wsm {

enum class ConstraintFormat : uint8_t { Tcl, Xdc };
enum class ReportFormat : uint8_t { Csv, Text };

struct EmitterConfig {
    std::string net_name;                            // empty: use the net's own name
    ConstraintFormat format = ConstraintFormat::Tcl; // same statement either way
};

// One statement pinning the net to its node list, byte-deterministic:
//   set_property FIXED_ROUTE { <tokens> } [get_nets <name>]\n
// Tokens are the node names in walk order (wire rides keep both tails);
// a zero-hop net emits an empty `{ }`.
std::string emit_fixed_route(const Net& net, const EmitterConfig& cfg);

// Table of oscillators: ro_type, frequency_khz, net_delay_ps (mean delay per
// boarding), interconnect_count. Csv emits a header row; Text aligns columns.
std::string report_ros(const std::vector<std::pair<RingOscillator, TimingReport>>& rows,
                       ReportFormat format);

} // namespace wsm
