// interconnect.h - the fifteen interconnect families and their per-WSM census
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace wsm {

enum class Kind : uint8_t {
    Single,
    Double,
    Hquad,
    Vquad,
    BounceAcross,
    Vlong,
    Vlong12,
    Hlong,
    Global,
    BentQuad,
    Pinfeed,
    Outbound,
    BounceIn,
    PinBounce,
    HvccGndOut,
};

constexpr int kKindCount = 15;

enum class Orientation : uint8_t { Horizontal, Vertical, Bent, Local };
enum class Directionality : uint8_t { Unidirectional, Bidirectional };

struct KindInfo {
    Kind kind;
    std::string_view name;      // canonical spelling used in files and reports
    int span_clbs;              // maximum CLB tiles traversed end to end
    Orientation orientation;
    Directionality directionality;
    int count_per_wsm;          // switch-matrix attachments of this family per tile
};

const std::array<KindInfo, kKindCount>& kind_table();
const KindInfo& kind_info(Kind k);
std::string_view kind_name(Kind k);

// Accepts the canonical family name or a ring-oscillator label (1L, 2L, 4L, LONG).
std::optional<Kind> kind_from_name(std::string_view s);

// Label used in RO reports: 1L/2L/4L/LONG for the length-named families,
// the canonical name otherwise.
std::string_view ro_label(Kind k);

// Sum of all per-WSM attachment counts (the per-tile total).
int total_attachments_per_wsm();

// Families that ride on hop billing: a boarding of any of these counts toward
// a net's interconnect total. The rest (pin feeds, CLB outputs, bounce-in and
// pin-bounce glue) are free plumbing around logic cells.
bool is_counted(Kind k);

// Families usable as the body of a ring oscillator (span at least one WSM and
// can be chained back into a closed loop).
bool is_ro_capable(Kind k);

} // namespace wsm
