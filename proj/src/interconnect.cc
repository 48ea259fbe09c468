#include "interconnect.h"

#include "error.h"

namespace wsm {

namespace {

constexpr std::array<KindInfo, kKindCount> kKinds = {{
    // SINGLE and DOUBLE families mix straight and diagonal members, so the
    // family orientation is recorded as bent; per-name geometry comes from
    // the displacement rules in nodename.cc.
    {Kind::Single, "SINGLE", 1, Orientation::Bent, Directionality::Unidirectional, 68},
    {Kind::Double, "DOUBLE", 2, Orientation::Bent, Directionality::Unidirectional, 70},
    {Kind::Hquad, "HQUAD", 4, Orientation::Horizontal, Directionality::Unidirectional, 17},
    {Kind::Vquad, "VQUAD", 6, Orientation::Vertical, Directionality::Unidirectional, 18},
    {Kind::BounceAcross, "BOUNCEACROSS", 1, Orientation::Vertical, Directionality::Unidirectional, 17},
    {Kind::Vlong, "VLONG", 20, Orientation::Vertical, Directionality::Bidirectional, 3},
    {Kind::Vlong12, "VLONG12", 12, Orientation::Vertical, Directionality::Bidirectional, 2},
    {Kind::Hlong, "HLONG", 20, Orientation::Horizontal, Directionality::Bidirectional, 3},
    {Kind::Global, "GLOBAL", 20, Orientation::Vertical, Directionality::Unidirectional, 12},
    {Kind::BentQuad, "BENTQUAD", 6, Orientation::Bent, Directionality::Unidirectional, 34},
    {Kind::Pinfeed, "PINFEED", 0, Orientation::Local, Directionality::Unidirectional, 42},
    {Kind::Outbound, "OUTBOUND", 1, Orientation::Local, Directionality::Unidirectional, 24},
    {Kind::BounceIn, "BOUNCEIN", 0, Orientation::Local, Directionality::Unidirectional, 9},
    {Kind::PinBounce, "PINBOUNCE", 0, Orientation::Local, Directionality::Unidirectional, 16},
    {Kind::HvccGndOut, "HVCCGNDOUT", 0, Orientation::Local, Directionality::Unidirectional, 2},
}};

} // namespace

const std::array<KindInfo, kKindCount>& kind_table() { return kKinds; }

const KindInfo& kind_info(Kind k)
{
    for (const auto& ki : kKinds)
        if (ki.kind == k)
            return ki;
    throw Error("internal", "kind_info: bad kind value");
}

std::string_view kind_name(Kind k) { return kind_info(k).name; }

std::optional<Kind> kind_from_name(std::string_view s)
{
    if (s == "1L")
        return Kind::Single;
    if (s == "2L")
        return Kind::Double;
    if (s == "4L")
        return Kind::Hquad;
    if (s == "LONG")
        return Kind::Vlong;
    for (const auto& ki : kKinds)
        if (ki.name == s)
            return ki.kind;
    return std::nullopt;
}

std::string_view ro_label(Kind k)
{
    switch (k) {
    case Kind::Single: return "1L";
    case Kind::Double: return "2L";
    case Kind::Hquad: return "4L";
    case Kind::Vlong: return "LONG";
    default: return kind_name(k);
    }
}

int total_attachments_per_wsm()
{
    int total = 0;
    for (const auto& ki : kKinds)
        total += ki.count_per_wsm;
    return total;
}

bool is_counted(Kind k)
{
    switch (k) {
    case Kind::Pinfeed:
    case Kind::Outbound:
    case Kind::BounceIn:
    case Kind::PinBounce:
        return false;
    default:
        return true;
    }
}

bool is_ro_capable(Kind k)
{
    switch (k) {
    case Kind::Single:
    case Kind::Double:
    case Kind::Hquad:
    case Kind::Vquad:
    case Kind::Vlong:
    case Kind::BentQuad:
    case Kind::BounceAcross:
        return true;
    default:
        return false;
    }
}

} // namespace wsm
