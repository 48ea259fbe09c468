// Interconnect family table: census counts, name lookup, billing flags.

#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "interconnect.h"

using namespace wsm;

TEST_CASE("census counts per family match the reference totals") {
    std::map<std::string, int> want = {
        {"SINGLE", 68},     {"DOUBLE", 70},   {"HQUAD", 17},
        {"VQUAD", 18},      {"BOUNCEACROSS", 17}, {"VLONG", 3},
        {"VLONG12", 2},     {"HLONG", 3},     {"GLOBAL", 12},
        {"BENTQUAD", 34},   {"PINFEED", 42},  {"OUTBOUND", 24},
        {"BOUNCEIN", 9},    {"PINBOUNCE", 16}, {"HVCCGNDOUT", 2},
    };
    REQUIRE(kind_table().size() == want.size());
    for (const auto& info : kind_table()) {
        auto it = want.find(std::string(info.name));
        REQUIRE(it != want.end());
        CHECK(info.count_per_wsm == it->second);
    }
}

TEST_CASE("per-tile attachment total is 337") {
    CHECK(total_attachments_per_wsm() == 337);
    int sum = 0;
    for (const auto& info : kind_table()) sum += info.count_per_wsm;
    CHECK(sum == 337);
}

TEST_CASE("kind_info round-trips through the enum") {
    for (const auto& info : kind_table()) {
        CHECK(kind_info(info.kind).name == info.name);
        CHECK(kind_name(info.kind) == info.name);
    }
}

TEST_CASE("kind_from_name accepts canonical names and RO labels") {
    CHECK(kind_from_name("SINGLE") == Kind::Single);
    CHECK(kind_from_name("1L") == Kind::Single);
    CHECK(kind_from_name("2L") == Kind::Double);
    CHECK(kind_from_name("4L") == Kind::Hquad);
    CHECK(kind_from_name("LONG") == Kind::Vlong);
    CHECK(kind_from_name("VQUAD") == Kind::Vquad);
    CHECK(kind_from_name("BENTQUAD") == Kind::BentQuad);
    CHECK(kind_from_name("BOUNCEACROSS") == Kind::BounceAcross);
    CHECK(kind_from_name("PINFEED") == Kind::Pinfeed);
    CHECK_FALSE(kind_from_name("3L").has_value());
    CHECK_FALSE(kind_from_name("").has_value());
    CHECK_FALSE(kind_from_name("single").has_value());
}

TEST_CASE("ro_label uses length names for the length families") {
    CHECK(ro_label(Kind::Single) == "1L");
    CHECK(ro_label(Kind::Double) == "2L");
    CHECK(ro_label(Kind::Hquad) == "4L");
    CHECK(ro_label(Kind::Vlong) == "LONG");
    CHECK(ro_label(Kind::Vquad) == "VQUAD");
    CHECK(ro_label(Kind::BentQuad) == "BENTQUAD");
    CHECK(ro_label(Kind::BounceAcross) == "BOUNCEACROSS");
}

TEST_CASE("ro labels resolve back to their kind") {
    for (const auto& info : kind_table()) {
        auto back = kind_from_name(ro_label(info.kind));
        REQUIRE(back.has_value());
        CHECK(*back == info.kind);
    }
}

TEST_CASE("billing: glue families are free, wire families are counted") {
    std::set<Kind> free = {Kind::Pinfeed, Kind::Outbound, Kind::BounceIn,
                           Kind::PinBounce};
    for (const auto& info : kind_table()) {
        CHECK(is_counted(info.kind) == (free.count(info.kind) == 0));
    }
}

TEST_CASE("RO capability: exactly the seven loopable wire families") {
    std::set<Kind> capable = {Kind::Single,    Kind::Double,       Kind::Hquad,
                              Kind::Vquad,     Kind::BounceAcross, Kind::Vlong,
                              Kind::BentQuad};
    for (const auto& info : kind_table()) {
        CHECK(is_ro_capable(info.kind) == (capable.count(info.kind) == 1));
    }
}

TEST_CASE("span and orientation sanity") {
    CHECK(kind_info(Kind::Single).span_clbs == 1);
    CHECK(kind_info(Kind::Double).span_clbs == 2);
    CHECK(kind_info(Kind::Hquad).span_clbs == 4);
    CHECK(kind_info(Kind::Vquad).span_clbs == 6);
    CHECK(kind_info(Kind::Vlong).span_clbs == 20);
    CHECK(kind_info(Kind::Vlong12).span_clbs == 12);
    CHECK(kind_info(Kind::Hlong).span_clbs == 20);
    CHECK(kind_info(Kind::Vlong).orientation == Orientation::Vertical);
    CHECK(kind_info(Kind::Hlong).orientation == Orientation::Horizontal);
    CHECK(kind_info(Kind::BentQuad).orientation == Orientation::Bent);
    CHECK(kind_info(Kind::Pinfeed).orientation == Orientation::Local);
    CHECK(kind_info(Kind::Vlong).directionality == Directionality::Bidirectional);
    CHECK(kind_info(Kind::Single).directionality == Directionality::Unidirectional);
}
