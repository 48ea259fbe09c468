// Node/tile/PIP grammar: parse + format round-trips, displacement geometry.

#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "error.h"
#include "fabric.h"
#include "nodename.h"

using namespace wsm;

TEST_CASE("directional names parse into their fields") {
    NodeName n = parse_node("NN1BEG3");
    CHECK(n.cls == NodeClass::Directional);
    CHECK(n.prefix == "NN");
    CHECK(n.length == 1);
    CHECK(n.terminal == Terminal::Beg);
    CHECK(n.variant == "");
    CHECK(n.index == 3);
    CHECK(n.kind == Kind::Single);

    NodeName v = parse_node("NL1BEG_N3");
    CHECK(v.prefix == "NL");
    CHECK(v.variant == "_N");
    CHECK(v.index == 3);
    CHECK(v.kind == Kind::Single);

    NodeName e = parse_node("ER1END_S0");
    CHECK(e.terminal == Terminal::End);
    CHECK(e.variant == "_S");

    CHECK(parse_node("EE2BEG0").kind == Kind::Double);
    CHECK(parse_node("SW2BEG3").kind == Kind::Double);
    CHECK(parse_node("WW4BEG1").kind == Kind::Hquad);
    CHECK(parse_node("NN6BEG0").kind == Kind::Vquad);
    CHECK(parse_node("SS6BEG3").kind == Kind::Vquad);
    CHECK(parse_node("NE6BEG1").kind == Kind::BentQuad);
    CHECK(parse_node("SW6BEG0").kind == Kind::BentQuad);
}

TEST_CASE("fixed-stem names parse into their classes") {
    CHECK(parse_node("LOGIC_OUTS2").cls == NodeClass::LogicOuts);
    CHECK(parse_node("LOGIC_OUTS2").index == 2);
    CHECK(parse_node("IMUX_L23").cls == NodeClass::ImuxL);
    CHECK(parse_node("IMUX7").cls == NodeClass::Imux);
    CHECK(parse_node("IMUX7").kind == Kind::Pinfeed);
    CHECK(parse_node("BYP_ALT5").cls == NodeClass::BypAlt);
    CHECK(parse_node("FAN_ALT0").cls == NodeClass::FanAlt);
    CHECK(parse_node("BYP_BOUNCE3").cls == NodeClass::PinBounceW);
    CHECK(parse_node("FAN_BOUNCE7").cls == NodeClass::PinBounceW);
    CHECK(parse_node("BOUNCE_N2").cls == NodeClass::Bounce);
    CHECK(parse_node("BOUNCE_X0").cls == NodeClass::Bounce);
    CHECK(parse_node("LV12").cls == NodeClass::Lv);
    CHECK(parse_node("LV12").kind == Kind::Vlong);
    CHECK(parse_node("LV_L18").cls == NodeClass::LvL);
    CHECK(parse_node("LV_L18").kind == Kind::Vlong12);
    CHECK(parse_node("LH6").cls == NodeClass::Lh);
    CHECK(parse_node("GCLK11").cls == NodeClass::Gclk);
    CHECK(parse_node("VCC_WIRE").cls == NodeClass::GndVcc);
    CHECK(parse_node("GND_WIRE").kind == Kind::HvccGndOut);
}

TEST_CASE("CLB pin names: outputs, spanning outputs, inputs") {
    NodeName out = parse_node("CLBLM_M_A");
    CHECK(out.cls == NodeClass::ClbPin);
    CHECK(out.variant == "A");
    CHECK(out.index == 0);
    CHECK(out.kind == Kind::Outbound);

    NodeName mux = parse_node("CLBLM_M_AMUX");
    CHECK(mux.variant == "AMUX");
    CHECK(mux.kind == Kind::Outbound);

    NodeName in = parse_node("CLBLM_M_D6");
    CHECK(in.variant == "D");
    CHECK(in.index == 6);
    CHECK(in.kind == Kind::Pinfeed);

    CHECK_THROWS_AS(parse_node("CLBLM_M_A7"), ParseError);
    CHECK_THROWS_AS(parse_node("CLBLM_M_A0"), ParseError);
    CHECK_THROWS_AS(parse_node("CLBLM_M_a"), ParseError);
}

TEST_CASE("parse rejects malformed names") {
    CHECK_THROWS_AS(parse_node(""), ParseError);
    CHECK_THROWS_AS(parse_node("NN3BEG0"), ParseError);  // no length-3 wires
    CHECK_THROWS_AS(parse_node("NN1BEG"), ParseError);   // missing index
    CHECK_THROWS_AS(parse_node("NN1BG0"), ParseError);   // mangled terminal
    CHECK_THROWS_AS(parse_node("XX1BEG0"), ParseError);  // bad direction letter
    CHECK_THROWS_AS(parse_node("NQ1BEG0"), ParseError);  // bad second letter
    CHECK_THROWS_AS(parse_node("NN1BEG_Q0"), ParseError);
    CHECK_THROWS_AS(parse_node("BOUNCE_Q1"), ParseError);
    CHECK_THROWS_AS(parse_node("IMUX_L"), ParseError);
    CHECK_THROWS_AS(parse_node("LOGIC_OUTS"), ParseError);
}

TEST_CASE("format_node rebuilds the text from fields") {
    // Spot names from the bundled walk and the generated universe.
    std::vector<std::string> names = {
        "SW1BEG1",   "NN1BEG1",    "EE1BEG1",    "NW1BEG1",   "IMUX7",
        "SW6BEG0",   "SS6BEG3",    "NN1BEG3",    "NL1BEG_N3", "ER1BEG_S0",
        "WR1BEG1",   "LOGIC_OUTS2", "LOGIC_OUTS20", "IMUX_L23", "CLBLM_M_A",
        "CLBLM_M_D6", "CLBLM_M_AMUX", "BYP_ALT0", "FAN_BOUNCE7", "BOUNCE_N0",
        "BOUNCE_X0", "LV0",        "LV_L18",     "LH12",      "GCLK0",
        "VCC_WIRE",  "GND_WIRE",   "ER1END1",    "NN6END0",
    };
    for (const auto& s : names) {
        CAPTURE(s);
        CHECK(format_node(parse_node(s)) == s);
    }
}

TEST_CASE("every universe slot name round-trips through the grammar") {
    for (const auto& slot : Fabric::tile_universe()) {
        CAPTURE(slot.name);
        NodeName n = parse_node(slot.name);
        CHECK(format_node(n) == slot.name);
        CHECK(n.kind == slot.kind);
    }
}

TEST_CASE("displacement oracle") {
    // Expected (dx, dy) per name, worked out from the movement rules:
    // straight wires move their length along the axis, bent wires split
    // ceil/floor between first and second letter, L/R singles move one tile
    // along the first letter, the rest are fixed.
    std::map<std::string, std::pair<int, int>> want = {
        {"NN1BEG3", {0, 1}},  {"SS2BEG3", {0, -2}}, {"EE2BEG0", {2, 0}},
        {"WW4BEG1", {-4, 0}}, {"NN6BEG0", {0, 6}},  {"SS6BEG1", {0, -6}},
        {"SE2BEG1", {1, -1}}, {"NW2BEG0", {-1, 1}}, {"NE6BEG1", {3, 3}},
        {"SW6BEG0", {-3, -3}}, {"NW6BEG1", {-3, 3}}, {"SE6BEG0", {3, -3}},
        {"ER1BEG_S0", {1, 0}}, {"WL1BEG2", {-1, 0}}, {"NL1BEG_N3", {0, 1}},
        {"SR1BEG1", {0, -1}}, {"LOGIC_OUTS20", {1, 0}}, {"LOGIC_OUTS23", {1, 0}},
        {"BOUNCE_N1", {0, 1}}, {"BOUNCE_S0", {0, -1}}, {"LV0", {0, 20}},
        {"LV_L18", {0, 12}},  {"LH6", {20, 0}},     {"GCLK3", {0, 20}},
    };
    for (const auto& [name, d] : want) {
        CAPTURE(name);
        auto got = displacement(parse_node(name));
        REQUIRE(got.has_value());
        CHECK(*got == d);
    }
}

TEST_CASE("tile-local names have no displacement") {
    for (const char* name : {"IMUX_L0", "IMUX3", "BYP_ALT1", "FAN_ALT0",
                             "BYP_BOUNCE0", "BOUNCE_X0", "LOGIC_OUTS4",
                             "LOGIC_OUTS19", "CLBLM_M_A", "VCC_WIRE"}) {
        CAPTURE(name);
        CHECK_FALSE(displacement(parse_node(name)).has_value());
    }
}

TEST_CASE("end_tile advances BEG names and retreats END names") {
    CHECK(end_tile({2, 2}, parse_node("NN1BEG3")) == TileCoord{2, 3});
    CHECK(end_tile({2, 3}, parse_node("NN1END3")) == TileCoord{2, 2});
    CHECK(end_tile({3, 3}, parse_node("NE6BEG1")) == TileCoord{6, 6});
    CHECK(end_tile({5, 5}, parse_node("SW6BEG0")) == TileCoord{2, 2});
    CHECK(end_tile({0, 0}, parse_node("LV0")) == TileCoord{0, 20});
    CHECK_THROWS_AS(end_tile({0, 0}, parse_node("IMUX_L0")), NotInterTileError);
}

TEST_CASE("tile names parse and format with column parity") {
    auto [t, cls] = parse_tile("INT_R_X2Y2");
    CHECK(t == TileCoord{2, 2});
    CHECK(cls == TileClass::IntR);
    auto [t2, cls2] = parse_tile("INT_L_X1Y15");
    CHECK(t2 == TileCoord{1, 15});
    CHECK(cls2 == TileClass::IntL);

    CHECK(format_tile({2, 2}) == "INT_R_X2Y2");
    CHECK(format_tile({1, 3}) == "INT_L_X1Y3");
    CHECK(tile_class_for({0, 9}) == TileClass::IntR);
    CHECK(tile_class_for({5, 0}) == TileClass::IntL);

    CHECK_THROWS_AS(parse_tile("INT_X1Y1"), ParseError);
    CHECK_THROWS_AS(parse_tile("INT_R_Y1"), ParseError);
    CHECK_THROWS_AS(parse_tile("INT_R_X1"), ParseError);
    CHECK_THROWS_AS(parse_tile("INT_R_X1Y"), ParseError);
    CHECK_THROWS_AS(parse_tile("int_r_X1Y1"), ParseError);
}

TEST_CASE("pip lines parse and format") {
    PipRef p = parse_pip("pip INT_R_X5Y15 NW1BEG0 -> SE2BEG1");
    CHECK(p.tile == TileCoord{5, 15});
    CHECK(p.cls == TileClass::IntR);  // as printed, even off-parity
    CHECK(p.src.raw == "NW1BEG0");
    CHECK(p.dst.raw == "SE2BEG1");
    CHECK(format_pip(p) == "pip INT_R_X5Y15 NW1BEG0 -> SE2BEG1");

    // Extra blanks collapse on reformat.
    PipRef q = parse_pip("pip  INT_L_X1Y3\tWR1BEG1  ->  IMUX_L32");
    CHECK(format_pip(q) == "pip INT_L_X1Y3 WR1BEG1 -> IMUX_L32");

    CHECK_THROWS_AS(parse_pip("PIP INT_R_X1Y1 A -> B"), ParseError);
    CHECK_THROWS_AS(parse_pip("pip INT_R_X1Y1 NN1BEG3 IMUX_L0"), ParseError);
    CHECK_THROWS_AS(parse_pip("pip INT_R_X1Y1 NN1BEG3 => IMUX_L0"), ParseError);
    CHECK_THROWS_AS(parse_pip("pip INT_R_X1Y1 NN1BEG3 -> IMUX_L0 junk"), ParseError);
    CHECK_THROWS_AS(parse_pip("pip INT_R_X1Y1 NN1BEG3 ->"), ParseError);
}
