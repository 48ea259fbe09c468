#include "router.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <queue>

#include "error.h"

namespace wsm {

namespace {

// ---------------------------------------------------------------------------
// search graph: states are (tile, node, side). Side B means the wire was just
// boarded at this tile and must be ridden to a far tail before any PIP can
// read it; side R means the signal is readable here.
// ---------------------------------------------------------------------------

struct NodeFacts {
    std::vector<std::string> names; // deduplicated, universe order
    std::map<std::string, int> index;
    std::vector<Kind> kind;
    std::vector<bool> ride_only; // point wire: boarded side must ride
    std::vector<bool> line;      // long line: readable everywhere on the block
};

const NodeFacts& node_facts()
{
    static const NodeFacts facts = [] {
        NodeFacts f;
        for (const auto& slot : Fabric::tile_universe()) {
            if (f.index.count(slot.name))
                continue;
            f.index[slot.name] = static_cast<int>(f.names.size());
            f.names.push_back(slot.name);
            NodeName n = parse_node(slot.name);
            f.kind.push_back(n.kind);
            bool point = n.cls == NodeClass::Directional ||
                         (n.cls == NodeClass::Bounce && n.variant != "_X");
            f.ride_only.push_back(point);
            f.line.push_back(n.cls == NodeClass::Lv || n.cls == NodeClass::LvL ||
                             n.cls == NodeClass::Lh);
        }
        return f;
    }();
    return facts;
}

struct EdgeCost {
    double delay = 0.0;
    int hops = 0;
};

// Weight of boarding a node, under the active model and kind restriction.
// nullopt means the edge is unusable.
std::optional<EdgeCost> boarding_cost(int name_idx, const DelayModel* model,
                                      const std::optional<std::set<Kind>>& allowed)
{
    const NodeFacts& nf = node_facts();
    Kind k = nf.kind[name_idx];
    if (!is_counted(k))
        return EdgeCost{0.0, 0};
    if (allowed && !allowed->count(k))
        return std::nullopt;
    if (!model)
        return EdgeCost{1.0, 1};
    auto it = model->hop_delay.find(k);
    if (it == model->hop_delay.end())
        return std::nullopt; // family not characterized; don't route over it
    return EdgeCost{it->second, 1};
}

std::string describe_endpoint(TileCoord t, const std::string& pin)
{
    return pin + " at " + format_tile(t);
}

} // namespace

RouteCost net_cost(const Fabric&, const Net& net, const DelayModel* model)
{
    RouteCost c;
    const NodeFacts& nf = node_facts();
    for (size_t i = 0; i + 1 < net.nodes.size(); i++) {
        const auto& [t1, n1] = net.nodes[i];
        const auto& [t2, n2] = net.nodes[i + 1];
        if (t1 != t2 || n1 == n2)
            continue; // wire ride
        auto it = nf.index.find(n2);
        if (it == nf.index.end())
            continue; // CLB pin step
        Kind k = nf.kind[it->second];
        if (!is_counted(k))
            continue;
        c.hops++;
        if (model) {
            auto d = model->hop_delay.find(k);
            c.delay += d == model->hop_delay.end() ? 0.0 : d->second;
        } else {
            c.delay += 1.0;
        }
    }
    return c;
}

Net route(const Fabric& f, const RouteQuery& q, const DelayModel* model)
{
    if (q.allowed_kinds && q.allowed_kinds->empty())
        throw ConfigError("allowed_kinds must be non-empty when present");

    if (q.src_tile == q.dst_tile && q.src_pin == q.dst_pin) {
        Net net;
        net.name = q.name;
        net.source_pin = q.src_pin;
        net.dest_pin = q.dst_pin;
        return net; // identity route, zero hops
    }

    const NodeFacts& nf = node_facts();
    const int nname = static_cast<int>(nf.names.size());
    const int W = f.width();

    std::string start_node = Fabric::logic_out_for_output_pin(q.src_pin);
    TileCoord start_tile = f.output_tap_tile(q.src_tile, q.src_pin);
    std::string goal_node = Fabric::imux_for_input_pin(q.dst_pin);
    if (!f.in_bounds(q.dst_tile))
        throw BoundsError("tile " + format_tile(q.dst_tile) + " outside " +
                          std::to_string(f.width()) + "x" + std::to_string(f.height()) +
                          " fabric");

    auto state_of = [&](TileCoord t, int name_idx, int side) {
        return ((t.y * W + t.x) * nname + name_idx) * 2 + side;
    };

    struct Settled {
        int parent = -1;
        TileCoord tile;
        int name_idx = -1;
    };
    std::vector<Settled> settled(static_cast<size_t>(f.width()) * f.height() * nname * 2);
    std::vector<bool> done(settled.size(), false);

    struct QE {
        double p;
        double s;
        uint64_t order;
        int state;
        int parent;
        TileCoord tile;
        int name_idx;
        bool operator>(const QE& o) const
        {
            if (p != o.p)
                return p > o.p;
            if (s != o.s)
                return s > o.s;
            return order > o.order;
        }
    };
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    uint64_t order = 0;

    auto keys = [&](double delay, int hops) -> std::pair<double, double> {
        if (q.objective == Objective::MinHops)
            return {static_cast<double>(hops), delay};
        return {delay, static_cast<double>(hops)};
    };
    // running (delay, hops) per state, stored alongside the queue entries
    std::vector<std::pair<double, int>> best(settled.size(),
                                             {std::numeric_limits<double>::infinity(), 0});

    int start_idx = nf.index.at(start_node);
    int start_state = state_of(start_tile, start_idx, 0);
    best[start_state] = {0.0, 0};
    auto [p0, s0] = keys(0.0, 0);
    pq.push({p0, s0, order++, start_state, -1, start_tile, start_idx});

    int goal_idx = nf.index.at(goal_node);
    int goal_state = state_of(q.dst_tile, goal_idx, 0);

    while (!pq.empty()) {
        QE e = pq.top();
        pq.pop();
        if (done[e.state])
            continue;
        done[e.state] = true;
        settled[e.state] = {e.parent, e.tile, e.name_idx};
        if (e.state == goal_state)
            break;

        auto [delay, hops] = best[e.state];
        const std::string& name = nf.names[e.name_idx];
        int side = e.state & 1;

        auto push = [&](TileCoord t, int name_idx, int next_side, double d, int h) {
            int st = state_of(t, name_idx, next_side);
            if (done[st])
                return;
            auto [kp, ks] = keys(d, h);
            auto [bp, bs] = keys(best[st].first, best[st].second);
            if (std::isinf(best[st].first) || kp < bp || (kp == bp && ks < bs)) {
                best[st] = {d, h};
                pq.push({kp, ks, order++, st, e.state, t, name_idx});
            }
        };

        if (side == 1) { // boarded a point wire: ride to a far tail
            for (TileCoord t2 : f.ride_targets(e.tile, name))
                push(t2, e.name_idx, 0, delay, hops);
            continue;
        }
        if (nf.line[e.name_idx])
            for (TileCoord t2 : f.ride_targets(e.tile, name))
                push(t2, e.name_idx, 0, delay, hops);
        for (const std::string& dst : f.downhill_nodes(e.tile, name)) {
            int di = nf.index.at(dst);
            auto cost = boarding_cost(di, model, q.allowed_kinds);
            if (!cost)
                continue;
            push(e.tile, di, nf.ride_only[di] ? 1 : 0, delay + cost->delay, hops + cost->hops);
        }
    }

    if (!done[goal_state]) {
        std::string msg = "no route from " + describe_endpoint(q.src_tile, q.src_pin) + " to " +
                          describe_endpoint(q.dst_tile, q.dst_pin);
        if (q.allowed_kinds) {
            msg += " under allowed kinds {";
            bool first = true;
            for (Kind k : *q.allowed_kinds) {
                if (!first)
                    msg += ", ";
                msg += kind_name(k);
                first = false;
            }
            msg += "}";
        }
        throw UnroutableError(msg);
    }

    // walk parents back to the start, then emit nodes in forward order
    std::vector<std::pair<TileCoord, std::string>> rev;
    for (int st = goal_state; st != -1; st = settled[st].parent)
        rev.emplace_back(settled[st].tile, nf.names[settled[st].name_idx]);
    std::reverse(rev.begin(), rev.end());
    // a board-then-ride pair settles two states with the same name; both
    // entries stay (one per wire tail), matching the duplicate-name format

    Net net;
    net.name = q.name;
    net.source_pin = q.src_pin;
    net.dest_pin = q.dst_pin;
    net.nodes = std::move(rev);
    net.nodes.emplace_back(q.dst_tile, q.dst_pin);
    return net;
}

Net route_fixed(const Fabric& f, const std::string& name,
                const std::vector<std::pair<TileCoord, std::string>>& nodes)
{
    auto pair_text = [&](size_t i) {
        return "'" + nodes[i].second + "' at " + format_tile(nodes[i].first) + " -> '" +
               nodes[i + 1].second + "' at " + format_tile(nodes[i + 1].first);
    };
    auto is_pin = [](const std::string& s) {
        try {
            return parse_node(s).cls == NodeClass::ClbPin;
        } catch (const ParseError&) {
            return false;
        }
    };

    for (size_t i = 0; i < nodes.size(); i++) {
        const auto& [t, n] = nodes[i];
        if (is_pin(n)) {
            if (i + 1 != nodes.size() || i == 0)
                throw FixedRouteError("CLB pin '" + n + "' can only end the net");
            continue;
        }
        if (!f.has_node(t, n))
            throw FixedRouteError("node '" + n + "' at " + format_tile(t) +
                                  " absent from the fabric");
    }

    for (size_t i = 0; i + 1 < nodes.size(); i++) {
        const auto& [t1, n1] = nodes[i];
        const auto& [t2, n2] = nodes[i + 1];
        try {
            if (n1 == n2) {
                auto targets = f.ride_targets(t1, n1);
                if (t1 == t2 || std::find(targets.begin(), targets.end(), t2) == targets.end())
                    throw FixedRouteError("no wire continuation " + pair_text(i));
            } else if (is_pin(n2)) {
                if (t1 != t2 || Fabric::imux_for_input_pin(n2) != n1)
                    throw FixedRouteError("pin '" + n2 + "' is not fed by " + pair_text(i));
            } else {
                if (t1 != t2 || !f.downhill_nodes(t1, n1).count(n2))
                    throw FixedRouteError("no PIP " + pair_text(i));
            }
        } catch (const FixedRouteError&) {
            throw;
        } catch (const Error& e) {
            throw FixedRouteError("invalid step " + pair_text(i) + ": " + e.what());
        }
    }

    Net net;
    net.name = name;
    net.nodes = nodes;
    if (!nodes.empty()) {
        try {
            net.source_pin = Fabric::output_pin_for_logic_out(nodes.front().second);
        } catch (const Error&) {
        }
        if (is_pin(nodes.back().second))
            net.dest_pin = nodes.back().second;
    }
    return net;
}

Net optimize_route(const Fabric& f, const Net& baseline, Objective objective,
                   const DelayModel* model)
{
    try {
        if (baseline.nodes.empty())
            return baseline;

        RouteQuery q;
        q.objective = objective;
        q.name = baseline.name;

        q.src_pin = baseline.source_pin.empty()
                        ? Fabric::output_pin_for_logic_out(baseline.nodes.front().second)
                        : baseline.source_pin;
        q.src_tile = baseline.nodes.front().first;
        if (q.src_pin.size() > 3 && q.src_pin.substr(q.src_pin.size() - 3) == "MUX")
            q.src_tile.x -= 1; // spanning outputs tap one column east of the cell

        const auto& [last_tile, last_name] = baseline.nodes.back();
        q.dst_tile = last_tile;
        NodeName last = parse_node(last_name);
        if (last.cls == NodeClass::ClbPin)
            q.dst_pin = last_name;
        else if (last.cls == NodeClass::ImuxL)
            q.dst_pin = Fabric::input_pin_for_imux(last_name);
        else
            return baseline; // endpoint not pin-mappable; nothing to re-route

        Net routed = route(f, q, model);
        RouteCost base = net_cost(f, baseline, model);
        RouteCost ours = net_cost(f, routed, model);

        bool ok = true;
        if (objective != Objective::MinHops)
            ok = ok && ours.delay <= base.delay;
        if (objective != Objective::MinDelay)
            ok = ok && ours.hops <= base.hops;
        return ok ? routed : baseline;
    } catch (...) {
        return baseline;
    }
}

// ---------------------------------------------------------------------------
// ring oscillators
// ---------------------------------------------------------------------------

namespace {

struct Move {
    std::string wire;
    TileCoord to; // alight tile; equals the board tile for tile-local wires
};

struct LoopPlan {
    std::vector<Move> moves;
    size_t cell_b_after = 0;  // buffer sits after this many moves
    std::string cell_b_out;   // buffer output pin
    TileCoord net_b_start;    // tile where the buffer's tap is readable
    TileCoord cell_b_tile;
};

void unroutable_length(Kind kind, int n, const char* why)
{
    throw UnroutableError("no " + std::string(kind_name(kind)) + " loop with " +
                          std::to_string(n) + " boardings: " + why);
}

LoopPlan plan_loop(Kind kind, TileCoord a, int n)
{
    LoopPlan plan;
    plan.cell_b_out = "CLBLM_M_D";
    TileCoord cur = a;
    auto add = [&](const std::string& wire, int dx, int dy) {
        cur = {cur.x + dx, cur.y + dy};
        plan.moves.push_back({wire, cur});
    };
    auto pairs = [&](const char* fwd, int fx, int fy, const char* bwd, int m) {
        for (int i = 0; i < m; i++) {
            add(fwd, fx, fy);
            add(bwd, -fx, -fy);
        }
    };

    if (n < 2)
        unroutable_length(kind, n, "a loop needs at least one boarding per net");

    switch (kind) {
    case Kind::Single:
        if (n % 2 == 0) {
            pairs("ER1BEG1", 1, 0, "WL1BEG1", n / 2);
            plan.cell_b_after = static_cast<size_t>(n) / 2;
        } else {
            // odd totals use the buffer's spanning output: its tap lands one
            // column east, and the return net walks the extra column back
            int k = (n + 1) / 2;
            if (k % 2)
                k--;
            pairs("ER1BEG1", 1, 0, "WL1BEG1", k / 2);
            plan.cell_b_after = static_cast<size_t>(k);
            plan.cell_b_out = "CLBLM_M_AMUX";
            cur = {cur.x + 1, cur.y}; // spanning tap
            for (int i = 0; i < n - k; i++) {
                if (i % 2 == 0)
                    add("WL1BEG1", -1, 0);
                else
                    add("ER1BEG1", 1, 0);
            }
        }
        break;
    case Kind::Double:
        if (n % 2 == 0) {
            pairs("EE2BEG1", 2, 0, "WW2BEG1", n / 2);
        } else {
            add("NE2BEG1", 1, 1);
            add("SE2BEG1", 1, -1);
            add("WW2BEG1", -2, 0);
            pairs("EE2BEG1", 2, 0, "WW2BEG1", (n - 3) / 2);
        }
        plan.cell_b_after = static_cast<size_t>((n + 1) / 2);
        break;
    case Kind::Hquad:
        if (n % 2 == 0) {
            pairs("EE4BEG0", 4, 0, "WW4BEG1", n / 2);
        } else {
            pairs("EE4BEG0", 4, 0, "WW4BEG1", (n - 3) / 2);
            add("EE4BEG0", 2, 0); // mid-span tap
            add("WW4BEG1", -4, 0);
            add("EE4BEG0", 2, 0);
        }
        plan.cell_b_after = static_cast<size_t>((n + 1) / 2);
        break;
    case Kind::Vquad:
        if (n % 2 == 0) {
            pairs("NN6BEG0", 0, 6, "SS6BEG1", n / 2);
        } else {
            pairs("NN6BEG0", 0, 6, "SS6BEG1", (n - 3) / 2);
            add("NN6BEG0", 0, 3); // mid-span tap
            add("SS6BEG1", 0, -6);
            add("NN6BEG0", 0, 3);
        }
        plan.cell_b_after = static_cast<size_t>((n + 1) / 2);
        break;
    case Kind::BentQuad:
        if (n % 2 == 0) {
            pairs("NE6BEG1", 3, 3, "SW6BEG1", n / 2);
        } else if (n < 5) {
            unroutable_length(kind, n, "odd bent loops need at least 5 boardings");
        } else {
            pairs("NE6BEG1", 3, 3, "SW6BEG1", (n - 5) / 2);
            add("SW6BEG0", 0, -2); // mid-span tap
            add("NE6BEG1", 3, 3);
            add("SW6BEG0", 0, -2);
            add("NW6BEG1", -3, 3);
            add("SW6BEG0", 0, -2);
        }
        plan.cell_b_after = static_cast<size_t>((n + 1) / 2);
        break;
    case Kind::BounceAcross:
        pairs("BOUNCE_N1", 0, 1, "BOUNCE_S1", n / 2);
        if (n % 2)
            add("BOUNCE_X0", 0, 0); // tile-local member
        plan.cell_b_after = static_cast<size_t>((n + 1) / 2);
        break;
    case Kind::Vlong:
        if (n % 2 == 0) {
            pairs("LV0", 0, 1, "LV6", n / 2);
        } else {
            pairs("LV0", 0, 1, "LV6", (n - 3) / 2);
            add("LV0", 0, 1);
            add("LV6", 0, 1);
            add("LV0", 0, -2); // long lines alight anywhere on the block
        }
        plan.cell_b_after = static_cast<size_t>((n + 1) / 2);
        break;
    default:
        unroutable_length(kind, n, "no loop pattern for this family");
    }

    if (cur != a)
        throw Error("internal", "loop plan failed to close");
    assert(plan.cell_b_after >= 1 && plan.cell_b_after < plan.moves.size());

    plan.cell_b_tile = plan.moves[plan.cell_b_after - 1].to;
    plan.net_b_start = plan.cell_b_tile;
    if (plan.cell_b_out == "CLBLM_M_AMUX")
        plan.net_b_start = {plan.cell_b_tile.x + 1, plan.cell_b_tile.y};
    return plan;
}

std::vector<std::pair<TileCoord, std::string>> walk_segment(
    const std::string& entry_node, TileCoord entry_tile,
    const std::vector<Move>& moves, size_t from, size_t to, const std::string& exit_imux,
    const std::string& exit_pin)
{
    std::vector<std::pair<TileCoord, std::string>> nodes;
    nodes.emplace_back(entry_tile, entry_node);
    TileCoord cur = entry_tile;
    for (size_t i = from; i < to; i++) {
        nodes.emplace_back(cur, moves[i].wire);
        if (moves[i].to != cur)
            nodes.emplace_back(moves[i].to, moves[i].wire);
        cur = moves[i].to;
    }
    nodes.emplace_back(cur, exit_imux);
    nodes.emplace_back(cur, exit_pin);
    return nodes;
}

} // namespace

RingOscillator build_ro(const Fabric& f, Kind kind, TileCoord anchor, int target_count)
{
    if (!is_ro_capable(kind))
        throw KindUnusableError("kind " + std::string(kind_name(kind)) +
                                " does not span a switch matrix loop");
    if (!f.in_bounds(anchor))
        throw PlacementError("anchor " + format_tile(anchor) + " outside " +
                             std::to_string(f.width()) + "x" + std::to_string(f.height()) +
                             " fabric");
    if (target_count == 0)
        target_count = 2;
    if (target_count < 0)
        throw ConfigError("target interconnect count must be positive");

    LoopPlan plan = plan_loop(kind, anchor, target_count);
    for (const auto& m : plan.moves)
        if (!f.in_bounds(m.to))
            throw UnroutableError(std::string(kind_name(kind)) + " loop with " +
                                  std::to_string(target_count) + " boardings leaves the " +
                                  std::to_string(f.width()) + "x" + std::to_string(f.height()) +
                                  " fabric at " + format_tile(m.to));
    if (!f.in_bounds(plan.net_b_start))
        throw UnroutableError("buffer tap at " + format_tile(plan.net_b_start) +
                              " leaves the fabric");

    RingOscillator ro;
    ro.kind = kind;
    ro.cells[0] = {anchor, "CLBLM_M_C", "CLBLM_M_A2", true};
    ro.cells[1] = {plan.cell_b_tile, plan.cell_b_out, "CLBLM_M_A1", false};

    std::string label(ro_label(kind));
    std::string entry_a = Fabric::logic_out_for_output_pin("CLBLM_M_C");
    std::string entry_b = Fabric::logic_out_for_output_pin(plan.cell_b_out);

    auto nodes_a = walk_segment(entry_a, anchor, plan.moves, 0, plan.cell_b_after, "IMUX_L0",
                                "CLBLM_M_A1");
    auto nodes_b = walk_segment(entry_b, plan.net_b_start, plan.moves, plan.cell_b_after,
                                plan.moves.size(), "IMUX_L1", "CLBLM_M_A2");

    try {
        ro.net_a = route_fixed(f, "ro_" + label + "_a", nodes_a);
        ro.net_b = route_fixed(f, "ro_" + label + "_b", nodes_b);
    } catch (const FixedRouteError& e) {
        throw UnroutableError("this fabric cannot host the " + label +
                              " loop: " + std::string(e.what()));
    }
    ro.net_a.source_pin = "CLBLM_M_C";
    ro.net_b.source_pin = plan.cell_b_out;

    ro.walk = ro.net_a.nodes;
    ro.walk.insert(ro.walk.end(), ro.net_b.nodes.begin(), ro.net_b.nodes.end());

    const NodeFacts& nf = node_facts();
    for (size_t i = 0; i + 1 < ro.walk.size(); i++) {
        const auto& [t1, n1] = ro.walk[i];
        const auto& [t2, n2] = ro.walk[i + 1];
        if (t1 != t2 || n1 == n2 || !nf.index.count(n2) || !nf.index.count(n1))
            continue;
        PipRef pip;
        pip.tile = t1;
        pip.cls = tile_class_for(t1);
        pip.src = parse_node(n1);
        pip.dst = parse_node(n2);
        ro.loop.push_back(std::move(pip));
    }
    ro.interconnect_count = static_cast<int>(counted_hops(ro).size());
    assert(ro.interconnect_count == target_count);
    return ro;
}

std::vector<std::pair<std::string, Kind>> counted_hops(const RingOscillator& ro)
{
    std::vector<std::pair<std::string, Kind>> hops;
    for (const auto& pip : ro.loop)
        if (is_counted(pip.dst.kind))
            hops.emplace_back(pip.dst.raw, pip.dst.kind);
    return hops;
}

TimingReport estimate(const RingOscillator& ro, const DelayModel& m)
{
    return estimate_hops(counted_hops(ro), m);
}

} // namespace wsm
