// Shared test helpers: an independent routing-cost oracle and a random
// baseline generator. The oracle re-derives optimal costs by plain
// label-correcting sweeps over the (tile, node, side) space, with none of the
// router's priority-queue machinery, so the two implementations only agree if
// both are right.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "error.h"
#include "fabric.h"
#include "router.h"
#include "timing.h"

namespace wsm::testsupport {

struct NodeTable {
    std::vector<std::string> names;
    std::map<std::string, int> idx;
    std::vector<Kind> kinds;
    std::vector<bool> must_ride;  // point wire: boarding must be ridden out
    std::vector<bool> is_line;
};

inline const NodeTable& node_table()
{
    static const NodeTable table = [] {
        NodeTable t;
        for (const auto& slot : Fabric::tile_universe()) {
            if (t.idx.count(slot.name))
                continue;
            t.idx[slot.name] = static_cast<int>(t.names.size());
            t.names.push_back(slot.name);
            NodeName n = parse_node(slot.name);
            t.kinds.push_back(n.kind);
            t.must_ride.push_back(n.cls == NodeClass::Directional ||
                                  (n.cls == NodeClass::Bounce && n.variant != "_X"));
            t.is_line.push_back(n.cls == NodeClass::Lv || n.cls == NodeClass::LvL ||
                                n.cls == NodeClass::Lh);
        }
        return t;
    }();
    return table;
}

using Cost = std::pair<double, int>;  // (delay, hops)

inline bool cost_better(Objective obj, const Cost& a, const Cost& b)
{
    if (obj == Objective::MinHops) {
        if (a.second != b.second)
            return a.second < b.second;
        return a.first < b.first;
    }
    if (a.first != b.first)
        return a.first < b.first;
    return a.second < b.second;
}

// Lexicographically-optimal cost from a source pin to every (tile, node, side)
// state, by relaxation sweeps until fixpoint.
inline std::vector<Cost> oracle_costs(const Fabric& f, TileCoord src_tile,
                                      const std::string& src_pin,
                                      const std::optional<std::set<Kind>>& allowed,
                                      const DelayModel* model, Objective obj)
{
    const NodeTable& nt = node_table();
    const int nn = static_cast<int>(nt.names.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Cost> dist(static_cast<size_t>(f.width()) * f.height() * nn * 2,
                           {inf, std::numeric_limits<int>::max()});
    auto key = [&](TileCoord t, int n, int side) {
        return (static_cast<size_t>(t.y * f.width() + t.x) * nn + n) * 2 + side;
    };

    TileCoord start_tile = f.output_tap_tile(src_tile, src_pin);
    int start_idx = nt.idx.at(Fabric::logic_out_for_output_pin(src_pin));
    dist[key(start_tile, start_idx, 0)] = {0.0, 0};

    bool changed = true;
    size_t sweeps = 0;
    while (changed) {
        changed = false;
        if (++sweeps > dist.size() + 4)
            throw std::runtime_error("routing oracle failed to converge");
        for (int y = 0; y < f.height(); y++)
            for (int x = 0; x < f.width(); x++) {
                TileCoord t{x, y};
                for (int n = 0; n < nn; n++)
                    for (int side = 0; side < 2; side++) {
                        Cost c = dist[key(t, n, side)];
                        if (std::isinf(c.first))
                            continue;
                        auto relax = [&](size_t st, Cost nc) {
                            if (cost_better(obj, nc, dist[st])) {
                                dist[st] = nc;
                                changed = true;
                            }
                        };
                        const std::string& name = nt.names[n];
                        if (side == 1) {
                            for (TileCoord t2 : f.ride_targets(t, name))
                                relax(key(t2, n, 0), c);
                            continue;
                        }
                        if (nt.is_line[n])
                            for (TileCoord t2 : f.ride_targets(t, name))
                                relax(key(t2, n, 0), c);
                        for (const std::string& d : f.downhill_nodes(t, name)) {
                            int di = nt.idx.at(d);
                            Kind k = nt.kinds[di];
                            Cost nc = c;
                            if (is_counted(k)) {
                                if (allowed && !allowed->count(k))
                                    continue;
                                if (model) {
                                    auto it = model->hop_delay.find(k);
                                    if (it == model->hop_delay.end())
                                        continue;
                                    nc.first += it->second;
                                } else {
                                    nc.first += 1.0;
                                }
                                nc.second += 1;
                            }
                            relax(key(t, di, nt.must_ride[di] ? 1 : 0), nc);
                        }
                    }
            }
    }
    return dist;
}

// Optimal cost for one query, or nullopt when unreachable.
inline std::optional<Cost> oracle_route_cost(const Fabric& f, const RouteQuery& q,
                                             const DelayModel* model)
{
    auto dist = oracle_costs(f, q.src_tile, q.src_pin, q.allowed_kinds, model, q.objective);
    const NodeTable& nt = node_table();
    const int nn = static_cast<int>(nt.names.size());
    int goal_idx = nt.idx.at(Fabric::imux_for_input_pin(q.dst_pin));
    Cost g = dist[(static_cast<size_t>(q.dst_tile.y * f.width() + q.dst_tile.x) * nn +
                   goal_idx) * 2];
    if (std::isinf(g.first))
        return std::nullopt;
    return g;
}

// Random but valid net: a drunken walk over PIPs and rides from a random
// LOGIC_OUTS2 tap, closed onto whatever pin feed turns up. Returns nullopt
// when the dice strand every attempt.
inline std::optional<Net> random_baseline(const Fabric& f, std::mt19937& rng, int max_hops)
{
    const NodeTable& nt = node_table();
    for (int attempt = 0; attempt < 64; attempt++) {
        TileCoord t{static_cast<int>(rng() % f.width()), static_cast<int>(rng() % f.height())};
        std::vector<std::pair<TileCoord, std::string>> nodes;
        nodes.emplace_back(t, "LOGIC_OUTS2");
        std::string cur = "LOGIC_OUTS2";
        TileCoord ct = t;
        int hops = 1 + static_cast<int>(rng() % max_hops);
        for (int h = 0; h < hops; h++) {
            std::vector<std::string> cands;
            for (const auto& d : f.downhill_nodes(ct, cur)) {
                int di = nt.idx.at(d);
                if (!is_counted(nt.kinds[di]))
                    continue;
                if (nt.must_ride[di] && f.ride_targets(ct, d).empty())
                    continue;  // every tail would leave the fabric
                cands.push_back(d);
            }
            if (cands.empty())
                break;  // nothing boardable here; close out early
            const std::string w = cands[rng() % cands.size()];
            nodes.emplace_back(ct, w);
            int wi = nt.idx.at(w);
            auto targets = f.ride_targets(ct, w);
            if (nt.must_ride[wi]) {
                ct = targets[rng() % targets.size()];
                nodes.emplace_back(ct, w);
            } else if (nt.is_line[wi] && !targets.empty() && (rng() & 1)) {
                ct = targets[rng() % targets.size()];
                nodes.emplace_back(ct, w);
            }
            cur = w;
        }
        std::vector<std::string> feeds;
        for (const auto& d : f.downhill_nodes(ct, cur))
            if (d.rfind("IMUX_L", 0) == 0)
                feeds.push_back(d);
        if (feeds.empty())
            continue;
        const std::string im = feeds[rng() % feeds.size()];
        nodes.emplace_back(ct, im);
        nodes.emplace_back(ct, Fabric::input_pin_for_imux(im));
        try {
            return route_fixed(f, "rand", nodes);
        } catch (const Error&) {
            continue;
        }
    }
    return std::nullopt;
}

} // namespace wsm::testsupport
