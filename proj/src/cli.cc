#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "emit.h"
#include "error.h"
#include "extractor.h"
#include "fabric.h"
#include "router.h"
#include "timing.h"

namespace wsm {

namespace {

// fabric source shared by the subcommands: an explicit file wins over the
// generated grid; the seed comes from --seed, then WSM_FABRIC_SEED, then 1
struct FabricOpts {
    std::string path;
    int width = 10;
    int height = 10;
    uint64_t seed = Fabric::kDefaultSeed;
    CLI::Option* seed_opt = nullptr;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--fabric", path, "fabric description file (generated when absent)");
        cmd->add_option("--width", width, "generated fabric width")->check(CLI::PositiveNumber);
        cmd->add_option("--height", height, "generated fabric height")
            ->check(CLI::PositiveNumber);
        seed_opt = cmd->add_option("--seed", seed, "generated fabric seed");
    }

    uint64_t resolve_seed() const
    {
        if (seed_opt->count())
            return seed;
        if (const char* env = std::getenv("WSM_FABRIC_SEED")) {
            try {
                size_t used = 0;
                uint64_t v = std::stoull(env, &used);
                if (used != std::string(env).size())
                    throw std::invalid_argument(env);
                return v;
            } catch (const std::exception&) {
                throw ConfigError("WSM_FABRIC_SEED must be an unsigned integer, got '" +
                                  std::string(env) + "'");
            }
        }
        return Fabric::kDefaultSeed;
    }

    Fabric make() const
    {
        if (!path.empty())
            return Fabric::load(path);
        return Fabric::build(width, height, resolve_seed());
    }
};

void write_output(const std::string& path, const std::string& data)
{
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f << data;
    if (!f)
        throw IoError("failed writing '" + path + "'");
}

TileCoord parse_tile_arg(const std::string& s)
{
    return parse_tile(s).first;
}

std::optional<std::set<Kind>> parse_kinds_arg(const std::string& csv)
{
    if (csv.empty())
        return std::nullopt;
    std::set<Kind> kinds;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty())
            throw ConfigError("empty kind name in '" + csv + "'");
        auto k = kind_from_name(tok);
        if (!k)
            throw ConfigError("unknown interconnect kind '" + tok + "'");
        kinds.insert(*k);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return kinds;
}

ReportFormat parse_report_format(const std::string& s)
{
    return s == "csv" ? ReportFormat::Csv : ReportFormat::Text;
}

// per-kind anchor progression for a pair (or more) of oscillators: each next
// loop of the same family starts one column east
TileCoord nth_anchor(TileCoord base, int i)
{
    return {base.x + i, base.y};
}

void add_build(CLI::App& app)
{
    auto cmd = app.add_subcommand("build", "generate a fabric and write its description");
    auto fo = std::make_shared<FabricOpts>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--width", fo->width, "fabric width")->check(CLI::PositiveNumber);
    cmd->add_option("--height", fo->height, "fabric height")->check(CLI::PositiveNumber);
    fo->seed_opt = cmd->add_option("--seed", fo->seed, "generator seed");
    cmd->add_option("-o,--output", *out, "output file (default stdout)");
    cmd->callback([fo, out] {
        Fabric f = Fabric::build(fo->width, fo->height, fo->resolve_seed());
        write_output(*out, f.to_text());
    });
}

void add_route(CLI::App& app)
{
    auto cmd = app.add_subcommand("route", "route a net between two logic cells");
    auto fo = std::make_shared<FabricOpts>();
    fo->attach(cmd);
    struct Opts {
        std::string from, to, src_pin = "CLBLM_M_A", dst_pin = "CLBLM_M_A1";
        std::string kinds, objective = "hops", calib, name = "net0", out;
        double cell_delay = 0.0;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--from", o->from, "source tile, e.g. INT_R_X0Y0")->required();
    cmd->add_option("--to", o->to, "destination tile")->required();
    cmd->add_option("--source-pin", o->src_pin, "source CLB output pin");
    cmd->add_option("--dest-pin", o->dst_pin, "destination CLB input pin");
    cmd->add_option("--kinds", o->kinds, "comma-separated families the route may board");
    cmd->add_option("--objective", o->objective, "hops, delay, or lex")
        ->check(CLI::IsMember({"hops", "delay", "lex"}));
    cmd->add_option("--calib", o->calib, "calibration CSV for delay objectives");
    cmd->add_option("--cell-delay", o->cell_delay, "logic cell delay in ps");
    cmd->add_option("--name", o->name, "net name");
    cmd->add_option("-o,--output", o->out, "output file (default stdout)");
    cmd->callback([fo, o] {
        Fabric f = fo->make();
        RouteQuery q;
        q.src_tile = parse_tile_arg(o->from);
        q.dst_tile = parse_tile_arg(o->to);
        q.src_pin = o->src_pin;
        q.dst_pin = o->dst_pin;
        q.allowed_kinds = parse_kinds_arg(o->kinds);
        q.name = o->name;
        std::optional<DelayModel> model;
        if (!o->calib.empty())
            model = calibrate(load_calibration_csv(o->calib), o->cell_delay);
        if (o->objective == "hops")
            q.objective = Objective::MinHops;
        else {
            q.objective = o->objective == "delay" ? Objective::MinDelay
                                                  : Objective::Lexicographic;
            if (!model)
                throw ConfigError("objective '" + o->objective + "' needs --calib");
        }
        Net net = route(f, q, model ? &*model : nullptr);
        write_output(o->out, net_to_text(net));
    });
}

void add_extract(CLI::App& app)
{
    auto cmd = app.add_subcommand("extract-pips",
                                  "report per-level downhill PIP endpoints along a net");
    auto fo = std::make_shared<FabricOpts>();
    fo->attach(cmd);
    struct Opts {
        std::string net, format = "text", out;
        int levels = 0;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--net", o->net, "net description file")->required();
    cmd->add_option("--levels", o->levels, "number of WSM levels to report (0 = all)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", o->format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    cmd->add_option("-o,--output", o->out, "output file (default stdout)");
    cmd->callback([fo, o] {
        Fabric f = fo->make();
        Net net = load_net(f, o->net);
        auto levels = extract_levels(f, net, o->levels);
        write_output(o->out, o->format == "csv" ? report_levels_csv(levels)
                                                : report_levels_text(levels));
    });
}

void add_ro(CLI::App& app)
{
    auto cmd = app.add_subcommand("ro", "build ring oscillators and report their timing");
    auto fo = std::make_shared<FabricOpts>();
    fo->attach(cmd);
    struct Opts {
        std::string kind, anchor = "INT_R_X3Y3", calib, format = "csv", out;
        int count = 2;
        double cell_delay = 0.0;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--kind", o->kind, "interconnect family (e.g. 1L, 2L, 4L, LONG, VQUAD)")
        ->required();
    cmd->add_option("--count", o->count, "number of oscillators to build")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--anchor", o->anchor, "anchor tile of the first oscillator");
    cmd->add_option("--calib", o->calib, "calibration CSV (loop sizes and delay model)")
        ->required();
    cmd->add_option("--cell-delay", o->cell_delay, "logic cell delay in ps");
    cmd->add_option("--format", o->format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}));
    cmd->add_option("-o,--output", o->out, "output file (default stdout)");
    cmd->callback([fo, o] {
        auto kind = kind_from_name(o->kind);
        if (!kind)
            throw ConfigError("unknown interconnect kind '" + o->kind + "'");
        Fabric f = fo->make();
        auto rows = load_calibration_csv(o->calib);
        DelayModel model = calibrate(rows, o->cell_delay);
        std::vector<int> targets;
        for (const auto& row : rows)
            if (row.kind == *kind)
                targets.push_back(row.interconnect_count);
        if (o->count > static_cast<int>(targets.size()))
            throw ConfigError("calibration lists only " + std::to_string(targets.size()) +
                              " loop size(s) for kind " + o->kind);
        TileCoord base = parse_tile_arg(o->anchor);
        std::vector<std::pair<RingOscillator, TimingReport>> out;
        for (int i = 0; i < o->count; i++) {
            RingOscillator ro = build_ro(f, *kind, nth_anchor(base, i), targets[i]);
            TimingReport t = estimate(ro, model);
            out.emplace_back(std::move(ro), t);
        }
        write_output(o->out, report_ros(out, parse_report_format(o->format)));
    });
}

void add_calibrate(CLI::App& app)
{
    auto cmd = app.add_subcommand("calibrate", "derive the delay model from measured loops");
    struct Opts {
        std::string calib, out;
        double cell_delay = 0.0;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--calib", o->calib, "calibration CSV")->required();
    cmd->add_option("--cell-delay", o->cell_delay, "logic cell delay in ps");
    cmd->add_option("-o,--output", o->out, "output file (default stdout)");
    cmd->callback([o] {
        DelayModel m = calibrate(load_calibration_csv(o->calib), o->cell_delay);
        write_output(o->out, format_model(m));
    });
}

void add_emit(CLI::App& app)
{
    auto cmd = app.add_subcommand("emit", "emit the FIXED_ROUTE constraint for a net");
    auto fo = std::make_shared<FabricOpts>();
    fo->attach(cmd);
    struct Opts {
        std::string net, name, format = "tcl", out;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--net", o->net, "net description file")->required();
    cmd->add_option("--name", o->name, "override the net name");
    cmd->add_option("--format", o->format, "tcl or xdc")
        ->check(CLI::IsMember({"tcl", "xdc"}));
    cmd->add_option("-o,--output", o->out, "output file (default stdout)");
    cmd->callback([fo, o] {
        Fabric f = fo->make();
        Net net = load_net(f, o->net);
        EmitterConfig cfg;
        cfg.net_name = o->name;
        cfg.format = o->format == "xdc" ? ConstraintFormat::Xdc : ConstraintFormat::Tcl;
        write_output(o->out, emit_fixed_route(net, cfg));
    });
}

void add_report(CLI::App& app)
{
    auto cmd = app.add_subcommand("report",
                                  "rebuild every calibrated loop and report its timing");
    auto fo = std::make_shared<FabricOpts>();
    fo->attach(cmd);
    struct Opts {
        std::string calib, anchor = "INT_R_X3Y3", format = "text", out;
        double cell_delay = 0.0;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--calib", o->calib, "calibration CSV")->required();
    cmd->add_option("--anchor", o->anchor, "anchor tile of each family's first loop");
    cmd->add_option("--cell-delay", o->cell_delay, "logic cell delay in ps");
    cmd->add_option("--format", o->format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    cmd->add_option("-o,--output", o->out, "output file (default stdout)");
    cmd->callback([fo, o] {
        Fabric f = fo->make();
        auto rows = load_calibration_csv(o->calib);
        DelayModel model = calibrate(rows, o->cell_delay);
        TileCoord base = parse_tile_arg(o->anchor);
        std::map<Kind, int> seen;
        std::vector<std::pair<RingOscillator, TimingReport>> out;
        for (const auto& row : rows) {
            int i = seen[row.kind]++;
            RingOscillator ro = build_ro(f, row.kind, nth_anchor(base, i),
                                         row.interconnect_count);
            TimingReport t = estimate(ro, model);
            out.emplace_back(std::move(ro), t);
        }
        write_output(o->out, report_ros(out, parse_report_format(o->format)));
    });
}

} // namespace

int run_cli(int argc, const char* const* argv)
{
    CLI::App app{"Wilton switch-matrix fabric modeling, routing and oscillator toolkit"};
    app.require_subcommand(1);
    add_build(app);
    add_route(app);
    add_extract(app);
    add_ro(app);
    add_calibrate(app);
    add_emit(app);
    add_report(app);

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.tag() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}

} // namespace wsm
