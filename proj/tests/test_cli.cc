// End-to-end CLI tests: the installed binary against the library's answers.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "emit.h"
#include "error.h"
#include "extractor.h"
#include "router.h"
#include "timing.h"

using namespace wsm;

namespace {

std::string data_path(const char* name) { return std::string(WSM_DATA_DIR "/") + name; }

std::string scratch_dir()
{
    static const std::string dir = [] {
        char tmpl[] = "/tmp/wsm_cli_XXXXXX";
        const char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct CmdResult {
    int status = -1;
    std::string out;
    std::string err;
};

// run the binary through the shell, capturing both streams; `env_prefix` may
// carry VAR=value assignments
CmdResult run_cli(const std::string& args, const std::string& env_prefix = "")
{
    static int serial = 0;
    std::string base = scratch_dir() + "/cmd" + std::to_string(serial++);
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "'" + WSM_CLI_PATH +
                      "' " + args + " >'" + base + ".out' 2>'" + base + ".err'";
    int rc = std::system(cmd.c_str());
    CmdResult r;
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    return r;
}

} // namespace

TEST_CASE("a bare invocation is a usage error") {
    CmdResult r = run_cli("");
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: usage:", 0) == 0);

    CmdResult bad = run_cli("frobnicate");
    CHECK(bad.status == 2);

    CmdResult help = run_cli("--help");
    CHECK(help.status == 0);
    CHECK(help.out.find("build") != std::string::npos);
}

TEST_CASE("build output is byte-deterministic per seed") {
    CmdResult a = run_cli("build --width 4 --height 3 --seed 5");
    CmdResult b = run_cli("build --width 4 --height 3 --seed 5");
    CmdResult c = run_cli("build --width 4 --height 3 --seed 6");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(a.out.rfind("fabric width=4 height=3\nseed=5\n", 0) == 0);

    // file output carries the same bytes as stdout
    std::string path = scratch_dir() + "/fab.txt";
    CmdResult d = run_cli("build --width 4 --height 3 --seed 5 -o '" + path + "'");
    REQUIRE(d.status == 0);
    CHECK(d.out.empty());
    CHECK(slurp(path) == a.out);

    // and the text round-trips through the library loader
    CHECK(Fabric::from_text(a.out) == Fabric::build(4, 3, 5));
}

TEST_CASE("the seed comes from the flag, then the environment, then the default") {
    std::string args = "build --width 3 --height 3";
    CmdResult flag7 = run_cli(args + " --seed 7");
    CmdResult env7 = run_cli(args, "WSM_FABRIC_SEED=7");
    CmdResult flag_wins = run_cli(args + " --seed 7", "WSM_FABRIC_SEED=9");
    CmdResult plain = run_cli(args);
    REQUIRE(flag7.status == 0);
    CHECK(env7.out == flag7.out);
    CHECK(flag_wins.out == flag7.out);
    CHECK(plain.out == run_cli(args + " --seed 1").out);
    CHECK(plain.out != flag7.out);

    CmdResult bad = run_cli(args, "WSM_FABRIC_SEED=banana");
    CHECK(bad.status == 1);
    CHECK(bad.err.rfind("error: config:", 0) == 0);
}

TEST_CASE("extract-pips matches the library on the bundled net") {
    Fabric f = Fabric::build(6, 6);
    Net net = load_net(f, data_path("neta.route"));

    std::string base = "extract-pips --width 6 --height 6 --net '" + data_path("neta.route") + "'";
    CmdResult text = run_cli(base + " --levels 2");
    REQUIRE(text.status == 0);
    CHECK(text.out == report_levels_text(extract_levels(f, net, 2)));

    CmdResult csv = run_cli(base + " --format csv");
    REQUIRE(csv.status == 0);
    CHECK(csv.out == report_levels_csv(extract_levels(f, net, 0)));
    CHECK(csv.out.rfind("level,pin,pip_endpoint\n", 0) == 0);
}

TEST_CASE("ro prints the calibrated loop table") {
    CmdResult r = run_cli("ro --kind 1L --count 2 --calib '" + data_path("table3_ros.csv") + "'");
    REQUIRE(r.status == 0);
    CHECK(r.out ==
          "ro_type,frequency_khz,net_delay_ps,interconnect_count\n"
          "1L,48912,200,51\n"
          "1L,48909,197,52\n");

    // asking for more loops than the calibration lists is a config error
    CmdResult over =
        run_cli("ro --kind 1L --count 3 --calib '" + data_path("table3_ros.csv") + "'");
    CHECK(over.status == 1);
    CHECK(over.err.rfind("error: config:", 0) == 0);

    CmdResult unknown =
        run_cli("ro --kind 3L --count 1 --calib '" + data_path("table3_ros.csv") + "'");
    CHECK(unknown.status == 1);
    CHECK(unknown.err.rfind("error: config:", 0) == 0);
}

TEST_CASE("emit prints the constraint statement") {
    std::string base = "emit --width 6 --height 6 --net '" + data_path("neta.route") + "'";
    CmdResult r = run_cli(base);
    REQUIRE(r.status == 0);
    CHECK(r.out ==
          "set_property FIXED_ROUTE { LOGIC_OUTS2 NN1BEG3 NN1BEG3 WR1BEG1 WR1BEG1 "
          "NL1BEG_N3 NL1BEG_N3 ER1BEG_S0 ER1BEG_S0 NR1BEG0 NR1BEG0 ER1BEG1 ER1BEG1 "
          "SR1BEG1 SR1BEG1 IMUX_L23 CLBLM_M_D6 } [get_nets NetA]\n");

    CmdResult renamed = run_cli(base + " --name clk --format xdc");
    REQUIRE(renamed.status == 0);
    CHECK(renamed.out.find("[get_nets clk]\n") != std::string::npos);

    CmdResult missing = run_cli("emit --net /nonexistent.route");
    CHECK(missing.status == 1);
    CHECK(missing.err.rfind("error: io:", 0) == 0);
}

TEST_CASE("route matches the library and needs a model for delay objectives") {
    Fabric f = Fabric::build(6, 6);
    RouteQuery q;
    q.src_tile = {2, 2};
    q.dst_tile = {3, 4};
    CmdResult r = run_cli("route --width 6 --height 6 --from INT_R_X2Y2 --to INT_L_X3Y4");
    REQUIRE(r.status == 0);
    CHECK(r.out == net_to_text(route(f, q)));

    CmdResult nomodel =
        run_cli("route --width 6 --height 6 --from INT_R_X0Y0 --to INT_R_X2Y2 "
                "--objective delay");
    CHECK(nomodel.status == 1);
    CHECK(nomodel.err.rfind("error: config:", 0) == 0);

    CmdResult badkind =
        run_cli("route --width 6 --height 6 --from INT_R_X0Y0 --to INT_R_X2Y2 "
                "--kinds HVCCGNDOUT");
    CHECK(badkind.status == 1);
    CHECK(badkind.err.rfind("error: unroutable:", 0) == 0);
}

TEST_CASE("calibrate dumps the model derived from the table") {
    CmdResult r = run_cli("calibrate --calib '" + data_path("table3_ros.csv") + "'");
    REQUIRE(r.status == 0);
    CHECK(r.out == format_model(calibrate(load_calibration_csv(data_path("table3_ros.csv")))));
    CHECK(r.out.rfind("cell_delay_ps 0.0000\n", 0) == 0);
}

TEST_CASE("report rebuilds every calibrated loop within tolerance") {
    CmdResult r = run_cli("report --calib '" + data_path("table3_ros.csv") + "' --format csv");
    REQUIRE(r.status == 0);
    auto want = load_calibration_csv(data_path("table3_ros.csv"));
    auto got = parse_calibration_csv(r.out);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); i++) {
        CHECK(got[i].kind == want[i].kind);
        CHECK(got[i].interconnect_count == want[i].interconnect_count);
        // printed as whole kHz, so the match must be that tight
        CHECK(std::abs(got[i].frequency_khz - want[i].frequency_khz) /
                  want[i].frequency_khz <=
              5e-4);
    }
}
