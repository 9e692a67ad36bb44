#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "edgewave/signal_io.hpp"
#include "test_util.hpp"

#ifndef EDGEWAVE_CLI_PATH
#error "EDGEWAVE_CLI_PATH must point at the built binary"
#endif

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(EDGEWAVE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("run --help") == 0);
}

TEST_CASE("config errors exit with code 2") {
    CHECK(run_cli("run") == 2);                       // missing required flags
    CHECK(run_cli("bogus") == 2);                     // unknown subcommand
    CHECK(run_cli("run --graph a.csv --out b.csv --mask sideways") == 2);

    // Domain validation after parsing also maps to 2.
    testutil::TempDir dir("cli_cfg");
    dir.write("g.csv", "u,v\n0,1\n1,2\n");
    dir.write("base.csv", "1.0,2.0\n");
    CHECK(run_cli("run --graph " + dir.file("g.csv") + " --synth-base " + dir.file("base.csv") +
                  " --horizon 10 --fraction 1.5 --out " + dir.file("o.csv")) == 2);
}

TEST_CASE("missing input files exit with code 4") {
    testutil::TempDir dir("cli_io");
    CHECK(run_cli("linegraph --graph " + dir.file("nope.csv") + " --out " + dir.file("o.csv")) ==
          4);
}

TEST_CASE("linegraph emits the dual edge list") {
    testutil::TempDir dir("cli_lg");
    dir.write("p3.csv", "u,v\n0,1\n1,2\n");
    CHECK(run_cli("linegraph --graph " + dir.file("p3.csv") + " --out " + dir.file("dual.csv")) ==
          0);
    CHECK(testutil::read_file(dir.file("dual.csv")) == "u,v\n0,1\n");
}

TEST_CASE("sample exports a greedy mask") {
    testutil::TempDir dir("cli_sample");
    edgewave::write_graph_csv(testutil::star4(), dir.file("star.csv"));
    CHECK(run_cli("sample --graph " + dir.file("star.csv") +
                  " --mask greedy --fraction 1.0 --bandwidth 2 --out " + dir.file("mask.csv")) ==
          0);
    CHECK(testutil::read_file(dir.file("mask.csv")) ==
          "edge_index,observed\n0,1\n1,1\n2,1\n");

    CHECK(run_cli("sample --graph " + dir.file("star.csv") +
                  " --mask random --fraction 0.67 --seed 5 --out " + dir.file("mask2.csv")) == 0);
    const edgewave::Graph g = edgewave::load_graph_csv(dir.file("star.csv"));
    CHECK(testutil::read_file(dir.file("mask2.csv")).find("edge_index,observed\n") == 0);
}

TEST_CASE("run experiment end to end, deterministic output") {
    testutil::TempDir dir("cli_run");
    edgewave::write_graph_csv(testutil::random_connected_graph(8, 12, 55), dir.file("g.csv"));
    dir.write("base.csv", "1.0,1.5,2.0,2.5,3.0,1.0,1.5,2.0,2.5,3.0,1.0,1.5\n");

    const std::string args = "run --graph " + dir.file("g.csv") + " --synth-base " +
                             dir.file("base.csv") +
                             " --horizon 25 --mask random --fraction 0.67"
                             " --filter lowpass,bandlimited --alpha 0.5 --runs 3 --seed 9"
                             " --algos lglms,spectral,sc --out ";

    CHECK(run_cli(args + dir.file("a.csv")) == 0);
    CHECK(run_cli(args + dir.file("b.csv")) == 0);

    const std::string a = testutil::read_file(dir.file("a.csv"));
    CHECK(a.find("t,algorithm,nmse\n") == 0);
    CHECK(a == testutil::read_file(dir.file("b.csv")));
    CHECK(a.find("lglms_bl") != std::string::npos);
    CHECK(a.find("sc_lp") != std::string::npos);
}

TEST_CASE("unstable step size exits with code 3") {
    testutil::TempDir dir("cli_unstable");
    edgewave::write_graph_csv(testutil::random_connected_graph(6, 9, 5), dir.file("g.csv"));
    dir.write("base.csv", "1.0,1.0,1.0,1.0,1.0,1.0,1.0,1.0,1.0\n");
    CHECK(run_cli("run --graph " + dir.file("g.csv") + " --synth-base " + dir.file("base.csv") +
                  " --horizon 10 --fraction 1.0 --alpha 10.0 --algos lglms --out " +
                  dir.file("o.csv")) == 3);
}
