// Drives the installed binary end to end. The test runner passes its
// location through the TGRAPH_BIN environment variable.
#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "totalgraph/totalgraph.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& stem) {
    static int counter = 0;
    const char* base = std::getenv("TMPDIR");
    return std::string(base ? base : "/tmp") + "/tgraph_cli_" + stem + "_" +
           std::to_string(++counter);
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    const char* bin = std::getenv("TGRAPH_BIN");
    REQUIRE(bin != nullptr);
    std::string in_file = temp_path("in"), out_file = temp_path("out"),
                err_file = temp_path("err");
    {
        std::ofstream in(in_file);
        in << stdin_text;
    }
    std::string cmd = std::string(bin) + " " + args + " < " + in_file + " > " + out_file +
                      " 2> " + err_file;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(in_file.c_str());
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

const std::string kPath4 = "4 3\n0 1\n1 2\n2 3\n";
const std::string kTotalPath4 =
    "7 11\n0 1\n0 4\n1 2\n1 4\n1 5\n2 3\n2 5\n2 6\n3 6\n4 5\n5 6\n";
const std::string kLabelingPath4 = "v 0\nv 1\nv 2\nv 3\ne 0 1\ne 1 2\ne 2 3\n";

} // namespace

TEST_CASE("construct emits the exact edge list", "[cli]") {
    RunResult r = run_cli("construct path 4");
    CHECK(r.code == 0);
    CHECK(r.out == kPath4);
    CHECK(run_cli("construct cycle 3").out == "3 3\n0 1\n0 2\n1 2\n");
    CHECK(run_cli("construct complete 2").out == "2 1\n0 1\n");
    CHECK(run_cli("construct cycle 2").code == 2);
    CHECK(run_cli("construct blob 4").code == 2);
}

TEST_CASE("total builds from stdin or a file, with optional labelling", "[cli]") {
    RunResult from_stdin = run_cli("total", kPath4);
    CHECK(from_stdin.code == 0);
    CHECK(from_stdin.out == kTotalPath4);

    std::string input = temp_path("graph");
    {
        std::ofstream f(input);
        f << kPath4;
    }
    RunResult from_file = run_cli("total " + input);
    CHECK(from_file.out == from_stdin.out);
    RunResult labelled = run_cli("total --labeling " + input);
    CHECK(labelled.out == kTotalPath4 + kLabelingPath4);
    std::remove(input.c_str());
}

TEST_CASE("line subcommand", "[cli]") {
    RunResult r = run_cli("line", kPath4);
    CHECK(r.code == 0);
    CHECK(r.out == "3 2\n0 1\n1 2\n");
    // a single vertex has no line graph
    CHECK(run_cli("line", "1 0\n").code == 2);
}

TEST_CASE("inverse answers with certificate, witness, or inconclusive", "[cli]") {
    RunResult yes = run_cli("inverse", kTotalPath4);
    CHECK(yes.code == 0);
    CHECK(yes.out == "total-graph\n" + kPath4 + kLabelingPath4);

    RunResult no = run_cli("inverse", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(no.code == 1);
    CHECK(no.out.substr(0, 16) == "not-total-graph\n");
    CHECK(no.out.find("witness refused:") != std::string::npos);

    RunResult stumped = run_cli("inverse --budget 1", kTotalPath4);
    CHECK(stumped.code == 3);
    CHECK(stumped.out.substr(0, 13) == "inconclusive\n");
}

TEST_CASE("bad input exits with code 2 and a diagnostic on stderr", "[cli]") {
    RunResult garbage = run_cli("inverse", "pretzel\n");
    CHECK(garbage.code == 2);
    CHECK(garbage.out.empty());
    CHECK(garbage.err.find("error:") == 0);

    RunResult split = run_cli("total", "4 2\n0 1\n2 3\n");
    CHECK(split.code == 2);
    CHECK(split.err.find("disconnected") != std::string::npos);

    CHECK(run_cli("").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("complete-graph recognition subcommand", "[cli]") {
    RunResult yes = run_cli("recognize-complete", "3 3\n0 1\n0 2\n1 2\n");
    CHECK(yes.code == 0);
    CHECK(yes.out.substr(0, 17) == "complete-total 2\n");

    RunResult no = run_cli("recognize-complete", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    CHECK(no.code == 1);
    CHECK(no.out == "not-complete-total\n");
}

TEST_CASE("oracle subcommand agrees with the library", "[cli]") {
    using namespace totalgraph;
    Graph h = total_graph(path_graph(3)).graph;
    RunResult r = run_cli("oracle-inverse", graph_to_string(h));
    CHECK(r.code == 0);
    REQUIRE(r.out.substr(0, 12) == "total-graph\n");
    std::istringstream rest(r.out.substr(12));
    CHECK(are_isomorphic(parse_graph(rest), path_graph(3)));

    CHECK(run_cli("oracle-inverse", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").code == 1);
}

TEST_CASE("structural verification subcommand", "[cli]") {
    using namespace totalgraph;
    std::string t_c4 = graph_to_string(total_graph(cycle_graph(4)).graph);
    RunResult ok = run_cli("verify cycle 4", t_c4);
    CHECK(ok.code == 0);
    CHECK(ok.out.substr(0, 6) == "valid\n");

    RunResult wrong_n = run_cli("verify cycle 5", t_c4);
    CHECK(wrong_n.code == 1);
    CHECK(wrong_n.out == "refused: vertex count 8 differs from 10\n");

    RunResult path_ok = run_cli("verify path 3", graph_to_string(total_graph(path_graph(3)).graph));
    CHECK(path_ok.code == 0);

    CHECK(run_cli("verify spiral 4", t_c4).code == 2);
}

TEST_CASE("selftest sweeps the census and reports per-order lines", "[cli]") {
    RunResult r = run_cli("selftest --max-n 4");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n=1 classes=1 failures=0\n"
          "n=2 classes=1 failures=0\n"
          "n=3 classes=2 failures=0\n"
          "n=4 classes=6 failures=0\n"
          "selftest max-n=4 classes=10 failures=0\n"
          "PASS\n");
    CHECK(run_cli("selftest --max-n 0").code == 2);
    CHECK(run_cli("selftest --max-n 9").code == 2);
}

TEST_CASE("output redirection writes the same bytes", "[cli]") {
    std::string out_file = temp_path("redirect");
    RunResult r = run_cli("total -o " + out_file, kPath4);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out_file) == kTotalPath4);
    std::remove(out_file.c_str());
}
