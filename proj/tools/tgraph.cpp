// Command-line front end. Results go to stdout (or --output), diagnostics
// to stderr. Exit codes: 0 success / positive recognition, 1 negative
// answer, 2 malformed input or usage error, 3 inconclusive search.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "totalgraph/totalgraph.hpp"

namespace {

using namespace totalgraph;

Graph read_graph_input(const std::string& path) {
    if (path == "-") return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return parse_graph(in);
}

Graph read_connected_graph_input(const std::string& path) {
    Graph g = read_graph_input(path);
    if (!is_connected(g)) throw std::domain_error("input graph is disconnected");
    return g;
}

// Runs body against stdout or the named file.
template <typename Body>
int with_output(const std::string& path, Body body) {
    if (path.empty()) return body(std::cout);
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    return body(out);
}

void print_sequence(std::ostream& out, const char* label, const std::vector<int>& seq) {
    out << label;
    for (int v : seq) out << ' ' << v;
    out << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"total graph construction, recognition, and inverse reconstruction"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    RecognitionOptions ropt;
    int exit_code = 0;

    auto add_io = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("input", input, "edge-list file, or - for stdin");
        cmd->add_option("-o,--output", output, "write results to this file instead of stdout");
    };

    // --- total -----------------------------------------------------------
    bool with_labeling = false;
    auto* cmd_total = app.add_subcommand("total", "build the total graph of the input graph");
    add_io(cmd_total);
    cmd_total->add_flag("--labeling", with_labeling,
                        "append the vertex-part/edge-part labelling block");
    cmd_total->callback([&] {
        Graph g = read_connected_graph_input(input);
        TotalGraphLayout layout = total_graph(g);
        exit_code = with_output(output, [&](std::ostream& out) {
            format_graph(out, layout.graph);
            if (with_labeling) format_labeling(out, layout.graph, labeling_of(layout));
            return 0;
        });
    });

    // --- line ------------------------------------------------------------
    auto* cmd_line = app.add_subcommand("line", "build the line graph of the input graph");
    add_io(cmd_line);
    cmd_line->callback([&] {
        Graph g = read_connected_graph_input(input);
        LineGraphResult lg = line_graph(g);
        exit_code = with_output(output, [&](std::ostream& out) {
            format_graph(out, lg.graph);
            return 0;
        });
    });

    // --- construct -------------------------------------------------------
    std::string family;
    int order = 0;
    auto* cmd_construct =
        app.add_subcommand("construct", "emit a path, cycle, or complete graph edge list");
    cmd_construct->add_option("family", family, "one of: path, cycle, complete")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete"}));
    cmd_construct->add_option("n", order, "number of vertices")->required();
    add_io(cmd_construct, false);
    cmd_construct->callback([&] {
        Graph g = family == "path"    ? path_graph(order)
                  : family == "cycle" ? cycle_graph(order)
                                      : complete_graph(order);
        exit_code = with_output(output, [&](std::ostream& out) {
            format_graph(out, g);
            return 0;
        });
    });

    // --- inverse ---------------------------------------------------------
    auto* cmd_inverse = app.add_subcommand(
        "inverse", "decide whether the input is a total graph and reconstruct its source");
    add_io(cmd_inverse);
    cmd_inverse->add_option("--budget", ropt.budget, "backtracking node budget");
    cmd_inverse->add_option("--profile-cap", ropt.profile_cap,
                            "per-vertex cap on neighbourhood profiles");
    cmd_inverse->callback([&] {
        Graph h = read_connected_graph_input(input);
        RecognitionOutcome outcome = inverse_total(h, ropt);
        exit_code = with_output(output, [&](std::ostream& out) {
            format_outcome(out, h, outcome);
            switch (outcome.status) {
                case RecognitionStatus::TotalGraph: return 0;
                case RecognitionStatus::NotTotalGraph: return 1;
                case RecognitionStatus::Inconclusive: return 3;
            }
            return 2;
        });
    });

    // --- recognize-complete ----------------------------------------------
    auto* cmd_complete = app.add_subcommand(
        "recognize-complete", "decide whether the input is the total graph of a complete graph");
    add_io(cmd_complete);
    cmd_complete->callback([&] {
        Graph h = read_connected_graph_input(input);
        auto rec = recognize_complete_total_labeled(h);
        exit_code = with_output(output, [&](std::ostream& out) {
            if (!rec) {
                out << "not-complete-total\n";
                return 1;
            }
            out << "complete-total " << rec->first << '\n';
            format_labeling(out, h, rec->second);
            return 0;
        });
    });

    // --- oracle-inverse ----------------------------------------------------
    auto* cmd_oracle = app.add_subcommand(
        "oracle-inverse", "brute-force inverse over all small graphs (cross-check oracle)");
    add_io(cmd_oracle);
    cmd_oracle->callback([&] {
        Graph h = read_connected_graph_input(input);
        auto inv = brute_force_inverse(h);
        exit_code = with_output(output, [&](std::ostream& out) {
            if (!inv) {
                out << "not-total-graph\n";
                return 1;
            }
            out << "total-graph\n";
            format_graph(out, *inv);
            return 0;
        });
    });

    // --- verify ------------------------------------------------------------
    std::string shape;
    int shape_order = 0;
    auto* cmd_verify = app.add_subcommand(
        "verify", "check the input against the structural form of a cycle or path total graph");
    cmd_verify->add_option("shape", shape, "one of: cycle, path")
        ->required()
        ->check(CLI::IsMember({"cycle", "path"}));
    cmd_verify->add_option("n", shape_order, "order of the cycle or path")->required();
    add_io(cmd_verify);
    cmd_verify->callback([&] {
        Graph h = read_connected_graph_input(input);
        StructureCheck check = shape == "cycle" ? check_total_of_cycle(h, shape_order)
                                                : check_total_of_path(h, shape_order);
        exit_code = with_output(output, [&](std::ostream& out) {
            if (!check.certificate) {
                out << check.refusal << '\n';
                return 1;
            }
            if (!certificate_is_valid(h, *check.certificate)) {
                out << "refused: certificate failed revalidation\n";
                return 1;
            }
            out << "valid\n";
            print_sequence(out, "first", check.certificate->first_sequence);
            print_sequence(out, "second", check.certificate->second_sequence);
            print_sequence(out, "interleaved", check.certificate->interleaved_sequence);
            return 0;
        });
    });

    // --- selftest ----------------------------------------------------------
    int max_n = 7;
    int jobs = 1;
    auto* cmd_selftest = app.add_subcommand(
        "selftest", "round-trip every connected graph up to --max-n through the inverse search");
    add_io(cmd_selftest, false);
    cmd_selftest->add_option("--max-n", max_n, "largest source order to sweep (1..8)")
        ->check(CLI::Range(1, 8));
    cmd_selftest->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd_selftest->add_option("--budget", ropt.budget, "backtracking node budget");
    cmd_selftest->add_option("--profile-cap", ropt.profile_cap,
                             "per-vertex cap on neighbourhood profiles");
    cmd_selftest->callback([&] {
        SelfTestResult result = run_roundtrip_selftest(max_n, jobs, ropt);
        exit_code = with_output(output, [&](std::ostream& out) {
            for (const std::string& line : result.lines) out << line << '\n';
            out << "selftest max-n=" << max_n << " classes=" << result.classes
                << " failures=" << result.failures << '\n';
            out << (result.failures == 0 ? "PASS" : "FAIL") << '\n';
            return result.failures == 0 ? 0 : 1;
        });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
