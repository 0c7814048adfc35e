#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rrlab/session.hpp"

// Exit codes: 0 clean run, 1 when a command errored, 2 on parse or
// reference errors in the script.
int main(int argc, char** argv) {
    CLI::App app{"Ratliff-Rush filtrations, tangent cones and blowup algebras"};
    std::string script_path;
    std::string json_path;
    rrlab::SessionOptions opt;
    app.add_option("script", script_path, ".rrs session script (stdin when omitted)");
    app.add_option("--seed", opt.seed, "seed for generic-form searches")
        ->capture_default_str();
    app.add_option("--n-max", opt.n_max, "Ratliff-Rush closure window")
        ->capture_default_str();
    app.add_option("--koszul-cap", opt.koszul_cap, "largest Koszul complex taken head-on")
        ->capture_default_str();
    app.add_option("--power-cap", opt.power_cap, "depth-table rows l = 1..power-cap")
        ->capture_default_str();
    app.add_flag("--fail-fast", opt.fail_fast, "stop at the first command error");
    app.add_option("--json", json_path, "write one JSON object per command to this file");
    app.add_flag("--parallel", opt.parallel,
                 "run independent commands concurrently (output stays ordered)");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (script_path.empty() || script_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(script_path);
        if (!in) {
            std::cerr << "cannot open " << script_path << "\n";
            return 1;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    rrlab::SessionScript script;
    try {
        script = rrlab::parse_session(text);
    } catch (const rrlab::ReferenceError& e) {
        std::cerr << "reference error at " << e.line << ":" << e.col << ": " << e.what()
                  << "\n";
        return 2;
    } catch (const rrlab::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::ofstream json_file;
    std::ostream* jsonl = nullptr;
    if (!json_path.empty()) {
        json_file.open(json_path, std::ios::trunc);
        if (!json_file) {
            std::cerr << "cannot write " << json_path << "\n";
            return 1;
        }
        jsonl = &json_file;
    }

    rrlab::SessionSummary sum = rrlab::run_session(script, opt, std::cout, jsonl);
    if (sum.commands > 0) {
        std::cout << "-- " << sum.commands << " command(s), " << sum.errors << " error(s)";
        if (sum.inconclusive > 0) std::cout << ", " << sum.inconclusive << " inconclusive";
        std::cout << "\n";
    }
    return sum.exit_code;
}
