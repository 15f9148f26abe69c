// cover-check: analyze a morphism presentation from a problem file.
// Talks to the library exclusively through the C interface.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "covercheck.h"

namespace {

int exit_code_of(cc_status status) {
    switch (status) {
        case CC_OK: return 0;
        case CC_INPUT_ERROR: return 1;
        default: return 2;  // limits and internal failures
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite/flat/etale analysis and covering-map verdicts for "
                 "morphisms of affine varieties"};
    app.set_version_flag("--version", cc_version());

    std::string command, file, point, order;
    bool json = false, assume_reduced = false;
    long timeout_seconds = 0;

    app.add_option("command", command,
                   "gb | is-finite | non-finite-locus | is-flat | non-flat-locus | "
                   "is-etale | non-etale-locus | covering | fiber")
        ->required();
    app.add_option("file", file, "problem file")->required();
    app.add_flag("--json", json, "emit one JSON object instead of text");
    app.add_option("--point", point, "named point for the fiber command");
    app.add_flag("--assume-reduced", assume_reduced,
                 "treat the coordinate ring as reduced (covering command)");
    app.add_option("--timeout-seconds", timeout_seconds,
                   "abort with exit code 2 after this many seconds");
    app.add_option("--order", order,
                   "override the file's term orders: lex|grevlex[,lex|grevlex]");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot read '" << file << "'\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    cc_problem* problem = nullptr;
    cc_status status = cc_problem_parse(text.c_str(), &problem);
    if (status != CC_OK) {
        std::cerr << "error: " << cc_last_error() << "\n";
        return exit_code_of(status);
    }

    cc_options opts;
    cc_options_init(&opts);
    opts.command = command.c_str();
    opts.json = json ? 1 : 0;
    opts.point = point.empty() ? nullptr : point.c_str();
    opts.assume_reduced = assume_reduced ? 1 : 0;
    opts.timeout_seconds = timeout_seconds;
    opts.order = order.empty() ? nullptr : order.c_str();

    char* report = nullptr;
    status = cc_run(problem, &opts, &report);
    if (status == CC_OK) {
        std::cout << report;
        cc_string_release(report);
    } else {
        std::cerr << "error: " << cc_last_error() << "\n";
    }
    cc_problem_release(problem);
    return exit_code_of(status);
}
