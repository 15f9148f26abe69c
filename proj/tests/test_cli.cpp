// End-to-end tests for the cover-check command line tool.
// Each case launches the real binary and inspects exit code, stdout, stderr.

#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "test_util.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string corpus(const std::string& name) {
    return std::string(CORPUS_DIR) + "/" + name + ".cov";
}

// Runs the binary with the given argument string, capturing both streams.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    ++counter;
    const std::string out_path = "/tmp/covercheck_cli_out_" + std::to_string(counter);
    const std::string err_path = "/tmp/covercheck_cli_err_" + std::to_string(counter);
    const std::string cmd = std::string(COVER_CHECK_BIN) + " " + args +
                            " > " + out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = testutil::read_file(out_path);
    r.err = testutil::read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

// The elapsed-time line varies run to run; blank it before comparing.
std::string normalize_time(const std::string& text) {
    static const std::regex line("time: [0-9]+ ms");
    return std::regex_replace(text, line, "time: _ ms");
}

void check_text(const std::string& args, const std::string& expected) {
    RunResult r = run_cli(args);
    CHECK(r.code == 0);
    CHECK(r.err == "");
    CHECK(normalize_time(r.out) == expected);
}

void check_golden(const std::string& args, const std::string& golden_name) {
    RunResult r = run_cli(args + " --json");
    REQUIRE(r.code == 0);
    CHECK(r.err == "");
    json actual = json::parse(r.out);
    json expected = json::parse(
        testutil::read_file(std::string(GOLDEN_DIR) + "/" + golden_name));
    actual["time_ms"] = 0;
    expected["time_ms"] = 0;
    CHECK(actual == expected);
}

void check_failure(const std::string& args, int code, const std::string& message) {
    RunResult r = run_cli(args);
    CHECK(r.code == code);
    CHECK(r.out == "");
    CHECK(r.err == "error: " + message + "\n");
}

}  // namespace

TEST_CASE("version flag") {
    RunResult r = run_cli("--version");
    CHECK(r.code == 0);
    CHECK(r.out == "0.1.0\n");
    CHECK(r.err == "");
}

TEST_CASE("text report: finiteness certificate") {
    check_text("is-finite " + corpus("nodal"),
               "command: is-finite\n"
               "digest: 17f497b5e3815478\n"
               "fiber variables: x1 x2\n"
               "base variables: y1 y2\n"
               "order: block(grevlex,grevlex;2)\n"
               "finite: yes\n"
               "witnesses:\n"
               "  x1: power 2 via x1^2 - y1 - 1\n"
               "  x2: power 2 via x2^2 - y1^2\n"
               "time: _ ms\n");
}

TEST_CASE("text report: covering via a radical presentation") {
    check_text("covering " + corpus("cusp_chart"),
               "command: covering\n"
               "digest: 68265182f761049d\n"
               "fiber variables: x\n"
               "base variables: p q s\n"
               "order: block(grevlex,grevlex;1)\n"
               "verdict: COVERING\n"
               "finite: yes\n"
               "flat: yes\n"
               "etale: yes\n"
               "presentation flat: yes\n"
               "presentation etale: no\n"
               "used radical: yes\n"
               "groebner basis (4):\n"
               "  x^3 + x*p + q\n"
               "  1/4 * (4*p^3 + 27*q^2)\n"
               "  1/27 * (27*q^2*s + 4*p^2)\n"
               "  p*s - 1\n"
               "non finite locus (1):\n"
               "  1\n"
               "non flat locus (1):\n"
               "  1\n"
               "non etale locus (1):\n"
               "  1\n"
               "note: radical presentation is finite flat unramified; "
               "the real points agree with the reduction's\n"
               "time: _ ms\n");
}

TEST_CASE("text report: fiber over a named point") {
    check_text("fiber " + corpus("parabolas") + " --point origin",
               "command: fiber\n"
               "digest: f817fc292d6fa0b9\n"
               "fiber variables: y\n"
               "base variables: x\n"
               "order: block(grevlex,grevlex;1)\n"
               "point: origin = (0)\n"
               "length: 4\n"
               "distinct: 2\n"
               "real: 2\n"
               "separating form: y\n"
               "time: _ ms\n");
}

TEST_CASE("json reports match the golden files") {
    check_golden("covering " + corpus("nodal"), "nodal_covering.json");
    check_golden("fiber " + corpus("nodal") + " --point origin",
                 "nodal_fiber_origin.json");
    check_golden("non-etale-locus " + corpus("cusp_cover"),
                 "cusp_cover_non_etale_locus.json");
    check_golden("is-finite " + corpus("hyperbola_origin"),
                 "hyperbola_origin_is_finite.json");
    check_golden("is-flat " + corpus("matrix_rank1"), "matrix_rank1_is_flat.json");
    check_golden("gb " + corpus("circle_cover"), "circle_cover_gb.json");
}

TEST_CASE("text and json modes agree on the digest") {
    RunResult text = run_cli("gb " + corpus("circle_cover"));
    REQUIRE(text.code == 0);
    std::smatch m;
    REQUIRE(std::regex_search(text.out, m, std::regex("digest: ([0-9a-f]{16})")));

    json golden = json::parse(testutil::read_file(
        std::string(GOLDEN_DIR) + "/circle_cover_gb.json"));
    CHECK(m[1].str() == golden["digest"].get<std::string>());

    // Deterministic across invocations.
    RunResult again = run_cli("gb " + corpus("circle_cover"));
    CHECK(normalize_time(again.out) == normalize_time(text.out));
}

TEST_CASE("order override") {
    RunResult lex = run_cli("gb " + corpus("nodal") + " --order lex");
    CHECK(lex.code == 0);
    CHECK(lex.out.find("order: block(lex,lex;2)") != std::string::npos);

    RunResult mixed = run_cli("gb " + corpus("nodal") + " --order grevlex,lex");
    CHECK(mixed.code == 0);
    CHECK(mixed.out.find("order: block(grevlex,lex;2)") != std::string::npos);

    check_failure("gb " + corpus("nodal") + " --order foo", 1,
                  "unknown order 'foo' (expected lex or grevlex)");
}

TEST_CASE("assume-reduced switches the inconclusive verdict") {
    RunResult plain = run_cli("covering " + corpus("cusp_cover"));
    CHECK(plain.code == 0);
    CHECK(plain.out.find("verdict: INCONCLUSIVE_NEEDS_RADICAL") != std::string::npos);
    CHECK(plain.out.find("note: presentation may be non-reduced; supply a radical "
                         "presentation or pass assume-reduced") != std::string::npos);

    RunResult reduced = run_cli("covering " + corpus("cusp_cover") + " --assume-reduced");
    CHECK(reduced.code == 0);
    CHECK(reduced.out.find("verdict: CRITERION_FAILS") != std::string::npos);
    CHECK(reduced.out.find("note: reduced, finite, flat but ramified: "
                           "fiber cardinality jumps") != std::string::npos);
}

TEST_CASE("input errors exit with code 1") {
    check_failure("bogus " + corpus("nodal"), 1, "unknown command 'bogus'");
    check_failure("gb /nope/missing.cov", 1, "cannot read '/nope/missing.cov'");
    check_failure("fiber " + corpus("nodal"), 1, "fiber requires --point <name>");
    check_failure("fiber " + corpus("nodal") + " --point zzz", 1,
                  "unknown point 'zzz' (declared: origin, smooth)");
    check_failure("fiber " + corpus("hyperbola_origin") + " --point zzz", 1,
                  "unknown point 'zzz' (the file declares no points)");

    const std::string bad_path = "/tmp/covercheck_cli_bad.cov";
    std::ofstream(bad_path) << "nonsense\n";
    check_failure("gb " + bad_path, 1, "line 1: content before any section");
    std::remove(bad_path.c_str());
}

TEST_CASE("timeouts exit with code 2") {
    RunResult r = run_cli("non-etale-locus " + corpus("ml_degree") +
                          " --timeout-seconds 1");
    CHECK(r.code == 2);
    CHECK(r.out == "");
    CHECK(r.err.rfind("error: timeout in", 0) == 0);
}
