#pragma once

#include <string>

#include "covercheck/problem.hpp"

namespace covercheck {

// One CLI invocation, decoupled from flag parsing so the C API and the
// executable share the exact same behavior.
struct RunOptions {
    std::string command;        // gb | is-finite | non-finite-locus | is-flat |
                                // non-flat-locus | is-etale | non-etale-locus |
                                // covering | fiber
    bool json = false;
    std::string point_name;     // required by `fiber`
    bool assume_reduced = false;
    long timeout_seconds = 0;   // <= 0 means no limit
    std::string order_override; // "", "lex", "grevlex", or "fiber,base" pair
};

// Renders the full report (text or a single JSON object). Raises InputError
// for bad problems/flags and LimitError when the deadline expires.
std::string run_parsed(const ProblemFile& problem, const RunOptions& options);
std::string run_command(const std::string& problem_text, const RunOptions& options);

}  // namespace covercheck
