#include "covercheck.h"

#include <cstring>
#include <string>

#include "covercheck/errors.hpp"
#include "covercheck/problem.hpp"
#include "covercheck/runner.hpp"

struct cc_problem {
    covercheck::ProblemFile file;
};

namespace {

thread_local std::string t_last_error;

template <class Fn>
cc_status guarded(Fn&& fn) {
    using namespace covercheck;
    try {
        fn();
        t_last_error.clear();
        return CC_OK;
    } catch (const InputError& e) {
        t_last_error = e.what();
        return CC_INPUT_ERROR;
    } catch (const LimitError& e) {
        t_last_error = e.what();
        return CC_LIMIT;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return CC_INTERNAL;
    } catch (...) {
        t_last_error = "unknown failure";
        return CC_INTERNAL;
    }
}

char* copy_out(const std::string& s) {
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

}  // namespace

extern "C" {

void cc_options_init(cc_options* opts) {
    if (!opts) return;
    opts->command = nullptr;
    opts->json = 0;
    opts->point = nullptr;
    opts->assume_reduced = 0;
    opts->timeout_seconds = 0;
    opts->order = nullptr;
}

cc_status cc_problem_parse(const char* text, cc_problem** out) {
    if (!text || !out) {
        t_last_error = "cc_problem_parse: null argument";
        return CC_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded([&] {
        auto* p = new cc_problem{covercheck::parse_problem(text)};
        *out = p;
    });
}

void cc_problem_release(cc_problem* problem) { delete problem; }

cc_status cc_run(const cc_problem* problem, const cc_options* opts,
                 char** report_out) {
    if (!problem || !opts || !report_out) {
        t_last_error = "cc_run: null argument";
        return CC_INPUT_ERROR;
    }
    if (!opts->command || !*opts->command) {
        t_last_error = "cc_run: options.command is required";
        return CC_INPUT_ERROR;
    }
    *report_out = nullptr;
    return guarded([&] {
        covercheck::RunOptions ro;
        ro.command = opts->command;
        ro.json = opts->json != 0;
        ro.point_name = opts->point ? opts->point : "";
        ro.assume_reduced = opts->assume_reduced != 0;
        ro.timeout_seconds = opts->timeout_seconds;
        ro.order_override = opts->order ? opts->order : "";
        *report_out = copy_out(covercheck::run_parsed(problem->file, ro));
    });
}

void cc_string_release(char* s) { delete[] s; }

const char* cc_last_error(void) { return t_last_error.c_str(); }

const char* cc_version(void) { return "0.1.0"; }

}  // extern "C"
