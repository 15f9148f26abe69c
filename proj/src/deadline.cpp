#include "covercheck/deadline.hpp"

#include <chrono>
#include <optional>
#include <string>

#include "covercheck/errors.hpp"

namespace covercheck::deadline {

namespace {
using Clock = std::chrono::steady_clock;
thread_local std::optional<Clock::time_point> g_deadline;
}  // namespace

void set_seconds(long seconds) {
    if (seconds <= 0) {
        g_deadline.reset();
        return;
    }
    g_deadline = Clock::now() + std::chrono::seconds(seconds);
}

void clear() { g_deadline.reset(); }

void check(const char* where) {
    if (g_deadline && Clock::now() > *g_deadline)
        throw LimitError(std::string("timeout in ") + where);
}

}  // namespace covercheck::deadline
