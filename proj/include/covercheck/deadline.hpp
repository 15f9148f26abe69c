#pragma once

namespace covercheck {

// Cooperative per-thread deadline. Long-running loops call check(); when the
// deadline has passed they unwind with a LimitError.
namespace deadline {

void set_seconds(long seconds);  // <= 0 clears
void clear();
void check(const char* where);

// RAII scope used by the C API and the CLI around one command.
struct Scope {
    explicit Scope(long seconds) { set_seconds(seconds); }
    ~Scope() { clear(); }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;
};

}  // namespace deadline
}  // namespace covercheck
