#pragma once

#include <stdexcept>
#include <string>

namespace covercheck {

// Bad user input: malformed problem files, mismatched tables, points off the
// base variety, violated preconditions. Maps to exit code 1 in the CLI.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Resource limit reached (timeout, search budget exhausted). Maps to exit
// code 2 in the CLI.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace covercheck
