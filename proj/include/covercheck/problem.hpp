#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covercheck/polynomial.hpp"

namespace covercheck {

// Parsed problem file: fiber/base variable split, optional per-block orders,
// ideal generators, named rational base points, optional radical presentation.
struct ProblemFile {
    VarTablePtr table;
    OrderKind fiber_order = OrderKind::Grevlex;
    OrderKind base_order = OrderKind::Grevlex;
    std::vector<Polynomial> ideal_gens;
    std::vector<std::pair<std::string, std::vector<Rational>>> points;
    std::optional<std::vector<Polynomial>> radical_gens;
    std::string source_text;

    const std::vector<Rational>* find_point(const std::string& name) const;
};

// Throws InputError with line/column positions on malformed input.
ProblemFile parse_problem(const std::string& text);

// Expression grammar over a fixed table: + - * ^ ( ), integer and a/b
// rational literals, explicit '*' between factors.
Polynomial parse_polynomial(const std::string& text, const VarTablePtr& table);

}  // namespace covercheck
