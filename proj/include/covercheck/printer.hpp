#pragma once

#include <string>

#include "covercheck/polynomial.hpp"

namespace covercheck {

std::string print_monomial(const Monomial& m, const VarTable& table);

// Canonical form: terms in decreasing order (default: block grevlex from the
// table's split). Non-integral coefficients are cleared into one leading
// rational scalar: x/2 - 1/3 prints as "1/6 * (3*x - 2)". Output parses back
// to the same polynomial.
std::string print_poly(const Polynomial& f, const MonomialOrder& order);
std::string print_poly(const Polynomial& f);

}  // namespace covercheck
