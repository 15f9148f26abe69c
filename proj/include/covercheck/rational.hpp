#pragma once

#include <gmpxx.h>

#include <string>

namespace covercheck {

using Rational = mpq_class;

// den must be nonzero; result is canonicalized.
Rational rational_of(long num, long den = 1);

// Accepts "a" and "a/b" with optional leading '-'. Throws InputError on
// malformed text or zero denominator.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace covercheck
