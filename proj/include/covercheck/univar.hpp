#pragma once

#include <map>
#include <utility>
#include <vector>

#include "covercheck/polynomial.hpp"

namespace covercheck {

// Subresultant chain of f and g taken as univariate polynomials in one
// variable with coefficients in the remaining ones. Index j runs 0..q;
// entries for j < q come from the determinant definition (rows of the
// (p+q-2j)-square coefficient matrices, columns x^(q-j-1)f..f then
// x^(p-j-1)g..g), and the j = q entry is the conventional lc(g)^(p-q-1) * g.
// principal[j] is the x^j coefficient of polys[j]; principal[0] is the
// resultant.
struct SubresultantSequence {
    std::size_t var;
    int p, q;
    std::vector<Polynomial> principal;
    std::vector<Polynomial> polys;
};

// Pseudo-remainder chain route; requires deg_v(f) > deg_v(g) >= 0 with f, g
// nonzero in v-degree sense (g may be constant in v).
SubresultantSequence subresultants(const Polynomial& f, const Polynomial& g,
                                   std::size_t v);

// Straight from the determinant definition; the slow reference route.
SubresultantSequence subresultants_determinant(const Polynomial& f, const Polynomial& g,
                                               std::size_t v);

// Degree of gcd(f(point), g(point)) plus the gcd itself (monic in v), via the
// specialization pattern of the subresultant chain. point must cover every
// non-v variable in the support; leading coefficients must not vanish there.
std::pair<int, Polynomial> gcd_degree_at(const Polynomial& f, const Polynomial& g,
                                         std::size_t v,
                                         const std::map<std::size_t, Rational>& point);

// f univariate in v with constant coefficients, deg >= 1: the monic
// polynomial with the same roots and no repeated ones, f / gcd(f, f').
Polynomial squarefree_part(const Polynomial& f, std::size_t v);

// Number of real roots of a squarefree univariate f (constant coefficients)
// by Sturm's theorem over (-inf, +inf).
int sturm_count(const Polynomial& f, std::size_t v);

// Dense univariate representation over Q, ascending powers, no trailing
// zeros.
std::vector<Rational> to_dense(const Polynomial& f, std::size_t v);
Polynomial from_dense(const VarTablePtr& table, std::size_t v,
                      const std::vector<Rational>& coeffs);

}  // namespace covercheck
