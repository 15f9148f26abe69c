#pragma once

#include <vector>

#include "covercheck/order.hpp"
#include "covercheck/polynomial.hpp"

namespace covercheck {

// Reduced Groebner basis: monic elements, no term of any element divisible by
// another element's leading monomial, sorted by decreasing leading monomial.
// An empty basis presents the zero ideal.
struct GroebnerBasis {
    VarTablePtr table;
    MonomialOrder order;
    std::vector<Polynomial> polys;

    bool is_zero_ideal() const { return polys.empty(); }
    bool is_unit_ideal() const { return polys.size() == 1 && polys[0].is_one(); }
    const Monomial& leading_monomial(std::size_t i) const {
        return polys[i].leading_term(order).mono;
    }
    bool operator==(const GroebnerBasis&) const = default;
};

struct ReductionResult {
    std::vector<Polynomial> quotients;  // aligned with the basis
    Polynomial remainder;
};

// Multivariate division: f = sum(quotients[i] * basis[i]) + remainder, no
// remainder term divisible by any basis leading monomial. The divisor picked
// at each step is the first match in basis order; zero basis entries are
// skipped.
ReductionResult reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

// Remainder only; same divisor-selection rule as reduce().
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Buchberger with normal pair selection (minimal lcm total degree, then
// lowest indices), coprime-head and chain pruning, content-normalized
// intermediates. Output is the reduced basis.
GroebnerBasis buchberger(const VarTablePtr& table, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order);

bool member(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace covercheck
