#pragma once

#include <map>
#include <vector>

#include "covercheck/monomial.hpp"
#include "covercheck/order.hpp"
#include "covercheck/rational.hpp"
#include "covercheck/vartable.hpp"

namespace covercheck {

struct Term {
    Monomial mono;
    Rational coef;
    bool operator==(const Term&) const = default;
};

// Multivariate polynomial with exact rational coefficients over a shared
// VarTable. Terms are stored with nonzero coefficients, distinct monomials,
// sorted descending by the structural monomial order; equality is structural.
class Polynomial {
public:
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}
    static Polynomial zero(VarTablePtr table) { return Polynomial(std::move(table)); }
    static Polynomial constant(VarTablePtr table, Rational c);
    static Polynomial variable(VarTablePtr table, std::size_t i, int power = 1);
    static Polynomial term(VarTablePtr table, Monomial m, Rational c);
    static Polynomial from_terms(VarTablePtr table, std::vector<Term> terms);

    const VarTablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    bool is_one() const;
    // -1 stands in for the degree of the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t v) const;
    Rational coeff(const Monomial& m) const;
    Rational constant_coeff() const { return coeff(Monomial(table_->size())); }
    bool depends_on(std::size_t v) const { return degree_in(v) > 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    // this + c * x^m * o, the reduction workhorse.
    Polynomial add_scaled(const Rational& c, const Monomial& m, const Polynomial& o) const;
    Polynomial pow(int k) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    const Term& leading_term(const MonomialOrder& order) const;  // pre: nonzero
    Polynomial monic(const MonomialOrder& order) const;          // pre: nonzero

    Polynomial derivative(std::size_t v) const;
    // Substitutes values for the given variables; ring homomorphism onto the
    // same table.
    Polynomial specialize(const std::map<std::size_t, Rational>& values) const;
    // Reinterprets over another table; image[i] is the target index of
    // variable i, or -1 if it must not occur in the support.
    Polynomial map_vars(VarTablePtr target, const std::vector<int>& image) const;

private:
    VarTablePtr table_;
    std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// gcd of numerators over lcm of denominators; positive, content(0) = 0.
Rational content(const Polynomial& p);
// p scaled to integer coefficients with content 1 and positive coefficient on
// the structurally-largest term; primitive_part(0) = 0.
Polynomial primitive_part(const Polynomial& p);

}  // namespace covercheck
