#include "covercheck/polynomial.hpp"

#include <algorithm>

#include "covercheck/errors.hpp"

namespace covercheck {

namespace {

void check_same_table(const Polynomial& a, const Polynomial& b) {
    if (!same_table(a.table(), b.table()))
        throw InputError("polynomial operands live over different variable tables");
}

}  // namespace

Polynomial Polynomial::constant(VarTablePtr table, Rational c) {
    Polynomial p(table);
    if (c != 0) return from_terms(table, {{Monomial(table->size()), std::move(c)}});
    return p;
}

Polynomial Polynomial::variable(VarTablePtr table, std::size_t i, int power) {
    if (i >= table->size()) throw InputError("variable index out of range");
    if (power < 0) throw InputError("negative exponent");
    if (power == 0) return constant(table, 1);
    return from_terms(table, {{Monomial::var(table->size(), i, power), Rational(1)}});
}

Polynomial Polynomial::term(VarTablePtr table, Monomial m, Rational c) {
    if (m.nvars() != table->size()) throw InputError("monomial arity mismatch");
    return from_terms(table, {{std::move(m), std::move(c)}});
}

Polynomial Polynomial::from_terms(VarTablePtr table, std::vector<Term> terms) {
    std::map<Monomial, Rational> acc;
    for (auto& t : terms) {
        if (t.mono.nvars() != table->size()) throw InputError("monomial arity mismatch");
        acc[t.mono] += t.coef;
    }
    Polynomial p(std::move(table));
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) p.terms_.push_back({it->first, it->second});
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

int Polynomial::degree_in(std::size_t v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
    return terms_.empty() ? -1 : d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    // Terms are sorted descending; binary search by the structural order.
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return Rational(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    return add_scaled(Rational(1), Monomial(table_->size()), o);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return add_scaled(Rational(-1), Monomial(table_->size()), o);
}

Polynomial Polynomial::add_scaled(const Rational& c, const Monomial& m,
                                  const Polynomial& o) const {
    check_same_table(*this, o);
    if (c == 0 || o.is_zero()) return *this;
    Polynomial r(table_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size()) {
            r.terms_.push_back(terms_[i++]);
            continue;
        }
        Monomial mj = o.terms_[j].mono * m;
        if (i == terms_.size() || terms_[i].mono < mj) {
            r.terms_.push_back({std::move(mj), c * o.terms_[j].coef});
            ++j;
        } else if (mj < terms_[i].mono) {
            r.terms_.push_back(terms_[i++]);
        } else {
            Rational s = terms_[i].coef + c * o.terms_[j].coef;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_table(*this, o);
    std::map<Monomial, Rational> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coef * b.coef;
    Polynomial r(table_);
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) r.terms_.push_back({it->first, it->second});
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(table_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw InputError("negative exponent");
    Polynomial r = constant(table_, 1);
    Polynomial b = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_table(table_, o.table_) && terms_ == o.terms_;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw InputError("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    const Rational& lc = leading_term(order).coef;
    return *this * (1 / lc);
}

Polynomial Polynomial::derivative(std::size_t v) const {
    if (v >= table_->size()) throw InputError("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int k = t.mono.degree_in(v);
        if (k == 0) continue;
        std::vector<int> e = t.mono.exponents();
        e[v] -= 1;
        out.push_back({Monomial(std::move(e)), t.coef * k});
    }
    return from_terms(table_, std::move(out));
}

Polynomial Polynomial::specialize(const std::map<std::size_t, Rational>& values) const {
    for (const auto& [v, q] : values)
        if (v >= table_->size()) throw InputError("specialized variable out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coef;
        std::vector<int> e = t.mono.exponents();
        for (const auto& [v, q] : values) {
            for (int k = 0; k < e[v]; ++k) c *= q;
            e[v] = 0;
        }
        if (c != 0) out.push_back({Monomial(std::move(e)), std::move(c)});
    }
    return from_terms(table_, std::move(out));
}

Polynomial Polynomial::map_vars(VarTablePtr target, const std::vector<int>& image) const {
    if (image.size() != table_->size()) throw InputError("variable image arity mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<int> e(target->size(), 0);
        for (std::size_t v = 0; v < image.size(); ++v) {
            int k = t.mono.degree_in(v);
            if (k == 0) continue;
            if (image[v] < 0)
                throw InputError("polynomial depends on variable '" + table_->name(v) +
                                 "' outside the target table");
            e[static_cast<std::size_t>(image[v])] += k;
        }
        out.push_back({Monomial(std::move(e)), t.coef});
    }
    return from_terms(std::move(target), std::move(out));
}

Rational content(const Polynomial& p) {
    if (p.is_zero()) return Rational(0);
    mpz_class num = 0, den = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
    Rational c(num, den);
    c.canonicalize();
    return c;
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    Rational c = content(p);
    if (sign_of(p.terms().front().coef) < 0) c = -c;
    return p * (1 / c);
}

}  // namespace covercheck
