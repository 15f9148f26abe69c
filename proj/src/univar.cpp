#include "covercheck/univar.hpp"

#include <algorithm>

#include "covercheck/errors.hpp"
#include "covercheck/groebner.hpp"
#include "covercheck/ideal.hpp"
#include "covercheck/polymat.hpp"

namespace covercheck {

namespace {

// Univariate view: coefficient polynomials by ascending power of the main
// variable, each with zero degree in it. Trailing zeros stripped.
using UPoly = std::vector<Polynomial>;

void strip(UPoly& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

UPoly to_upoly(const Polynomial& f, std::size_t v) {
    UPoly u(static_cast<std::size_t>(std::max(f.degree_in(v), 0)) + 1,
            Polynomial(f.table()));
    for (const auto& t : f.terms()) {
        int k = t.mono.degree_in(v);
        std::vector<int> e = t.mono.exponents();
        e[v] = 0;
        u[static_cast<std::size_t>(k)] +=
            Polynomial::term(f.table(), Monomial(std::move(e)), t.coef);
    }
    strip(u);
    return u;
}

Polynomial from_upoly(const UPoly& u, const VarTablePtr& table, std::size_t v) {
    Polynomial f(table);
    for (std::size_t k = 0; k < u.size(); ++k)
        f += u[k] * Polynomial::variable(table, v, static_cast<int>(k));
    return f;
}

UPoly uscale(const UPoly& u, const Polynomial& c) {
    UPoly r;
    r.reserve(u.size());
    for (const auto& a : u) r.push_back(a * c);
    strip(r);
    return r;
}

UPoly uneg(const UPoly& u) {
    UPoly r;
    r.reserve(u.size());
    for (const auto& a : u) r.push_back(-a);
    return r;
}

Polynomial divide_coeff_exact(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return f;
    ReductionResult r = reduce(f, {g}, Ideal::canonical_order());
    if (!r.remainder.is_zero())
        throw std::logic_error("inexact coefficient division in subresultant chain");
    return r.quotients[0];
}

UPoly udiv_exact(const UPoly& u, const Polynomial& c) {
    UPoly r;
    r.reserve(u.size());
    for (const auto& a : u) r.push_back(divide_coeff_exact(a, c));
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UPoly prem(UPoly a, const UPoly& b) {
    int da = udeg(a), db = udeg(b);
    if (db < 0) throw std::logic_error("pseudo-division by zero");
    if (da < db) return a;
    const Polynomial& lb = b.back();
    int steps = da - db + 1;
    while (udeg(a) >= db && !a.empty()) {
        int shift = udeg(a) - db;
        Polynomial la = a.back();
        UPoly next(std::max(a.size() - 1, b.size() - 1 + static_cast<std::size_t>(shift)),
                   Polynomial(la.table()));
        // lb * a - la * x^shift * b, head cancels.
        for (std::size_t i = 0; i + 1 < a.size(); ++i) next[i] = a[i] * lb;
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            next[i + static_cast<std::size_t>(shift)] -= la * b[i];
        strip(next);
        a = std::move(next);
        --steps;
    }
    // Pad the scaling so the total factor is exactly lc(b)^(da-db+1).
    for (; steps > 0; --steps) a = uscale(a, lb);
    return a;
}

// prem(a, -b) = (-1)^(deg a - deg b + 1) prem(a, b).
UPoly prem_neg(const UPoly& a, const UPoly& b) {
    UPoly r = prem(a, b);
    if ((udeg(a) - udeg(b) + 1) % 2 != 0) r = uneg(r);
    return r;
}

Polynomial upow(const Polynomial& base, int k) { return base.pow(k); }

struct ChainInput {
    VarTablePtr table;
    UPoly F, G;
    int p, q;
};

ChainInput chain_input(const Polynomial& f, const Polynomial& g, std::size_t v) {
    if (!same_table(f.table(), g.table()))
        throw InputError("subresultants of polynomials over different variable tables");
    if (v >= f.table()->size()) throw InputError("main variable index out of range");
    ChainInput in{f.table(), to_upoly(f, v), to_upoly(g, v), 0, 0};
    in.p = udeg(in.F);
    in.q = udeg(in.G);
    if (in.q < 0) throw InputError("subresultants require a nonzero second polynomial");
    if (in.p <= in.q)
        throw InputError("subresultants require deg f > deg g in the main variable");
    return in;
}

SubresultantSequence finish(const ChainInput& in, std::size_t v,
                            std::vector<UPoly> chain) {
    SubresultantSequence out{v, in.p, in.q, {}, {}};
    out.principal.reserve(chain.size());
    out.polys.reserve(chain.size());
    for (int j = 0; j <= in.q; ++j) {
        const UPoly& s = chain[static_cast<std::size_t>(j)];
        out.polys.push_back(from_upoly(s, in.table, v));
        out.principal.push_back(static_cast<std::size_t>(j) < s.size()
                                    ? s[static_cast<std::size_t>(j)]
                                    : Polynomial(in.table));
    }
    return out;
}

}  // namespace

SubresultantSequence subresultants(const Polynomial& f, const Polynomial& g,
                                   std::size_t v) {
    ChainInput in = chain_input(f, g, v);
    const int p = in.p, q = in.q;
    std::vector<UPoly> chain(static_cast<std::size_t>(q) + 1);
    chain[static_cast<std::size_t>(q)] = uscale(in.G, upow(in.G.back(), p - q - 1));
    Polynomial s = upow(in.G.back(), p - q);
    UPoly a = in.G;
    UPoly b = prem_neg(in.F, in.G);
    for (;;) {
        int d = udeg(a), e = udeg(b);
        if (b.empty()) break;
        chain[static_cast<std::size_t>(d - 1)] = b;
        int delta = d - e;
        UPoly c;
        if (delta > 1) {
            c = udiv_exact(uscale(b, upow(b.back(), delta - 1)), upow(s, delta - 1));
            chain[static_cast<std::size_t>(e)] = c;
        } else {
            c = b;
        }
        if (e == 0) break;
        b = udiv_exact(prem_neg(a, b), s * upow(s, delta - 1) * a.back());
        a = std::move(c);
        s = a.back();
    }
    return finish(in, v, std::move(chain));
}

SubresultantSequence subresultants_determinant(const Polynomial& f, const Polynomial& g,
                                               std::size_t v) {
    ChainInput in = chain_input(f, g, v);
    const int p = in.p, q = in.q;
    auto fc = [&](int k) {
        return (k >= 0 && k <= p) ? in.F[static_cast<std::size_t>(k)]
                                  : Polynomial(in.table);
    };
    auto gc = [&](int k) {
        return (k >= 0 && k <= q) ? in.G[static_cast<std::size_t>(k)]
                                  : Polynomial(in.table);
    };
    std::vector<UPoly> chain(static_cast<std::size_t>(q) + 1);
    chain[static_cast<std::size_t>(q)] = uscale(in.G, upow(in.G.back(), p - q - 1));
    for (int j = 0; j < q; ++j) {
        int n = p + q - 2 * j;
        // Row powers: p+q-j-1 down to j+1, then the varying power i.
        PolyMatrix mat(in.table, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        auto fill_row = [&](std::size_t row, int power) {
            for (int k = 0; k < q - j; ++k)
                mat.at(row, static_cast<std::size_t>(k)) = fc(power - (q - j - 1 - k));
            for (int k = 0; k < p - j; ++k)
                mat.at(row, static_cast<std::size_t>(q - j + k)) = gc(power - (p - j - 1 - k));
        };
        for (int r = 0; r < n - 1; ++r)
            fill_row(static_cast<std::size_t>(r), p + q - j - 1 - r);
        UPoly sp(static_cast<std::size_t>(j) + 1, Polynomial(in.table));
        for (int i = 0; i <= j; ++i) {
            fill_row(static_cast<std::size_t>(n - 1), i);
            sp[static_cast<std::size_t>(i)] = det(mat);
        }
        strip(sp);
        chain[static_cast<std::size_t>(j)] = std::move(sp);
    }
    return finish(in, v, std::move(chain));
}

std::pair<int, Polynomial> gcd_degree_at(const Polynomial& f, const Polynomial& g,
                                         std::size_t v,
                                         const std::map<std::size_t, Rational>& point) {
    if (point.count(v)) throw InputError("specialization assigns the main variable");
    SubresultantSequence chain = subresultants(f, g, v);
    auto specialized = [&](const Polynomial& h) {
        Polynomial s = h.specialize(point);
        for (std::size_t w = 0; w < s.table()->size(); ++w)
            if (w != v && s.depends_on(w))
                throw InputError("specialization leaves variable '" +
                                 s.table()->name(w) + "' free");
        return s;
    };
    Polynomial lf = to_upoly(f, v).back(), lg = to_upoly(g, v).back();
    if (specialized(lf).is_zero() || specialized(lg).is_zero())
        throw InputError("degenerate specialization: a leading coefficient vanishes");
    for (int j = 0; j <= chain.q; ++j) {
        if (specialized(chain.principal[static_cast<std::size_t>(j)]).is_zero()) continue;
        Polynomial gcd = specialized(chain.polys[static_cast<std::size_t>(j)]);
        return {j, gcd.monic(MonomialOrder::grevlex())};
    }
    throw std::logic_error("subresultant chain vanished entirely");
}

namespace {

// Dense arithmetic over Q used by the Sturm chain.
using Dense = std::vector<Rational>;

void dstrip(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense drem(Dense a, const Dense& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        dstrip(a);
        if (!a.empty() && a.size() >= b.size() && a.back() == 0) dstrip(a);
    }
    return a;
}

Dense dderiv(const Dense& a) {
    Dense r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Rational(static_cast<long>(i)));
    dstrip(r);
    return r;
}

}  // namespace

std::vector<Rational> to_dense(const Polynomial& f, std::size_t v) {
    Dense r(static_cast<std::size_t>(std::max(f.degree_in(v), 0)) + 1, Rational(0));
    for (const auto& t : f.terms()) {
        if (t.mono.total_degree() != t.mono.degree_in(v))
            throw InputError("polynomial is not univariate in the requested variable");
        r[static_cast<std::size_t>(t.mono.degree_in(v))] = t.coef;
    }
    dstrip(r);
    return r;
}

Polynomial from_dense(const VarTablePtr& table, std::size_t v,
                      const std::vector<Rational>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0)
            terms.push_back({Monomial::var(table->size(), v, static_cast<int>(k)),
                             coeffs[k]});
    return Polynomial::from_terms(table, std::move(terms));
}

Polynomial squarefree_part(const Polynomial& f, std::size_t v) {
    Dense a = to_dense(f, v);
    if (a.size() < 2) throw InputError("squarefree part needs positive degree");
    Polynomial fp = f.derivative(v);
    SubresultantSequence chain = subresultants(f, fp, v);
    for (int j = 0; j <= chain.q; ++j) {
        if (chain.principal[static_cast<std::size_t>(j)].is_zero()) continue;
        Polynomial gcd = chain.polys[static_cast<std::size_t>(j)];
        gcd = gcd.monic(MonomialOrder::grevlex());
        Polynomial w = divide_coeff_exact(f, gcd);
        return w.monic(MonomialOrder::grevlex());
    }
    throw std::logic_error("subresultant chain of (f, f') vanished entirely");
}

int sturm_count(const Polynomial& f, std::size_t v) {
    Dense a = to_dense(f, v);
    if (a.empty()) throw InputError("Sturm count of the zero polynomial");
    if (a.size() == 1) return 0;
    std::vector<Dense> chain{a, dderiv(a)};
    // Squarefree input makes the chain end in a nonzero constant.
    while (chain.back().size() > 1) {
        Dense r = drem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) throw InputError("Sturm count requires a squarefree polynomial");
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool at_minus_inf) {
        int count = 0, prev = 0;
        for (const auto& poly : chain) {
            int s = sign_of(poly.back());
            if (at_minus_inf && (poly.size() - 1) % 2 == 1) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(true) - variations(false);
}

}  // namespace covercheck
