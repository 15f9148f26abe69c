#include "covercheck/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "covercheck/deadline.hpp"
#include "covercheck/errors.hpp"

namespace covercheck {

namespace {

// Term vector sorted descending under the active order; the working
// representation inside division and Buchberger.
using Ord = std::vector<Term>;

Ord to_ord(const Polynomial& p, const MonomialOrder& o) {
    Ord t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return o.greater(a.mono, b.mono); });
    return t;
}

Polynomial from_ord(const VarTablePtr& table, Ord t) {
    return Polynomial::from_terms(table, std::move(t));
}

// a[pos..] + c * x^m * b, freshly allocated.
Ord add_scaled(const Ord& a, std::size_t pos, const Rational& c, const Monomial& m,
               const Ord& b, const MonomialOrder& o) {
    Ord r;
    r.reserve(a.size() - pos + b.size());
    std::size_t i = pos, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i == a.size()) {
            Rational s = c * b[j].coef;
            if (s != 0) r.push_back({b[j].mono * m, std::move(s)});
            ++j;
            continue;
        }
        if (j == b.size()) {
            r.push_back(a[i++]);
            continue;
        }
        Monomial mj = b[j].mono * m;
        int cv = o.cmp(a[i].mono, mj);
        if (cv > 0) {
            r.push_back(a[i++]);
        } else if (cv < 0) {
            Rational s = c * b[j].coef;
            if (s != 0) r.push_back({std::move(mj), std::move(s)});
            ++j;
        } else {
            Rational s = a[i].coef + c * b[j].coef;
            if (s != 0) r.push_back({a[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    return r;
}

Ord scale_shift(const Ord& p, const Rational& c, const Monomial& m) {
    Ord r;
    r.reserve(p.size());
    for (const auto& t : p) r.push_back({t.mono * m, t.coef * c});
    return r;
}

// Scales to integer coefficients, content 1, positive head coefficient.
void make_primitive(Ord& p) {
    if (p.empty()) return;
    mpz_class num = 0, den = 1;
    for (const auto& t : p) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
    Rational c(num, den);
    c.canonicalize();
    if (sign_of(p[0].coef) < 0) c = -c;
    Rational inv = 1 / c;
    for (auto& t : p) t.coef *= inv;
}

struct Reducers {
    const std::vector<Ord>* polys;
    // Returns the first basis index (in basis order) whose head divides m.
    std::optional<std::size_t> find(const Monomial& m) const {
        for (std::size_t k = 0; k < polys->size(); ++k) {
            const Ord& g = (*polys)[k];
            if (!g.empty() && g[0].mono.divides(m)) return k;
        }
        return std::nullopt;
    }
};

Ord nf_ord(Ord f, const Reducers& basis, const MonomialOrder& o) {
    Ord rem;
    std::size_t pos = 0;
    while (pos < f.size()) {
        deadline::check("polynomial reduction");
        const Term& lt = f[pos];
        if (auto k = basis.find(lt.mono)) {
            const Ord& g = (*basis.polys)[*k];
            Rational c = -lt.coef / g[0].coef;
            Monomial m = lt.mono.divide(g[0].mono);
            f = add_scaled(f, pos, c, m, g, o);
            pos = 0;
        } else {
            rem.push_back(lt);
            ++pos;
        }
    }
    return rem;  // heads were strictly decreasing, so rem is sorted
}

}  // namespace

ReductionResult reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    const VarTablePtr& table = f.table();
    for (const auto& g : basis)
        if (!same_table(table, g.table()))
            throw InputError("reduction basis over a different variable table");
    std::vector<Ord> gs;
    gs.reserve(basis.size());
    for (const auto& g : basis) gs.push_back(to_ord(g, order));
    std::vector<Ord> quots(basis.size());

    Ord work = to_ord(f, order);
    Ord rem;
    std::size_t pos = 0;
    while (pos < work.size()) {
        deadline::check("polynomial reduction");
        const Term& lt = work[pos];
        bool hit = false;
        for (std::size_t k = 0; k < gs.size(); ++k) {
            if (gs[k].empty() || !gs[k][0].mono.divides(lt.mono)) continue;
            Rational c = lt.coef / gs[k][0].coef;
            Monomial m = lt.mono.divide(gs[k][0].mono);
            quots[k].push_back({std::move(m), c});
            work = add_scaled(work, pos, -c, quots[k].back().mono, gs[k], order);
            pos = 0;
            hit = true;
            break;
        }
        if (!hit) {
            rem.push_back(lt);
            ++pos;
        }
    }
    ReductionResult out{.quotients = {}, .remainder = from_ord(table, std::move(rem))};
    out.quotients.reserve(basis.size());
    for (auto& q : quots) out.quotients.push_back(from_ord(table, std::move(q)));
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    const VarTablePtr& table = f.table();
    for (const auto& g : basis)
        if (!same_table(table, g.table()))
            throw InputError("reduction basis over a different variable table");
    std::vector<Ord> gs;
    gs.reserve(basis.size());
    for (const auto& g : basis) gs.push_back(to_ord(g, order));
    Reducers red{&gs};
    return from_ord(table, nf_ord(to_ord(f, order), red, order));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.polys, gb.order);
}

bool member(const Polynomial& f, const GroebnerBasis& gb) {
    if (!same_table(f.table(), gb.table))
        throw InputError("membership query over a different variable table");
    return normal_form(f, gb).is_zero();
}

GroebnerBasis buchberger(const VarTablePtr& table, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order) {
    std::vector<Ord> G;
    for (const auto& g : gens) {
        if (!same_table(table, g.table()))
            throw InputError("generator over a different variable table");
        if (g.is_zero()) continue;
        Ord og = to_ord(g, order);
        make_primitive(og);
        G.push_back(std::move(og));
    }

    // Pair queue keyed by (lcm total degree, i, j); `pending` mirrors it for
    // the chain criterion, which may only fire against treated pairs.
    std::set<std::tuple<int, std::size_t, std::size_t>> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pairs = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            int d = Monomial::lcm(G[i][0].mono, G[t][0].mono).total_degree();
            queue.insert({d, i, t});
            pending.insert({i, t});
        }
    };
    for (std::size_t t = 1; t < G.size(); ++t) push_pairs(t);

    Reducers red{&G};
    while (!queue.empty()) {
        deadline::check("Groebner basis computation");
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});

        const Monomial &mi = G[i][0].mono, &mj = G[j][0].mono;
        if (mi.coprime(mj)) continue;
        Monomial l = Monomial::lcm(mi, mj);
        bool chained = false;
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == i || k == j || !G[k][0].mono.divides(l)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            };
            chained = !pending.count(key(i, k)) && !pending.count(key(j, k));
        }
        if (chained) continue;

        Ord s = add_scaled(scale_shift(G[i], 1 / G[i][0].coef, l.divide(mi)), 0,
                           Rational(-1) / G[j][0].coef, l.divide(mj), G[j], order);
        Ord h = nf_ord(std::move(s), red, order);
        if (h.empty()) continue;
        make_primitive(h);
        G.push_back(std::move(h));
        push_pairs(G.size() - 1);
    }

    // Minimize: scan by ascending head; keep an element only when no kept
    // head divides its head.
    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order.cmp(G[a][0].mono, G[b][0].mono);
        return c != 0 ? c < 0 : a < b;
    });
    std::vector<Ord> kept;
    for (std::size_t id : idx) {
        bool redundant = false;
        for (const auto& h : kept)
            if (h[0].mono.divides(G[id][0].mono)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(G[id]);
    }

    // Tail-reduce each element against the others, then make monic.
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<Ord> others;
        others.reserve(kept.size() - 1);
        for (std::size_t t = 0; t < kept.size(); ++t)
            if (t != k) others.push_back(kept[t]);
        Reducers ored{&others};
        kept[k] = nf_ord(std::move(kept[k]), ored, order);
        Rational inv = 1 / kept[k][0].coef;
        for (auto& t : kept[k]) t.coef *= inv;
    }
    std::sort(kept.begin(), kept.end(),
              [&](const Ord& a, const Ord& b) { return order.greater(a[0].mono, b[0].mono); });

    GroebnerBasis out{table, order, {}};
    out.polys.reserve(kept.size());
    for (auto& p : kept) out.polys.push_back(from_ord(table, std::move(p)));
    return out;
}

}  // namespace covercheck
