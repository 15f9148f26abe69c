#include "covercheck/morphism.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "covercheck/deadline.hpp"
#include "covercheck/errors.hpp"
#include "covercheck/univar.hpp"

namespace covercheck {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Covering: return "COVERING";
        case Verdict::CriterionFails: return "CRITERION_FAILS";
        case Verdict::InconclusiveNeedsRadical: return "INCONCLUSIVE_NEEDS_RADICAL";
        case Verdict::NotFinite: return "NOT_FINITE";
    }
    return "?";
}

namespace {

bool base_only_poly(const Polynomial& f, std::size_t split) {
    for (std::size_t v = 0; v < split; ++v)
        if (f.depends_on(v)) return false;
    return true;
}

std::vector<Polynomial> split_gb(const GroebnerBasis& gb, std::size_t split, bool base_part) {
    std::vector<Polynomial> out;
    for (const auto& g : gb.polys)
        if (base_only_poly(g, split) == base_part) out.push_back(g);
    return out;
}

}  // namespace

MorphismPresentation::MorphismPresentation(VarTablePtr table, std::vector<Polynomial> gens,
                                           OrderKind fiber_order, OrderKind base_order)
    : table_(std::move(table)),
      base_table_(table_->base_only()),
      fiber_table_(table_->fiber_only()),
      fiber_kind_(fiber_order),
      base_kind_(base_order),
      order_(MonomialOrder::block(fiber_order, base_order, table_->split())),
      ideal_(table_, std::move(gens)),
      gb_(ideal_.groebner(order_)),
      gx_(split_gb(gb_, table_->split(), false)),
      gy_(split_gb(gb_, table_->split(), true)),
      base_ideal_(base_table_, {}) {
    std::vector<Polynomial> jg;
    jg.reserve(gy_.size());
    for (const auto& g : gy_) jg.push_back(to_base(g));
    base_ideal_ = Ideal(base_table_, std::move(jg));
}

Polynomial MorphismPresentation::to_base(const Polynomial& f) const {
    std::vector<int> image(table_->size());
    std::size_t split = table_->split();
    for (std::size_t v = 0; v < image.size(); ++v)
        image[v] = v < split ? -1 : static_cast<int>(v - split);
    return f.map_vars(base_table_, image);
}

Polynomial MorphismPresentation::from_base(const Polynomial& f) const {
    std::vector<int> image(base_table_->size());
    std::size_t split = table_->split();
    for (std::size_t v = 0; v < image.size(); ++v)
        image[v] = static_cast<int>(v + split);
    return f.map_vars(table_, image);
}

FiniteCertificate MorphismPresentation::is_finite() const {
    FiniteCertificate cert;
    std::size_t n = table_->split();
    std::vector<std::optional<FiniteWitness>> found(n);
    for (std::size_t k = 0; k < gb_.polys.size(); ++k) {
        const Monomial& lm = gb_.leading_monomial(k);
        if (lm.is_one()) {
            // Unit ideal: the zero ring is finite with every t_i = 0.
            for (std::size_t i = 0; i < n; ++i) found[i] = FiniteWitness{i, 0, k};
            break;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (lm.pure_power_of(i) && !found[i])
                found[i] = FiniteWitness{i, lm.degree_in(i), k};
    }
    cert.finite = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (found[i]) {
            cert.witnesses.push_back(*found[i]);
        } else {
            cert.finite = false;
            cert.missing.push_back(i);
        }
    }
    return cert;
}

Ideal MorphismPresentation::non_finite_locus() const {
    std::size_t n = table_->split();
    MonomialOrder fiber_ord = MonomialOrder::plain(fiber_kind_);

    // Leading fiber-part and its base-ring coefficient for one element.
    auto lead_fiber = [&](const Polynomial& g) {
        std::optional<Monomial> best;
        for (const auto& t : g.terms()) {
            std::vector<int> xe(n);
            for (std::size_t v = 0; v < n; ++v) xe[v] = t.mono.degree_in(v);
            Monomial xm{std::move(xe)};
            if (!best || fiber_ord.greater(xm, *best)) best = std::move(xm);
        }
        Polynomial lc(table_);
        for (const auto& t : g.terms()) {
            bool match = true;
            for (std::size_t v = 0; v < n && match; ++v)
                match = t.mono.degree_in(v) == (*best)[v];
            if (!match) continue;
            std::vector<int> ye = t.mono.exponents();
            for (std::size_t v = 0; v < n; ++v) ye[v] = 0;
            lc += Polynomial::term(table_, Monomial(std::move(ye)), t.coef);
        }
        return std::make_pair(*best, lc);
    };

    Ideal locus = Ideal::unit(base_table_);
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Polynomial> gens;
        for (const auto& g : gy_) gens.push_back(to_base(g));
        for (const auto& g : gx_) {
            auto [xm, lc] = lead_fiber(g);
            if (xm.pure_power_of(i)) gens.push_back(to_base(lc));
        }
        Ideal ji(base_table_, std::move(gens));
        locus = first ? ji : product(locus, ji);
        first = false;
    }
    return locus;
}

namespace {

std::vector<int> head_powers(const FiniteCertificate& cert, std::size_t n) {
    std::vector<int> t(n, 0);
    for (const auto& w : cert.witnesses) t[w.var] = w.power;
    return t;
}

// Exponent boxes below t, first variable fastest.
std::vector<Monomial> box_monomials(const std::vector<int>& t) {
    std::vector<Monomial> out;
    std::size_t n = t.size();
    std::vector<int> a(n, 0);
    for (;;) {
        out.push_back(Monomial(a));
        std::size_t i = 0;
        while (i < n) {
            if (++a[i] < t[i]) break;
            a[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

}  // namespace

std::vector<Monomial> MorphismPresentation::monomial_basis() const {
    FiniteCertificate cert = is_finite();
    if (!cert.finite) throw InputError("morphism is not finite");
    std::vector<int> t = head_powers(cert, table_->split());
    for (int ti : t)
        if (ti == 0) return {};  // unit ideal: the zero module
    return box_monomials(t);
}

Presentation MorphismPresentation::presentation_matrix() const {
    FiniteCertificate cert = is_finite();
    if (!cert.finite) throw InputError("morphism is not finite");
    std::size_t n = table_->split();
    std::vector<int> t = head_powers(cert, n);
    std::vector<Monomial> basis = monomial_basis();

    std::map<Monomial, std::size_t> basis_index;
    for (std::size_t i = 0; i < basis.size(); ++i) basis_index[basis[i]] = i;

    std::vector<Polynomial> relations;
    for (const auto& g : gx_) {
        std::vector<int> gdeg(n);
        for (std::size_t v = 0; v < n; ++v) gdeg[v] = std::max(g.degree_in(v), 0);
        for (const auto& alpha : basis) {
            bool fits = true;
            for (std::size_t v = 0; v < n && fits; ++v)
                fits = gdeg[v] + alpha.degree_in(v) <= t[v] - 1;
            if (!fits) continue;
            std::vector<int> full(table_->size(), 0);
            for (std::size_t v = 0; v < n; ++v) full[v] = alpha.degree_in(v);
            relations.push_back(g * Polynomial::term(table_, Monomial(std::move(full)),
                                                     Rational(1)));
        }
    }

    const GroebnerBasis& jgb = base_ideal_.groebner(MonomialOrder::plain(base_kind_));
    PolyMatrix mat(base_table_, basis.size(), relations.size());
    for (std::size_t j = 0; j < relations.size(); ++j) {
        // Group the relation's terms by fiber part; every fiber part stays
        // inside the basis box by the degree bounds above.
        std::map<std::size_t, Polynomial> column;
        for (const auto& term : relations[j].terms()) {
            std::vector<int> xe(n);
            for (std::size_t v = 0; v < n; ++v) xe[v] = term.mono.degree_in(v);
            auto it = basis_index.find(Monomial(std::move(xe)));
            if (it == basis_index.end())
                throw std::logic_error("relation term escapes the monomial basis box");
            std::vector<int> ye = term.mono.exponents();
            for (std::size_t v = 0; v < n; ++v) ye[v] = 0;
            auto slot = column.try_emplace(it->second, Polynomial(table_)).first;
            slot->second += Polynomial::term(table_, Monomial(std::move(ye)), term.coef);
        }
        for (auto& [i, entry] : column)
            mat.at(i, j) = normal_form(to_base(entry), jgb);
    }
    return Presentation{std::move(basis), std::move(relations), std::move(mat)};
}

std::pair<bool, Ideal> MorphismPresentation::is_finite_flat() const {
    Presentation pres = presentation_matrix();
    std::size_t r = pres.basis.size();
    if (r == 0)  // the zero module is free
        return {true, Ideal::unit(base_table_)};
    Ideal f_prev = fitting_ideal(pres.matrix, base_ideal_, r, 0);
    Ideal acc = Ideal::zero(base_table_);
    for (std::size_t i = 1; i <= r; ++i) {
        deadline::check("flatness test");
        Ideal f_i = fitting_ideal(pres.matrix, base_ideal_, r, i);
        acc = sum(acc, intersect(quotient(base_ideal_, f_prev), f_i));
        f_prev = f_i;
    }
    return {is_trivial(acc), acc};
}

Ideal MorphismPresentation::non_flat_locus() const { return is_finite_flat().second; }

Ideal MorphismPresentation::jacobian_ideal() const {
    std::size_t n = table_->split();
    PolyMatrix jac(table_, n, gx_.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < gx_.size(); ++j) jac.at(i, j) = gx_[j].derivative(i);
    std::vector<Polynomial> gens = minors(jac, n);
    for (const auto& g : ideal_.gens()) gens.push_back(g);
    return Ideal(table_, std::move(gens));
}

bool MorphismPresentation::is_etale() const {
    if (!is_finite_flat().first) return false;
    return is_trivial(jacobian_ideal());
}

Ideal MorphismPresentation::non_etale_locus() const {
    if (!is_finite().finite) throw InputError("morphism is not finite");
    Ideal contracted = eliminate_front(jacobian_ideal(), table_->split());
    std::vector<int> image(base_table_->size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<int>(i);
    std::vector<Polynomial> gens;
    for (const auto& g : contracted.gens()) gens.push_back(g.map_vars(base_table_, image));
    return Ideal(base_table_, std::move(gens));
}

namespace {

struct FiberAlgebra {
    VarTablePtr table;  // fiber table
    GroebnerBasis gb;
    std::vector<Monomial> basis;
    std::map<Monomial, std::vector<Rational>> nf_cache;

    std::vector<Rational> coords(const Polynomial& nf) {
        std::vector<Rational> c(basis.size(), Rational(0));
        for (const auto& t : nf.terms()) {
            auto it = std::find(basis.begin(), basis.end(), t.mono);
            if (it == basis.end())
                throw std::logic_error("normal form leaves the standard monomial basis");
            c[static_cast<std::size_t>(it - basis.begin())] = t.coef;
        }
        return c;
    }

    const std::vector<Rational>& nf_monomial(const Monomial& m) {
        auto it = nf_cache.find(m);
        if (it != nf_cache.end()) return it->second;
        Polynomial nf = normal_form(Polynomial::term(table, m, Rational(1)), gb);
        return nf_cache.emplace(m, coords(nf)).first->second;
    }
};

}  // namespace

FiberReport MorphismPresentation::fiber_report(const std::vector<Rational>& base_point) const {
    std::size_t n = table_->split(), m = table_->size() - n;
    if (base_point.size() != m)
        throw InputError("fiber point must give one value per base variable");
    std::map<std::size_t, Rational> assign;
    for (std::size_t k = 0; k < m; ++k) assign[n + k] = base_point[k];

    for (const auto& g : gy_)
        if (!g.specialize(assign).is_zero())
            throw InputError("point is not on the base variety");

    // The specialized ideal, over the fiber table.
    std::vector<int> to_fiber(table_->size());
    for (std::size_t v = 0; v < table_->size(); ++v)
        to_fiber[v] = v < n ? static_cast<int>(v) : -1;
    std::vector<Polynomial> fiber_gens;
    for (const auto& g : gb_.polys) {
        Polynomial s = g.specialize(assign);
        if (!s.is_zero()) fiber_gens.push_back(s.map_vars(fiber_table_, to_fiber));
    }
    Ideal fiber_ideal(fiber_table_, std::move(fiber_gens));
    const GroebnerBasis& fgb = fiber_ideal.groebner(MonomialOrder::grevlex());

    FiberReport report;
    report.point = base_point;
    if (fgb.is_unit_ideal()) return report;  // empty fiber

    std::vector<int> t(n, -1);
    for (std::size_t k = 0; k < fgb.polys.size(); ++k) {
        const Monomial& lm = fgb.leading_monomial(k);
        for (std::size_t i = 0; i < n; ++i)
            if (lm.pure_power_of(i)) t[i] = lm.degree_in(i);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (t[i] < 0)
            throw InputError("fiber over the point is not finite (variable '" +
                             table_->name(i) + "' is unbounded)");

    FiberAlgebra alg{fiber_table_, fgb, {}, {}};
    for (const auto& mono : box_monomials(t)) {
        bool standard = true;
        for (std::size_t k = 0; k < fgb.polys.size() && standard; ++k)
            standard = !fgb.leading_monomial(k).divides(mono);
        if (standard) alg.basis.push_back(mono);
    }
    std::size_t r = alg.basis.size();
    report.length = r;
    if (r == 0) return report;  // cannot happen after the unit check, defensive

    // Multiplication matrices for each fiber variable.
    std::vector<RationalMatrix> mult;
    for (std::size_t i = 0; i < n; ++i) {
        RationalMatrix mi(r, r);
        for (std::size_t k = 0; k < r; ++k) {
            Monomial xim = Monomial::var(n, i) * alg.basis[k];
            const auto& col = alg.nf_monomial(xim);
            for (std::size_t row = 0; row < r; ++row) mi.at(row, k) = col[row];
        }
        mult.push_back(std::move(mi));
    }

    // Hermite trace form certifies the number of distinct geometric points.
    std::vector<Rational> trace_vec(r, Rational(0));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
            const auto& c = alg.nf_monomial(alg.basis[j] * alg.basis[k]);
            trace_vec[j] += c[k];
        }
    }
    RationalMatrix hermite(r, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = j; k < r; ++k) {
            const auto& c = alg.nf_monomial(alg.basis[j] * alg.basis[k]);
            Rational tr = 0;
            for (std::size_t w = 0; w < r; ++w) tr += c[w] * trace_vec[w];
            hermite.at(j, k) = tr;
            hermite.at(k, j) = tr;
        }
    std::size_t n_pts = rank(hermite);

    // Candidate separating forms: a fixed ladder, then seeded random small
    // integer combinations.
    std::vector<std::vector<long>> ladder;
    {
        std::vector<long> u(n, 0);
        u[n - 1] = 1;
        ladder.push_back(u);
        std::fill(u.begin(), u.end(), 0);
        u[0] = 1;
        ladder.push_back(u);
        for (std::size_t i = 0; i < n; ++i) u[i] = static_cast<long>(i + 1);
        ladder.push_back(u);
        std::mt19937_64 rng(0x636f766572ULL);  // fixed seed: deterministic reports
        while (ladder.size() < 32) {
            for (std::size_t i = 0; i < n; ++i)
                u[i] = static_cast<long>(rng() % 19) - 9;
            ladder.push_back(u);
        }
    }

    static const VarTablePtr lambda_table = VarTable::make({"lambda"}, 0);
    std::set<std::vector<long>> tried;
    for (const auto& u : ladder) {
        deadline::check("separating form search");
        if (std::all_of(u.begin(), u.end(), [](long c) { return c == 0; })) continue;
        if (!tried.insert(u).second) continue;
        RationalMatrix l(r, r);
        for (std::size_t i = 0; i < n; ++i)
            if (u[i] != 0) l = l + mult[i].scaled(Rational(u[i]));
        std::vector<Rational> chi = charpoly(l);
        Polynomial chi_poly = from_dense(lambda_table, 0, chi);
        Polynomial chi_der = chi_poly.derivative(0);

        std::size_t distinct;
        if (r == 1) {
            distinct = 1;
        } else {
            SubresultantSequence chain = subresultants(chi_poly, chi_der, 0);
            int j = 0;
            while (j <= chain.q && chain.principal[static_cast<std::size_t>(j)].is_zero())
                ++j;
            distinct = static_cast<std::size_t>(static_cast<int>(r) - j);
        }
        if (distinct != n_pts) continue;

        Polynomial omega =
            r == 1 ? chi_poly : squarefree_part(chi_poly, 0);
        report.distinct = distinct;
        report.real_points = static_cast<std::size_t>(sturm_count(omega, 0));
        Polynomial form(fiber_table_);
        for (std::size_t i = 0; i < n; ++i)
            if (u[i] != 0)
                form += Polynomial::variable(fiber_table_, i) * Rational(u[i]);
        report.separating_form = std::move(form);
        return report;
    }
    throw LimitError("no separating form found within the candidate budget");
}

CoveringVerdict MorphismPresentation::covering_verdict(
    bool assume_reduced, const std::optional<std::vector<Polynomial>>& radical_gens) const {
    CoveringVerdict v;
    FiniteCertificate cert = is_finite();
    v.finite = cert.finite;
    if (!cert.finite) {
        v.verdict = Verdict::NotFinite;
        v.non_finite_locus = non_finite_locus();
        v.note = "no pure fiber-variable power heads the basis for: ";
        for (std::size_t i = 0; i < cert.missing.size(); ++i)
            v.note += (i ? ", " : "") + table_->name(cert.missing[i]);
        return v;
    }

    auto [flat, f_ideal] = is_finite_flat();
    bool etale = flat && is_trivial(jacobian_ideal());
    v.presentation_flat = flat;
    v.presentation_etale = etale;
    v.non_finite_locus = non_finite_locus();
    v.non_flat_locus = f_ideal;
    v.non_etale_locus = non_etale_locus();

    if (flat && etale) {
        v.flat = v.etale = true;
        v.verdict = Verdict::Covering;
        v.note = "finite flat unramified presentation; real points form a covering";
        return v;
    }
    if (assume_reduced) {
        v.flat = flat;
        v.etale = etale;
        v.verdict = Verdict::CriterionFails;
        v.note = flat ? "reduced, finite, flat but ramified: fiber cardinality jumps"
                      : "reduced, finite but not flat: fiber length jumps";
        return v;
    }
    if (radical_gens) {
        MorphismPresentation reduced(table_, *radical_gens, fiber_kind_, base_kind_);
        // The radical contains the ideal; anything else is a mixed-up input.
        for (const auto& g : ideal_.gens())
            if (!member(g, reduced.gb()))
                throw InputError(
                    "radical section does not contain the presentation ideal");
        if (!reduced.is_finite().finite)
            throw InputError("supplied radical presentation is not finite");
        auto [rflat, rf] = reduced.is_finite_flat();
        bool retale = rflat && is_trivial(reduced.jacobian_ideal());
        v.used_radical = true;
        v.flat = rflat;
        v.etale = retale;
        v.non_flat_locus = rf;
        v.non_etale_locus = reduced.non_etale_locus();
        if (rflat && retale) {
            v.verdict = Verdict::Covering;
            v.note = "radical presentation is finite flat unramified; the real "
                     "points agree with the reduction's";
        } else {
            v.verdict = Verdict::CriterionFails;
            v.note = rflat ? "radical presentation is flat but ramified"
                           : "radical presentation is not flat";
        }
        return v;
    }
    v.flat = flat;
    v.etale = etale;
    v.verdict = Verdict::InconclusiveNeedsRadical;
    v.note = "presentation may be non-reduced; supply a radical presentation "
             "or pass assume-reduced";
    return v;
}

}  // namespace covercheck
