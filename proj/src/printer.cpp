#include "covercheck/printer.hpp"

#include <algorithm>

namespace covercheck {

std::string print_monomial(const Monomial& m, const VarTable& table) {
    std::string out;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
        int k = m.degree_in(v);
        if (k == 0) continue;
        if (!out.empty()) out += "*";
        out += table.name(v);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "1" : out;
}

namespace {

std::string print_integral_terms(const std::vector<Term>& terms, const VarTable& table) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Term& t = terms[i];
        Rational mag = abs(t.coef);
        if (i == 0) {
            if (sign_of(t.coef) < 0) out += "-";
        } else {
            out += sign_of(t.coef) < 0 ? " - " : " + ";
        }
        std::string mono = print_monomial(t.mono, table);
        if (mono == "1") {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

}  // namespace

std::string print_poly(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return "0";
    std::vector<Term> terms = f.terms();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    bool integral = std::all_of(terms.begin(), terms.end(),
                                [](const Term& t) { return t.coef.get_den() == 1; });
    if (integral) return print_integral_terms(terms, *f.table());
    Rational scalar = content(f);
    if (sign_of(terms[0].coef) < 0) scalar = -scalar;
    std::vector<Term> cleared = terms;
    for (auto& t : cleared) t.coef /= scalar;
    return to_string(scalar) + " * (" + print_integral_terms(cleared, *f.table()) + ")";
}

std::string print_poly(const Polynomial& f) {
    const VarTable& table = *f.table();
    return print_poly(f, MonomialOrder::block(OrderKind::Grevlex, OrderKind::Grevlex,
                                              table.split()));
}

}  // namespace covercheck
