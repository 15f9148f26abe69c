#include "covercheck/ideal.hpp"

#include <map>
#include <mutex>

#include "covercheck/deadline.hpp"
#include "covercheck/errors.hpp"

namespace covercheck {

struct Ideal::Cache {
    std::mutex mu;
    std::map<std::string, GroebnerBasis> by_order;
};

Ideal::Ideal(VarTablePtr table, std::vector<Polynomial> gens)
    : table_(std::move(table)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (!same_table(table_, g.table()))
            throw InputError("ideal generator over a different variable table");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(VarTablePtr table) {
    Polynomial one = Polynomial::constant(table, Rational(1));
    return Ideal(std::move(table), {std::move(one)});
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
    std::string key = order.key();
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (auto it = cache_->by_order.find(key); it != cache_->by_order.end())
            return it->second;
    }
    GroebnerBasis gb = buchberger(table_, gens_, order);
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->by_order.insert_or_assign(key, std::move(gb)).first->second;
}

bool is_trivial(const Ideal& I) { return I.canonical_groebner().is_unit_ideal(); }

bool is_zero_ideal(const Ideal& I) { return I.canonical_groebner().is_zero_ideal(); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (!same_table(I.table(), J.table()))
        throw InputError("comparing ideals over different variable tables");
    return I.canonical_groebner().polys == J.canonical_groebner().polys;
}

Ideal sum(const Ideal& I, const Ideal& J) {
    if (!same_table(I.table(), J.table()))
        throw InputError("ideal sum over different variable tables");
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.table(), std::move(gens));
}

Ideal product(const Ideal& I, const Ideal& J) {
    if (!same_table(I.table(), J.table()))
        throw InputError("ideal product over different variable tables");
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const auto& f : I.gens())
        for (const auto& g : J.gens()) gens.push_back(f * g);
    return Ideal(I.table(), std::move(gens));
}

namespace {

// Names an auxiliary variable not already in the table.
std::string fresh_name(const VarTable& table) {
    std::string name = "t_aux";
    while (table.index_of(name)) name += "_";
    return name;
}

// Embedding of `table` polynomials into the table with one fresh variable in
// front.
std::vector<int> shift_image(std::size_t n) {
    std::vector<int> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<int>(i + 1);
    return image;
}

}  // namespace

Ideal eliminate_front(const Ideal& I, std::size_t k) {
    VarTablePtr sub = I.table()->drop_front(k);
    MonomialOrder block =
        MonomialOrder::block(OrderKind::Grevlex, OrderKind::Grevlex, k);
    const GroebnerBasis& gb = I.groebner(block);
    std::vector<int> image(I.table()->size());
    for (std::size_t i = 0; i < image.size(); ++i)
        image[i] = i < k ? -1 : static_cast<int>(i - k);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.polys) {
        bool uses_front = false;
        for (std::size_t v = 0; v < k && !uses_front; ++v)
            if (g.depends_on(v)) uses_front = true;
        if (!uses_front) kept.push_back(g.map_vars(sub, image));
    }
    return Ideal(sub, std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (!same_table(I.table(), J.table()))
        throw InputError("ideal intersection over different variable tables");
    // t*I + (1-t)*J, then eliminate t.
    const VarTablePtr& table = I.table();
    VarTablePtr ext = table->prepend({fresh_name(*table)});
    std::vector<int> image = shift_image(table->size());
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(t * f.map_vars(ext, image));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * g.map_vars(ext, image));
    Ideal mixed(ext, std::move(gens));
    Ideal result = eliminate_front(mixed, 1);
    // eliminate_front returns an ideal over a freshly derived table; rebuild
    // over the original one so downstream table identity checks stay cheap.
    std::vector<int> back(table->size());
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = static_cast<int>(i);
    std::vector<Polynomial> gens_back;
    for (const auto& g : result.gens()) gens_back.push_back(g.map_vars(table, back));
    return Ideal(table, std::move(gens_back));
}

Ideal quotient(const Ideal& I, const Polynomial& g) {
    if (!same_table(I.table(), g.table()))
        throw InputError("ideal quotient over different variable tables");
    if (g.is_zero()) return Ideal::unit(I.table());
    Ideal cap = intersect(I, Ideal(I.table(), {g}));
    // Every generator of I cap (g) is divisible by g; the cofactors generate
    // (I : g).
    MonomialOrder ord = Ideal::canonical_order();
    std::vector<Polynomial> gens;
    for (const auto& f : cap.gens()) {
        ReductionResult r = reduce(f, {g}, ord);
        if (!r.remainder.is_zero())
            throw std::logic_error("intersection element not divisible in ideal quotient");
        gens.push_back(r.quotients[0]);
    }
    return Ideal(I.table(), std::move(gens));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    if (!same_table(I.table(), J.table()))
        throw InputError("ideal quotient over different variable tables");
    if (J.gens().empty()) return Ideal::unit(I.table());
    bool first = true;
    Ideal acc = Ideal::zero(I.table());
    for (const auto& g : J.gens()) {
        Ideal q = quotient(I, g);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    Ideal current = I;
    for (;;) {
        deadline::check("ideal saturation");
        Ideal next = quotient(current, J);
        if (ideal_equal(next, current)) return current;
        current = next;
    }
}

}  // namespace covercheck
