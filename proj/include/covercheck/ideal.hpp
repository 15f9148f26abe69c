#pragma once

#include <memory>
#include <vector>

#include "covercheck/groebner.hpp"

namespace covercheck {

// Ideal given by generators, with a shared cache of Groebner bases keyed by
// order. Copies share the cache; insertion of identical values is
// last-write-wins, so concurrent readers are safe.
class Ideal {
public:
    Ideal(VarTablePtr table, std::vector<Polynomial> gens);
    static Ideal zero(VarTablePtr table) { return Ideal(std::move(table), {}); }
    static Ideal unit(VarTablePtr table);

    const VarTablePtr& table() const { return table_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    const GroebnerBasis& groebner(const MonomialOrder& order) const;
    // Grevlex over the whole table; reduced bases under it decide equality.
    static MonomialOrder canonical_order() { return MonomialOrder::grevlex(); }
    const GroebnerBasis& canonical_groebner() const { return groebner(canonical_order()); }

    bool contains(const Polynomial& f) const { return member(f, canonical_groebner()); }

private:
    VarTablePtr table_;
    std::vector<Polynomial> gens_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

bool is_trivial(const Ideal& I);
bool is_zero_ideal(const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);
// (I : g); colon by zero gives the unit ideal.
Ideal quotient(const Ideal& I, const Polynomial& g);
// (I : J) as the intersection of the single-divisor quotients.
Ideal quotient(const Ideal& I, const Ideal& J);
// (I : J^infinity) by iterating quotient until the ideal stabilizes.
Ideal saturate(const Ideal& I, const Ideal& J);

// Contraction to the subring dropping the first k variables, computed with a
// block order eliminating those variables. Result lives over table->drop_front(k).
Ideal eliminate_front(const Ideal& I, std::size_t k);

}  // namespace covercheck
