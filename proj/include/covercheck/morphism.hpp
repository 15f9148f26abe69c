#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covercheck/ideal.hpp"
#include "covercheck/polymat.hpp"

namespace covercheck {

struct FiniteWitness {
    std::size_t var;       // fiber variable index
    int power;             // t_i with head x_i^(t_i); 0 for the unit ideal
    std::size_t gb_index;  // witnessing element of the reduced basis
};

struct FiniteCertificate {
    bool finite = false;
    std::vector<FiniteWitness> witnesses;  // one per fiber variable when finite
    std::vector<std::size_t> missing;      // fiber variables with no pure-power head
};

struct Presentation {
    std::vector<Monomial> basis;        // module generators, fiber-table monomials
    std::vector<Polynomial> relations;  // full-table elements g * x^alpha
    PolyMatrix matrix;                  // base-table entries, rows follow basis
};

struct FiberReport {
    std::vector<Rational> point;
    std::size_t length = 0;       // dim of the fiber algebra
    std::size_t distinct = 0;     // geometric points
    std::size_t real_points = 0;  // real points among them
    std::optional<Polynomial> separating_form;  // over the fiber table
};

enum class Verdict { Covering, CriterionFails, InconclusiveNeedsRadical, NotFinite };

const char* verdict_name(Verdict v);

struct CoveringVerdict {
    Verdict verdict = Verdict::NotFinite;
    bool finite = false;
    // Effective flags: the ones that justified the verdict (the radical
    // presentation's when used_radical is set).
    std::optional<bool> flat, etale;
    std::optional<bool> presentation_flat, presentation_etale;
    bool used_radical = false;
    std::optional<Ideal> non_finite_locus, non_flat_locus, non_etale_locus;
    std::string note;
};

// A morphism Spec k[x,y]/I -> Spec k[y] presented by a variable table with
// the fiber block first, generators of I, and a block term order on top of
// per-block lex/grevlex choices.
class MorphismPresentation {
public:
    MorphismPresentation(VarTablePtr table, std::vector<Polynomial> gens,
                         OrderKind fiber_order = OrderKind::Grevlex,
                         OrderKind base_order = OrderKind::Grevlex);

    const VarTablePtr& table() const { return table_; }
    const VarTablePtr& base_table() const { return base_table_; }
    const VarTablePtr& fiber_table() const { return fiber_table_; }
    const MonomialOrder& order() const { return order_; }
    OrderKind fiber_order_kind() const { return fiber_kind_; }
    OrderKind base_order_kind() const { return base_kind_; }
    const Ideal& ideal() const { return ideal_; }
    const GroebnerBasis& gb() const { return gb_; }
    const std::vector<Polynomial>& gx() const { return gx_; }  // involve fiber vars
    const std::vector<Polynomial>& gy() const { return gy_; }  // base-only elements
    const Ideal& base_ideal() const { return base_ideal_; }    // J over the base table

    FiniteCertificate is_finite() const;
    Ideal non_finite_locus() const;  // base table; unit ideal when finite

    // The remaining operations require a finite morphism and raise InputError
    // otherwise (fiber_report only needs the one fiber to be finite).
    std::vector<Monomial> monomial_basis() const;
    Presentation presentation_matrix() const;
    std::pair<bool, Ideal> is_finite_flat() const;  // (flat, F(B))
    Ideal non_flat_locus() const;
    Ideal jacobian_ideal() const;  // full table: n-minors of d(gx)/d(fiber) + I
    bool is_etale() const;         // false whenever not finite-flat
    Ideal non_etale_locus() const;

    FiberReport fiber_report(const std::vector<Rational>& base_point) const;

    CoveringVerdict covering_verdict(
        bool assume_reduced,
        const std::optional<std::vector<Polynomial>>& radical_gens) const;

    // Base-table/full-table transport helpers.
    Polynomial to_base(const Polynomial& f) const;
    Polynomial from_base(const Polynomial& f) const;

private:
    VarTablePtr table_, base_table_, fiber_table_;
    OrderKind fiber_kind_, base_kind_;
    MonomialOrder order_;
    Ideal ideal_;
    GroebnerBasis gb_;
    std::vector<Polynomial> gx_, gy_;
    Ideal base_ideal_;
};

}  // namespace covercheck
