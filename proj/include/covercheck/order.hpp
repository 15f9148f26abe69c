#pragma once

#include <cstddef>
#include <string>

#include "covercheck/monomial.hpp"

namespace covercheck {

enum class OrderKind { Lex, Grevlex };

const char* order_kind_name(OrderKind k);

// Term order descriptor. Either a plain lex/grevlex over all variables, or a
// block order comparing exponents on [0, split) first (fiber block) and then
// on [split, n). Grevlex breaks total-degree ties by preferring the smaller
// exponent on the last variable of the block, scanning right to left.
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex); }
    static MonomialOrder plain(OrderKind k) { return MonomialOrder(k); }
    static MonomialOrder block(OrderKind fiber, OrderKind base, std::size_t split) {
        MonomialOrder o(fiber);
        o.is_block_ = true;
        o.second_ = base;
        o.split_ = split;
        return o;
    }

    // > 0 when a comes after b in the order (a is the larger monomial).
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    bool is_block() const { return is_block_; }
    std::size_t split() const { return split_; }
    OrderKind first_kind() const { return first_; }
    OrderKind second_kind() const { return second_; }

    // Canonical encoding; used as Groebner-cache key.
    std::string key() const;
    bool operator==(const MonomialOrder&) const = default;

private:
    explicit MonomialOrder(OrderKind k) : first_(k), second_(k) {}
    bool is_block_ = false;
    OrderKind first_;
    OrderKind second_;
    std::size_t split_ = 0;
};

}  // namespace covercheck
