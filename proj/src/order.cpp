#include "covercheck/order.hpp"

namespace covercheck {

const char* order_kind_name(OrderKind k) {
    return k == OrderKind::Lex ? "lex" : "grevlex";
}

namespace {

// Compares exponent ranges [lo, hi) of a and b under one plain order.
int cmp_range(OrderKind kind, const Monomial& a, const Monomial& b, std::size_t lo,
              std::size_t hi) {
    if (kind == OrderKind::Lex) {
        for (std::size_t i = lo; i < hi; ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    std::size_t n = a.nvars();
    if (!is_block_) return cmp_range(first_, a, b, 0, n);
    std::size_t s = split_ < n ? split_ : n;
    if (int c = cmp_range(first_, a, b, 0, s)) return c;
    return cmp_range(second_, a, b, s, n);
}

std::string MonomialOrder::key() const {
    if (!is_block_) return order_kind_name(first_);
    return std::string("block(") + order_kind_name(first_) + "," +
           order_kind_name(second_) + ";" + std::to_string(split_) + ")";
}

}  // namespace covercheck
