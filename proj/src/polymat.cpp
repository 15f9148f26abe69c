#include "covercheck/polymat.hpp"

#include "covercheck/deadline.hpp"
#include "covercheck/errors.hpp"
#include "covercheck/groebner.hpp"

namespace covercheck {

PolyMatrix::PolyMatrix(VarTablePtr table, std::size_t rows, std::size_t cols)
    : table_(std::move(table)),
      rows_(rows),
      cols_(cols),
      a_(rows * cols, Polynomial(table_)) {}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(table_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
    PolyMatrix r(table_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
    return r;
}

namespace {

// Exact f / g for polynomials; the division must leave no remainder.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return f;
    ReductionResult r = reduce(f, {g}, Ideal::canonical_order());
    if (!r.remainder.is_zero())
        throw std::logic_error("inexact division inside fraction-free elimination");
    return r.quotients[0];
}

Polynomial det_cofactor(const PolyMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Polynomial::constant(m.table(), Rational(1));
    if (n == 1) return m.at(0, 0);
    // Expand along the column with the most zero entries.
    std::size_t best = 0, best_zeros = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t z = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.at(i, j).is_zero()) ++z;
        if (z > best_zeros) best = j, best_zeros = z;
    }
    Polynomial acc(m.table());
    std::vector<std::size_t> all, sub_cols;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
        if (j != best) sub_cols.push_back(j);
    for (std::size_t i = 0; i < n; ++i) {
        if (m.at(i, best).is_zero()) continue;
        std::vector<std::size_t> sub_rows;
        for (std::size_t r : all)
            if (r != i) sub_rows.push_back(r);
        Polynomial minor = det_cofactor(m.submatrix(sub_rows, sub_cols));
        Polynomial piece = m.at(i, best) * minor;
        acc = ((i + best) % 2 == 0) ? acc + piece : acc - piece;
    }
    return acc;
}

Polynomial det_bareiss(PolyMatrix m) {
    std::size_t n = m.rows();
    Polynomial prev = Polynomial::constant(m.table(), Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        deadline::check("determinant");
        if (m.at(k, k).is_zero()) {
            std::size_t pivot = k;
            while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Polynomial(m.table());
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = divide_exact(
                    m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    Polynomial d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

}  // namespace

Polynomial det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    if (m.rows() <= 3) return det_cofactor(m);
    return det_bareiss(m);
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
    if (k == 0) return {Polynomial::constant(m.table(), Rational(1))};
    if (k > m.rows() || k > m.cols()) return {};
    std::vector<Polynomial> out;
    std::vector<std::size_t> rs(k), cs(k);
    auto enumerate = [&](std::size_t total, std::vector<std::size_t>& sel, auto&& body) {
        // Lexicographic k-subsets of {0..total-1}.
        for (std::size_t i = 0; i < k; ++i) sel[i] = i;
        for (;;) {
            body();
            std::size_t i = k;
            while (i-- > 0) {
                if (sel[i] + (k - i) < total) {
                    ++sel[i];
                    for (std::size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
                    break;
                }
                if (i == 0) return;
            }
        }
    };
    enumerate(m.rows(), rs, [&] {
        enumerate(m.cols(), cs, [&] { out.push_back(det(m.submatrix(rs, cs))); });
    });
    return out;
}

Ideal fitting_ideal(const PolyMatrix& n, const Ideal& j, std::size_t r, std::size_t i) {
    if (!same_table(n.table(), j.table()))
        throw InputError("Fitting ideal data over different variable tables");
    if (i > r) return Ideal::unit(j.table());
    std::size_t k = r - i;
    if (k == 0) return Ideal::unit(j.table());
    std::vector<Polynomial> gens = minors(n, k);
    gens.insert(gens.end(), j.gens().begin(), j.gens().end());
    return Ideal(j.table(), std::move(gens));
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
    RationalMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r = *this;
    for (auto& v : r.a_) v *= c;
    return r;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

namespace {

// Row echelon over Q; returns (rank, det) where det only applies to square
// input.
std::pair<std::size_t, Rational> echelon(RationalMatrix m) {
    std::size_t rows = m.rows(), cols = m.cols();
    Rational d = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) {
            d = 0;
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            d = -d;
        }
        d *= m.at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) / m.at(rank, col);
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return {rank, d};
}

}  // namespace

Rational det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    auto [rk, d] = echelon(m);
    return rk == m.rows() ? d : Rational(0);
}

std::size_t rank(const RationalMatrix& m) { return echelon(m).first; }

std::vector<Rational> charpoly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("charpoly of a non-square matrix");
    std::size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RationalMatrix aux = RationalMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        aux = m * aux;
        Rational ck = -aux.trace() / Rational(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) aux.at(i, i) += ck;
    }
    return c;
}

}  // namespace covercheck
