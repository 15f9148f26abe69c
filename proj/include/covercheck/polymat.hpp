#pragma once

#include <vector>

#include "covercheck/ideal.hpp"
#include "covercheck/polynomial.hpp"

namespace covercheck {

class PolyMatrix {
public:
    PolyMatrix(VarTablePtr table, std::size_t rows, std::size_t cols);
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const VarTablePtr& table() const { return table_; }
    Polynomial& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const Polynomial& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }
    PolyMatrix transpose() const;
    PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const;

private:
    VarTablePtr table_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> a_;
};

// Exact determinant: fraction-free Bareiss over the polynomial ring, with
// cofactor expansion for tiny sizes. det of the 0x0 matrix is 1.
Polynomial det(const PolyMatrix& m);

// All k x k minors, row subsets in lexicographic order, column subsets inner.
// k = 0 yields {1}; k > min(rows, cols) yields the empty list.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);

// i-th Fitting ideal of the module presented by N over R/J with r generators:
// the ideal of (r-i)-minors plus J. Out-of-range minor sizes follow the
// conventions above (no minors -> J alone; 0-minors -> unit).
Ideal fitting_ideal(const PolyMatrix& n, const Ideal& j, std::size_t r, std::size_t i);

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const Rational& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;
    Rational trace() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

Rational det(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// Characteristic polynomial det(lambda*I - M), monic, ascending coefficients
// (size n+1), by the Faddeev-LeVerrier recurrence.
std::vector<Rational> charpoly(const RationalMatrix& m);

}  // namespace covercheck
