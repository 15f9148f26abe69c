#include "doctest.h"

#include <cstddef>
#include <random>
#include <vector>

#include "covercheck/polymat.hpp"
#include "test_util.hpp"

using namespace covercheck;
using testutil::P;
using testutil::random_poly;
using testutil::table;

namespace {

// Independent determinant: cofactor expansion along the first row.
Polynomial laplace(const PolyMatrix& m) {
    REQUIRE(m.rows() == m.cols());
    if (m.rows() == 0) return Polynomial::constant(m.table(), 1);
    if (m.rows() == 1) return m.at(0, 0);
    std::vector<std::size_t> sub_rows;
    for (std::size_t i = 1; i < m.rows(); ++i) sub_rows.push_back(i);
    Polynomial acc = Polynomial::zero(m.table());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<std::size_t> sub_cols;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (c != j) sub_cols.push_back(c);
        Polynomial cof = m.at(0, j) * laplace(m.submatrix(sub_rows, sub_cols));
        acc += (j % 2 == 0) ? cof : -cof;
    }
    return acc;
}

PolyMatrix random_matrix(std::mt19937_64& rng, const VarTablePtr& t, std::size_t n,
                         int deg) {
    PolyMatrix m(t, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, t, deg, 2);
    return m;
}

RationalMatrix random_rational(std::mt19937_64& rng, std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Rational(static_cast<int>(rng() % 11) - 5);
    return m;
}

bool is_zero_matrix(const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("determinant examples") {
    auto t = table({"x", "y"}, 1);
    PolyMatrix m(t, 2, 2);
    m.at(0, 0) = P(t, "x");
    m.at(0, 1) = P(t, "y");
    m.at(1, 0) = P(t, "y");
    m.at(1, 1) = P(t, "x");
    CHECK(det(m) == P(t, "x^2 - y^2"));
    CHECK(det(PolyMatrix(t, 0, 0)).is_one());

    PolyMatrix singular(t, 2, 2);
    singular.at(0, 0) = P(t, "x");
    singular.at(0, 1) = P(t, "y");
    singular.at(1, 0) = P(t, "2*x");
    singular.at(1, 1) = P(t, "2*y");
    CHECK(det(singular).is_zero());

    // Upper-triangular companion block: determinant is the diagonal product.
    PolyMatrix tri(t, 3, 3);
    for (int i = 0; i < 3; ++i) tri.at(i, i) = P(t, "x");
    tri.at(0, 1) = Polynomial::constant(t, 1);
    tri.at(1, 2) = Polynomial::constant(t, 1);
    CHECK(det(tri) == P(t, "x^3"));
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
    auto t = table({"x", "y"}, 1);
    std::mt19937_64 rng(8080);
    for (int k = 0; k < 12; ++k) {
        std::size_t n = 2 + k % 3;  // up to 4x4
        PolyMatrix m = random_matrix(rng, t, n, 1);
        CHECK(det(m) == laplace(m));
        CHECK(det(m.transpose()) == det(m));
    }
}

TEST_CASE("minor enumeration order and conventions") {
    auto t = table({"x", "y", "z"}, 1);
    PolyMatrix m(t, 2, 3);
    m.at(0, 0) = P(t, "x");
    m.at(0, 1) = P(t, "y");
    m.at(0, 2) = P(t, "z");
    m.at(1, 0) = Polynomial::constant(t, 1);
    m.at(1, 1) = Polynomial::constant(t, 2);
    m.at(1, 2) = Polynomial::constant(t, 3);

    std::vector<Polynomial> twos = minors(m, 2);
    REQUIRE(twos.size() == 3);
    CHECK(twos[0] == P(t, "2*x - y"));
    CHECK(twos[1] == P(t, "3*x - z"));
    CHECK(twos[2] == P(t, "3*y - 2*z"));

    std::vector<Polynomial> ones = minors(m, 1);
    REQUIRE(ones.size() == 6);
    CHECK(ones[0] == P(t, "x"));
    CHECK(ones[5] == Polynomial::constant(t, 3));

    std::vector<Polynomial> zeros = minors(m, 0);
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0].is_one());
    CHECK(minors(m, 3).empty());
}

TEST_CASE("minors of the transpose generate the same ideal") {
    auto t = table({"x", "y"}, 1);
    std::mt19937_64 rng(4242);
    for (int k = 0; k < 6; ++k) {
        PolyMatrix m(t, 2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = random_poly(rng, t, 1, 2);
        for (std::size_t sz = 1; sz <= 2; ++sz)
            CHECK(ideal_equal(Ideal(t, minors(m, sz)),
                              Ideal(t, minors(m.transpose(), sz))));
    }
}

TEST_CASE("Fitting ideals of a diagonal presentation") {
    auto t = table({"y"}, 0);
    Ideal j = Ideal::zero(t);
    PolyMatrix n(t, 2, 2);
    n.at(0, 0) = P(t, "y");
    n.at(1, 1) = P(t, "y");

    CHECK(ideal_equal(fitting_ideal(n, j, 2, 0), Ideal(t, {P(t, "y^2")})));
    CHECK(ideal_equal(fitting_ideal(n, j, 2, 1), Ideal(t, {P(t, "y")})));
    CHECK(is_trivial(fitting_ideal(n, j, 2, 2)));

    // Ambient relations join every Fitting ideal.
    Ideal cube(t, {P(t, "y^3")});
    CHECK(ideal_equal(fitting_ideal(n, cube, 2, 0), Ideal(t, {P(t, "y^2")})));
    CHECK(ideal_equal(fitting_ideal(n, cube, 2, 1), Ideal(t, {P(t, "y")})));

    // More generators than relation columns: the top Fitting ideal collapses
    // to the ambient ideal.
    PolyMatrix thin(t, 2, 1);
    thin.at(0, 0) = P(t, "y");
    CHECK(ideal_equal(fitting_ideal(thin, cube, 2, 0), cube));
    CHECK(ideal_equal(fitting_ideal(thin, cube, 2, 1), Ideal(t, {P(t, "y")})));
    CHECK(is_trivial(fitting_ideal(thin, cube, 2, 2)));
}

TEST_CASE("Fitting ideals form an increasing chain") {
    auto t = table({"x", "y"}, 1);
    std::mt19937_64 rng(606);
    for (int k = 0; k < 5; ++k) {
        PolyMatrix n(t, 3, 2);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) n.at(i, j) = random_poly(rng, t, 1, 2);
        Ideal j(t, {random_poly(rng, t, 2, 2)});
        Ideal prev = fitting_ideal(n, j, 3, 0);
        for (std::size_t i = 1; i <= 3; ++i) {
            Ideal cur = fitting_ideal(n, j, 3, i);
            for (const auto& g : prev.gens()) CHECK(cur.contains(g));
            prev = cur;
        }
        CHECK(is_trivial(prev));
    }
}

TEST_CASE("characteristic polynomial examples") {
    RationalMatrix swap2(2, 2);
    swap2.at(0, 1) = 1;
    swap2.at(1, 0) = 1;
    CHECK(charpoly(swap2) == std::vector<Rational>{-1, 0, 1});

    CHECK(charpoly(RationalMatrix::identity(3)) ==
          std::vector<Rational>{-1, 3, -3, 1});
    CHECK(charpoly(RationalMatrix(2, 2)) == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("characteristic polynomial invariants on random matrices") {
    std::mt19937_64 rng(1618);
    for (int k = 0; k < 10; ++k) {
        std::size_t n = 2 + k % 3;
        RationalMatrix a = random_rational(rng, n);
        std::vector<Rational> c = charpoly(a);
        REQUIRE(c.size() == n + 1);
        CHECK(c[n] == 1);
        CHECK(c[n - 1] == -a.trace());
        Rational d = det(a);
        CHECK(c[0] == (n % 2 == 0 ? d : -d));

        // Cayley-Hamilton: the matrix satisfies its own polynomial.
        RationalMatrix acc(n, n);
        RationalMatrix power = RationalMatrix::identity(n);
        for (std::size_t i = 0; i <= n; ++i) {
            acc = acc + power.scaled(c[i]);
            if (i < n) power = power * a;
        }
        CHECK(is_zero_matrix(acc));
    }
}

TEST_CASE("rank examples and bounds") {
    CHECK(rank(RationalMatrix::identity(4)) == 4);
    CHECK(rank(RationalMatrix(3, 5)) == 0);

    RationalMatrix dep(2, 2);
    dep.at(0, 0) = 1;
    dep.at(0, 1) = 2;
    dep.at(1, 0) = 2;
    dep.at(1, 1) = 4;
    CHECK(rank(dep) == 1);

    std::mt19937_64 rng(90210);
    for (int k = 0; k < 10; ++k) {
        RationalMatrix a = random_rational(rng, 3);
        RationalMatrix b = random_rational(rng, 3);
        std::size_t ra = rank(a), rb = rank(b), rab = rank(a * b);
        CHECK(rab <= ra);
        CHECK(rab <= rb);
        CHECK((det(a) != 0) == (ra == 3));
    }
}

TEST_CASE("submatrix extraction") {
    auto t = table({"x"}, 1);
    PolyMatrix m(t, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m.at(i, j) = Polynomial::constant(t, Rational(static_cast<int>(3 * i + j)));
    PolyMatrix s = m.submatrix({0, 2}, {1});
    REQUIRE(s.rows() == 2);
    REQUIRE(s.cols() == 1);
    CHECK(s.at(0, 0) == Polynomial::constant(t, 1));
    CHECK(s.at(1, 0) == Polynomial::constant(t, 7));
    PolyMatrix tt = m.transpose().transpose();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(tt.at(i, j) == m.at(i, j));
}
