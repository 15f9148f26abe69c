#include "doctest.h"

#include <random>
#include <vector>

#include "covercheck/errors.hpp"
#include "covercheck/groebner.hpp"
#include "covercheck/polynomial.hpp"
#include "test_util.hpp"

using namespace covercheck;
using testutil::P;
using testutil::random_poly;
using testutil::table;

namespace {

// All monomials in nvars variables of total degree <= max_deg.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_deg) {
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    for (;;) {
        int deg = 0;
        for (int k : e) deg += k;
        if (deg <= max_deg) out.push_back(Monomial(e));
        std::size_t i = 0;
        while (i < nvars) {
            if (++e[i] <= max_deg) break;
            e[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    return out;
}

}  // namespace

TEST_CASE("monomial order axioms, exhaustive on degree <= 4 in 3 variables") {
    auto monos = monomials_up_to(3, 4);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::lex(), MonomialOrder::grevlex(),
        MonomialOrder::block(OrderKind::Grevlex, OrderKind::Grevlex, 1),
        MonomialOrder::block(OrderKind::Lex, OrderKind::Grevlex, 2)};
    Monomial one(3);
    for (const auto& ord : orders) {
        // Antisymmetry and reflexivity.
        for (const auto& a : monos) {
            CHECK(ord.cmp(a, a) == 0);
            for (const auto& b : monos) {
                int ab = ord.cmp(a, b), ba = ord.cmp(b, a);
                CHECK(((ab > 0 && ba < 0) || (ab < 0 && ba > 0) || (ab == 0 && ba == 0)));
                if (ab == 0) CHECK(a == b);  // total order separates distinct monomials
            }
        }
        // Transitivity and multiplicativity on a seeded sample of triples.
        std::mt19937_64 rng(11);
        for (int k = 0; k < 20000; ++k) {
            const Monomial& a = monos[rng() % monos.size()];
            const Monomial& b = monos[rng() % monos.size()];
            const Monomial& c = monos[rng() % monos.size()];
            if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
            CHECK(ord.cmp(c * a, c * b) == ord.cmp(a, b));
        }
        // 1 is the minimum: a well-order on monomials.
        for (const auto& a : monos)
            if (!(a == one)) CHECK(ord.less(one, a));
    }
}

TEST_CASE("monomial order examples") {
    // grevlex ties break toward the smaller exponent on the last variable.
    MonomialOrder grevlex = MonomialOrder::grevlex();
    Monomial x2 = Monomial({2, 0}), xy = Monomial({1, 1});
    CHECK(grevlex.cmp(x2, xy) > 0);
    CHECK(grevlex.cmp(xy, xy) == 0);

    // Block order: any positive fiber exponent dominates the base block.
    MonomialOrder block = MonomialOrder::block(OrderKind::Grevlex, OrderKind::Grevlex, 2);
    Monomial y1cubed = Monomial({0, 0, 3, 0}), x1 = Monomial({1, 0, 0, 0});
    CHECK(block.cmp(y1cubed, x1) < 0);
}

TEST_CASE("arithmetic examples") {
    auto t = table({"x", "y"}, 1);
    CHECK(P(t, "(x+1)*(x-1)") == P(t, "x^2 - 1"));
    Polynomial f = P(t, "3*x^2*y - 2/7*y + 5");
    CHECK(f + Polynomial::zero(t) == f);
    CHECK(f - f == Polynomial::zero(t));
    CHECK(f.pow(0) == Polynomial::constant(t, 1));
    CHECK(f.pow(3) == f * f * f);
    CHECK_THROWS_AS(f.pow(-1), InputError);
}

TEST_CASE("parabola pair product expands to the quartic and refactors back") {
    auto t = table({"y", "x"}, 1);
    Polynomial f = P(t, "(y - 1)^2 - x");
    Polynomial g = P(t, "(y + 1)^2 + x");
    Polynomial product = f * g;
    CHECK(product == P(t, "y^4 - 2*y^2 - 4*x*y - x^2 + 1"));
    // Refactor round trip: dividing by one factor recovers the other.
    ReductionResult r = reduce(product, {f}, MonomialOrder::grevlex());
    CHECK(r.remainder.is_zero());
    CHECK(r.quotients[0] == g);
}

TEST_CASE("ring axioms on random polynomials") {
    auto t = table({"x", "y", "z"}, 1);
    std::mt19937_64 rng(2026);
    for (int k = 0; k < 60; ++k) {
        Polynomial f = random_poly(rng, t, 3, 4);
        Polynomial g = random_poly(rng, t, 3, 4);
        Polynomial h = random_poly(rng, t, 3, 4);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * Polynomial::constant(t, 1) == f);
        CHECK((f * Polynomial::zero(t)).is_zero());
    }
}

TEST_CASE("degree conventions") {
    auto t = table({"x", "y"}, 1);
    CHECK(Polynomial::zero(t).total_degree() == -1);
    CHECK(Polynomial::zero(t).degree_in(0) == -1);
    CHECK(Polynomial::constant(t, 7).total_degree() == 0);
    CHECK(P(t, "x^2*y + y").total_degree() == 3);
    CHECK(P(t, "x^2*y + y").degree_in(1) == 1);
    CHECK_FALSE(P(t, "y^3").depends_on(0));
}

TEST_CASE("differentiation examples") {
    auto t = table({"x", "p", "q"}, 1);
    CHECK(P(t, "x^3 + p*x + q").derivative(0) == P(t, "3*x^2 + p"));
    CHECK(Polynomial::constant(t, 5).derivative(0).is_zero());
    auto t2 = table({"x", "y"}, 1);
    CHECK(P(t2, "x^2*y").derivative(1) == P(t2, "x^2"));
}

TEST_CASE("Leibniz rule on random products") {
    auto t = table({"x", "y"}, 1);
    std::mt19937_64 rng(31);
    for (int k = 0; k < 60; ++k) {
        Polynomial f = random_poly(rng, t, 3, 4);
        Polynomial g = random_poly(rng, t, 3, 4);
        for (std::size_t v = 0; v < 2; ++v)
            CHECK((f * g).derivative(v) ==
                  f.derivative(v) * g + f * g.derivative(v));
    }
}

TEST_CASE("specialization examples") {
    auto t = table({"x", "p", "q"}, 1);
    Polynomial cubic = P(t, "x^3 + p*x + q");
    CHECK(cubic.specialize({{1, Rational(-3)}, {2, Rational(2)}}) ==
          P(t, "x^3 - 3*x + 2"));
    CHECK(cubic.specialize({}) == cubic);

    auto ty = table({"y1", "y2"}, 0);
    Polynomial nodal = P(ty, "y1^3 + y1^2 - y2^2");
    CHECK(nodal.specialize({{0, Rational(3)}, {1, Rational(6)}}).is_zero());
}

TEST_CASE("specialization is a ring homomorphism") {
    auto t = table({"x", "y", "z"}, 1);
    std::mt19937_64 rng(47);
    for (int k = 0; k < 60; ++k) {
        Polynomial f = random_poly(rng, t, 3, 4);
        Polynomial g = random_poly(rng, t, 3, 4);
        std::map<std::size_t, Rational> at{{1, testutil::small_coef(rng)},
                                           {2, testutil::small_coef(rng)}};
        CHECK((f * g).specialize(at) == f.specialize(at) * g.specialize(at));
        CHECK((f + g).specialize(at) == f.specialize(at) + g.specialize(at));
    }
}

TEST_CASE("content and primitive part") {
    auto t = table({"x", "y"}, 1);
    CHECK(content(Polynomial::zero(t)) == 0);
    CHECK(content(P(t, "4*x + 6*y")) == 2);
    CHECK(content(P(t, "1/2*x + 3/4")) == Rational(1, 4));
    CHECK(primitive_part(P(t, "-4*x - 6*y")) == P(t, "2*x + 3*y"));
    CHECK(primitive_part(P(t, "1/2*x + 3/4")) == P(t, "2*x + 3"));
}

TEST_CASE("leading term and monic normalization") {
    auto t = table({"x", "y"}, 1);
    MonomialOrder lex = MonomialOrder::lex();
    Polynomial f = P(t, "2*x*y + y^3");
    CHECK(f.leading_term(lex).mono == Monomial({1, 1}));
    CHECK(f.leading_term(lex).coef == 2);
    CHECK(f.monic(lex) == P(t, "x*y + 1/2*y^3"));
    // grevlex picks the cubic term instead.
    CHECK(f.leading_term(MonomialOrder::grevlex()).mono == Monomial({0, 3}));
}

TEST_CASE("mismatched variable tables are rejected") {
    auto a = table({"x", "y"}, 1);
    auto b = table({"u", "v"}, 1);
    CHECK_THROWS_AS(P(a, "x") + P(b, "u"), InputError);
    CHECK_THROWS_AS(P(a, "x") * P(b, "u"), InputError);
}
