#include "doctest.h"

#include "qloop/dpoly.hpp"
#include "qloop/error.hpp"
#include "qloop/parse.hpp"

#include <random>

using namespace qloop;

namespace {

Field G = Field::generic();
Scalar gq(const char* t) { return parse_scalar(t, G); }

// q -> q^-1 on an element of Q(q)
Scalar bar(const Scalar& s) {
    const RationalFunction& r = s.rf();
    return Scalar(RationalFunction(r.num().scaled_exponents(-1), r.den().scaled_exponents(-1), r.grid()));
}

std::vector<Scalar> convolve(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> c(a.size(), G.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

TEST_CASE("fundamental polynomials and degree weights") {
    DrinfeldPoly p = fundamental_poly(1, gq("q^2"), 2);
    CHECK(p.slot(1) == std::vector<Scalar>{G.one(), gq("-q^2")});
    CHECK(p.slot(2) == std::vector<Scalar>{G.one()});
    for (int n = 1; n <= 4; ++n)
        for (int xi = 1; xi <= n; ++xi) CHECK(fundamental_poly(xi, gq("3*q"), n).degree_weight() == fundamental_weight(xi, n));
    DrinfeldPoly pp = fundamental_poly(2, gq("2"), 3) * fundamental_poly(2, gq("q"), 3);
    CHECK(pp.degree(2) == 2);
    CHECK(pp.slot(2) == std::vector<Scalar>{G.one(), gq("-2 - q"), gq("2*q")});
    DrinfeldPoly mixed = fundamental_poly(1, gq("5"), 3) * fundamental_poly(3, gq("q^-1"), 3);
    CHECK(mixed.degree_weight() == fundamental_weight(1, 3) + fundamental_weight(3, 3));
    CHECK_THROWS_AS(fundamental_poly(1, G.zero(), 2), ZeroSpectralParameter);
    CHECK(DrinfeldPoly::trivial(3, G).degree_weight() == Weight::zero(3));
}

TEST_CASE("reversed polynomials") {
    Scalar a = gq("q^3"), b = gq("7");
    CHECK(pi_minus(fundamental_poly(1, a, 1)) == fundamental_poly(1, a.inverse(), 1));
    DrinfeldPoly ab = fundamental_poly(1, a, 2) * fundamental_poly(1, b, 2);
    CHECK(pi_minus(ab) == fundamental_poly(1, a.inverse(), 2) * fundamental_poly(1, b.inverse(), 2));
    CHECK(pi_minus(pi_minus(ab)) == ab);
}

TEST_CASE("psi series") {
    Scalar a = gq("2");
    auto s = psi_series(fundamental_poly(1, a, 1), 1, SeriesSide::Zero, 5);
    CHECK(s[0] == gq("q"));
    for (int m = 1; m <= 5; ++m) CHECK(s[std::size_t(m)] == gq("q - q^-1") * a.pow(m));
    for (auto side : {SeriesSide::Zero, SeriesSide::Infinity}) {
        auto t = psi_series(DrinfeldPoly::trivial(2, G), 1, side, 4);
        CHECK(t[0].is_one());
        for (int m = 1; m <= 4; ++m) CHECK(t[std::size_t(m)].is_zero());
    }
    // around infinity the expansion is the bar image of the expansion of the reversed polynomial at zero
    DrinfeldPoly p = fundamental_poly(1, gq("2"), 2) * fundamental_poly(1, gq("-3"), 2) * fundamental_poly(2, gq("5"), 2);
    for (int i = 1; i <= 2; ++i) {
        auto inf = psi_series(p, i, SeriesSide::Infinity, 10);
        auto zero = psi_series(pi_minus(p), i, SeriesSide::Zero, 10);
        for (std::size_t m = 0; m <= 10; ++m) CHECK(inf[m] == bar(zero[m]));
    }
    // multiplicative in the polynomial
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(-3, 3), c(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
        DrinfeldPoly x = fundamental_poly(1, G.qpow(e(rng)) * c(rng), 2), y = fundamental_poly(1, G.qpow(e(rng)) * c(rng), 2);
        for (auto side : {SeriesSide::Zero, SeriesSide::Infinity})
            CHECK(psi_series(x * y, 1, side, 8) == convolve(psi_series(x, 1, side, 8), psi_series(y, 1, side, 8)));
    }
}

TEST_CASE("Kirillov-Reshetikhin strings") {
    Scalar a = gq("3");
    CHECK(kr_poly(2, a, 1, 3) == fundamental_poly(2, a, 3));
    CHECK(kr_poly(2, a, 2, 3) == fundamental_poly(2, a * gq("q"), 3) * fundamental_poly(2, a * gq("q^-1"), 3));
    CHECK(kr_poly(1, a, 0, 3) == DrinfeldPoly::trivial(3, G));
    CHECK(kr_poly(1, a, 3, 2).degree_weight() == fundamental_weight(1, 2).scaled(3));
}

TEST_CASE("bracket integers") {
    for (int n = 1; n <= 4; ++n)
        for (int xi = 1; xi <= n; ++xi) {
            CHECK(la_bracket(fundamental_weight(xi, n), xi) == -xi);
            CHECK(la_bracket(Weight::zero(n), xi) == -xi);
        }
    CHECK(la_bracket(fundamental_weight(1, 2) + fundamental_weight(2, 2), 1) == 0);
    CHECK(la_bracket(Weight(std::vector<int>{1, 2, 3}), 2) == -1 + 3 - 2);
}

TEST_CASE("l-acyclic splitting") {
    Field E = Field::cyclotomic(5);
    std::vector<Scalar> cycle;
    for (int k = 0; k < 5; ++k) cycle.push_back(E.qpow(k));
    DrinfeldPoly full = DrinfeldPoly::from_roots(1, E, {cycle});
    // 1 - t^5
    std::vector<Scalar> want(6, E.zero());
    want[0] = E.one();
    want[5] = -E.one();
    CHECK(full.slot(1) == want);
    auto [p0, p1] = l_acyclic_split(full, 5);
    CHECK(p0 == DrinfeldPoly::trivial(1, E));
    CHECK(p1 == full);

    DrinfeldPoly two = DrinfeldPoly::from_roots(1, E, {{E.one(), E.qpow(1)}});
    auto [q0, q1] = l_acyclic_split(two, 5);
    CHECK(q0 == two);
    CHECK(q1 == DrinfeldPoly::trivial(1, E));
    auto [r0, r1] = l_acyclic_split(q0, 5);
    CHECK(r0 == q0);
    CHECK(r1 == DrinfeldPoly::trivial(1, E));

    // mixed: a 2eps-cycle, a stray root and a second node
    std::vector<Scalar> roots;
    for (int k = 0; k < 5; ++k) roots.push_back(E.integer(2) * E.qpow(k));
    roots.push_back(E.integer(3));
    DrinfeldPoly mix = DrinfeldPoly::from_roots(2, E, {roots, {E.qpow(2)}});
    auto [m0, m1] = l_acyclic_split(mix, 5);
    CHECK(m0 * m1 == mix);
    CHECK(m0 == DrinfeldPoly::from_roots(2, E, {{E.integer(3)}, {E.qpow(2)}}));
    for (int i = 1; i <= 2; ++i)
        for (int k = 0; k <= m1.degree(i); ++k)
            if (k % 5 != 0) CHECK(m1.slot(i)[std::size_t(k)].is_zero());

    DrinfeldPoly bare = DrinfeldPoly::trivial(1, E);
    bare.polys[0] = {E.one(), E.zero(), E.one()};
    bare.inverse_roots[0].reset();
    CHECK_THROWS_AS(l_acyclic_split(bare, 5), NotSplitOverField);
}

TEST_CASE("dual and involution transforms") {
    Scalar a = gq("2*q");
    for (int n = 1; n <= 4; ++n)
        for (int xi = 1; xi <= n; ++xi) {
            DrinfeldPoly f = fundamental_poly(xi, a, n);
            for (int c : {-3, 0, 2}) CHECK(dual_transform(f, c) == fundamental_poly(n + 1 - xi, a * G.qpow(c), n));
            Scalar kappa = gq("q^-4");
            CHECK(omega_transform(f, kappa) == fundamental_poly(n + 1 - xi, G.qpow(2) * kappa * a.inverse(), n));
        }
    DrinfeldPoly p = fundamental_poly(1, gq("3"), 3) * fundamental_poly(2, gq("q"), 3);
    DrinfeldPoly r = dual_transform(p, 0);
    for (int i = 1; i <= 3; ++i) CHECK(r.slot(i) == p.slot(4 - i));
}
