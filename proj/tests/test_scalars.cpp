#include "doctest.h"

#include "qloop/error.hpp"
#include "qloop/linalg.hpp"
#include "qloop/parse.hpp"
#include "qloop/scalar.hpp"

#include <random>

using namespace qloop;

namespace {

Field G = Field::generic();

Scalar gq(const char* text) { return parse_scalar(text, G); }
Scalar ge(const char* text, int l = 5) { return parse_scalar(text, Field::cyclotomic(l)); }

// Random element of the local ring at eps: Laurent numerator over a product of (q^k + c), c >= 2.
Scalar random_local(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-4, 4), expo(-3, 3), small(1, 3), shift(2, 5);
    Scalar num = G.zero();
    for (int t = 0; t < 3; ++t) num += G.qpow(expo(rng)) * coef(rng);
    Scalar den = G.one();
    for (int t = small(rng) - 1; t > 0; --t) den *= G.qpow(small(rng)) + G.integer(shift(rng));
    return num / den;
}

}  // namespace

TEST_CASE("q-integers, factorials and binomials") {
    CHECK(q_integer(3, G) == gq("q^2 + 1 + q^-2"));
    CHECK(q_integer(5, Field::cyclotomic(5)).is_zero());
    CHECK(q_binomial(2, 1, G) == gq("q + q^-1"));
    CHECK(q_factorial(0, G).is_one());
    CHECK(q_factorial(3, G) == q_integer(2, G) * q_integer(3, G));
    CHECK(q_integer(0, G).is_zero());
    for (int r = -6; r <= 6; ++r) CHECK(q_integer(-r, G) == -q_integer(r, G));
    for (int r = 0; r <= 8; ++r)
        for (int m = 0; m <= r; ++m) CHECK(q_binomial(r, m, G) == q_binomial(r, r - m, G));
    // [r]_q as (q^r - q^-r)/(q - q^-1)
    for (int r = 1; r <= 6; ++r) CHECK(q_integer(r, G) == (G.qpow(r) - G.qpow(-r)) / (G.qpow(1) - G.qpow(-1)));
    // [4 over 2] = [4]! / ([2]! [2]!)
    CHECK(q_binomial(4, 2, G) == q_factorial(4, G) / (q_factorial(2, G) * q_factorial(2, G)));
    CHECK(q_binomial(-2, 1, G) == q_integer(-2, G));
}

TEST_CASE("field operations") {
    Scalar d = gq("q - q^-1");
    CHECK((d * d.inverse()).is_one());
    CHECK((gq("q") + gq("-q")).is_zero());
    CHECK(ge("e^3") * ge("e^3") == ge("e"));
    CHECK(ge("e^5").is_one());
    CHECK_THROWS_AS(G.zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(Field::cyclotomic(7).zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(gq("q") + ge("e"), ContextMismatch);
    CHECK_THROWS_AS(ge("e", 5) * ge("e", 7), ContextMismatch);
    CHECK(gq("q").pow(-3) == G.qpow(-3));
}

TEST_CASE("canonical form") {
    CHECK(gq("(q^2 - 1)/(q - 1)") == gq("q + 1"));
    CHECK(gq("1/q^-1") == gq("q"));
    Scalar x = gq("(2*q^2 + 2)/(4*q)");
    CHECK(x.rf().den().low() == 0);
    CHECK(x.rf().den().lead() > 0);
    CHECK(x.to_string() == "(q + q^-1)/(2)");
    CHECK(gq("-1/(1 - q)") == gq("1/(q - 1)"));
    CHECK(q_integer(3, G).to_string() == "(q^2 + 1 + q^-2)/(1)");

    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        Scalar s = random_local(rng);
        const RationalFunction& r = s.rf();
        CHECK(RationalFunction(r.num(), r.den(), r.grid()) == r);
    }
}

TEST_CASE("fractional exponent grid") {
    Scalar h = G.qpow_frac(1, 2);
    CHECK(h * h == gq("q"));
    CHECK(h.rf().grid() == 2);
    CHECK((h * h).rf().grid() == 1);
    CHECK(G.qpow_frac(2, 4) == h);
    CHECK(gq("q^(1/3)").pow(3) == gq("q"));
    CHECK_THROWS_AS(specialize(h, 5), FractionalExponentLeak);
}

TEST_CASE("specialization at a root of unity") {
    CHECK(specialize(gq("q^3"), 5) == ge("e^3"));
    CHECK(specialize(gq("(q^5 - 1)/(q - 1)"), 5).is_zero());
    CHECK(specialize(q_integer(2, G), 5) == ge("e + e^4"));
    CHECK_THROWS_AS(specialize(gq("1/(q^5 - 1)"), 5), DenominatorVanishesAtRootOfUnity);
    CHECK(specialize(gq("1/(q - 1)"), 5) == (ge("e") - ge("1")).inverse());
    CHECK(specialize(q_integer(7, G), 7).is_zero());

    // coefficient vector is reduced mod Phi_l
    for (int l : {3, 5, 7, 9}) {
        auto ctx = cyclo_context(l);
        for (int k = -2 * l; k <= 2 * l; ++k) CHECK(Field::cyclotomic(l).qpow(k).cyc().coeffs().size() <= std::size_t(ctx->phi));
    }
    CHECK(cyclo_context(9)->phi == 6);

    std::mt19937_64 rng(20240917);
    for (int t = 0; t < 200; ++t) {
        Scalar s = random_local(rng), u = random_local(rng);
        CHECK(specialize(s * u, 5) == specialize(s, 5) * specialize(u, 5));
        CHECK(specialize(s + u, 5) == specialize(s, 5) + specialize(u, 5));
    }
    for (int t = 0; t < 20; ++t) {
        Scalar c = specialize(random_local(rng), 7);
        CHECK(specialize(Scalar(lift(c.cyc())), 7) == c);
    }
}

TEST_CASE("parser") {
    CHECK(gq("3*q^-2 + 1/2") == G.qpow(-2) * 3 + G.rational(mpq_class(1, 2)));
    CHECK(ge("(1 + e)^2", 7) == ge("1 + 2*e + e^2", 7));
    CHECK(gq("2") == G.integer(2));
    CHECK_THROWS_AS(gq("q^^2"), ParseError);
    CHECK_THROWS_AS(gq("(q"), ParseError);
    CHECK_THROWS_AS(gq("e"), ParseError);
    CHECK_THROWS_AS(ge("q"), ParseError);
    CHECK_THROWS_AS(gq("1/0"), ParseError);
    // canonical strings read back
    Scalar x = gq("(q^3 - 2*q)/(q^2 + 5)");
    CHECK(gq(x.to_string().c_str()) == x);
    Scalar y = ge("3/2 - e^2", 5);
    CHECK(ge(y.to_string().c_str()) == y);
}

TEST_CASE("exact linear algebra") {
    Matrix m(G, 3, 3);
    const char* entries[3][3] = {{"q", "1", "0"}, {"2", "q^-1", "1"}, {"0", "3", "q^2 + 1"}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.set(i, j, gq(entries[i][j]));
    CHECK(determinant(m) == cofactor_determinant(m));
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(G, 3));

    Matrix s(G, 2, 3);
    s.set(0, 0, gq("q"));
    s.set(0, 1, gq("1"));
    s.set(1, 0, gq("q^2"));
    s.set(1, 1, gq("q"));
    CHECK(rank(s) == 1);
    auto ker = kernel(s);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) CHECK(is_zero(s.apply(v)));
    CHECK_FALSE(inverse(Matrix(G, 2, 2)));

    Echelon e(G, 3);
    CHECK(e.insert({gq("1"), gq("q"), gq("0")}));
    CHECK_FALSE(e.insert({gq("q"), gq("q^2"), gq("0")}));
    CHECK(e.contains({gq("2"), gq("2*q"), gq("0")}));
    CHECK(e.rank() == 1);
}

TEST_CASE("exponent rescaling of Laurent polynomials") {
    LaurentPoly p(-1, {mpz_class(2), mpz_class(0), mpz_class(-3)});  // 2 q^-1 - 3 q
    CHECK(p.scaled_exponents(2) == LaurentPoly(-2, {mpz_class(2), 0, 0, 0, mpz_class(-3)}));
    CHECK(p.scaled_exponents(-1) == LaurentPoly(-1, {mpz_class(-3), mpz_class(0), mpz_class(2)}));
    CHECK(p.scaled_exponents(-3).scaled_exponents(-1) == p.scaled_exponents(3));
    CHECK_THROWS_AS(p.scaled_exponents(0), std::invalid_argument);
}
