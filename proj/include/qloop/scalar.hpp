#pragma once

#include "qloop/laurent.hpp"

#include <gmpxx.h>

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace qloop {

// Element of Q(q): num/den with exponents measured in units of 1/grid.
// Canonical: den has lowest exponent 0 and positive leading coefficient, num and den are
// coprime in Z[q^(1/grid)] and have coprime contents, and grid is the smallest divisor
// compatible with every exponent.
class RationalFunction {
public:
    RationalFunction();
    RationalFunction(LaurentPoly num, LaurentPoly den = LaurentPoly(mpz_class(1)), int grid = 1);

    static RationalFunction from_rational(const mpq_class& c);
    static RationalFunction q_power(int num, int grid = 1);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int grid() const { return grid_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // Denominator is a nonzero integer constant.
    bool is_laurent() const { return den_.is_constant(); }

    // Same value on the finer grid g (g must be a multiple of grid()); not canonical.
    RationalFunction on_grid(int g) const;

    RationalFunction operator-() const;
    RationalFunction inverse() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.grid_ == b.grid_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    struct Raw {};
    RationalFunction(Raw, LaurentPoly num, LaurentPoly den, int grid)
        : num_(std::move(num)), den_(std::move(den)), grid_(grid) {}
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
    int grid_ = 1;
};

struct CycloContext {
    int l = 0;
    int phi = 0;
    std::vector<mpz_class> modulus;                  // monic Phi_l, low to high, length phi+1
    std::vector<std::vector<mpz_class>> eps_powers;  // x^r mod Phi_l for r in [0, l)
};

// Memoized per l; l must be odd and >= 3.
std::shared_ptr<const CycloContext> cyclo_context(int l);

// Element of Q(eps), eps a primitive l-th root of unity, as a polynomial of degree < phi(l).
class CycloNumber {
public:
    explicit CycloNumber(std::shared_ptr<const CycloContext> ctx);
    CycloNumber(std::shared_ptr<const CycloContext> ctx, std::vector<mpq_class> coeffs);

    static CycloNumber eps_power(std::shared_ptr<const CycloContext> ctx, long e);

    const CycloContext& context() const { return *ctx_; }
    const std::shared_ptr<const CycloContext>& context_ptr() const { return ctx_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    CycloNumber operator-() const;
    CycloNumber inverse() const;
    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

    std::string to_string() const;

private:
    void check(const CycloNumber& other) const;

    std::shared_ptr<const CycloContext> ctx_;
    std::vector<mpq_class> c_;
};

class Field;

class Scalar {
public:
    Scalar() = default;
    Scalar(RationalFunction r) : v_(std::move(r)) {}
    Scalar(CycloNumber c) : v_(std::move(c)) {}

    bool is_generic() const { return v_.index() == 0; }
    const RationalFunction& rf() const { return std::get<0>(v_); }
    const CycloNumber& cyc() const { return std::get<1>(v_); }
    Field field() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, long c);
    friend Scalar operator*(long c, const Scalar& a) { return a * c; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::variant<RationalFunction, CycloNumber> v_;
};

// Coefficient field: Q(q) (l == 0) or Q(eps) for a primitive l-th root of unity.
class Field {
public:
    static Field generic() { return Field(); }
    static Field cyclotomic(int l);

    bool is_generic() const { return l_ == 0; }
    int l() const { return l_; }
    const std::shared_ptr<const CycloContext>& context() const { return ctx_; }

    Scalar zero() const;
    Scalar one() const { return integer(1); }
    Scalar integer(long c) const;
    Scalar rational(const mpq_class& c) const;
    // q^e in the generic field, eps^e in a cyclotomic field.
    Scalar qpow(long e) const;
    // q^(num/den); generic field only.
    Scalar qpow_frac(long num, long den) const;

    friend bool operator==(const Field& a, const Field& b) { return a.l_ == b.l_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.l_ != b.l_; }
    std::string name() const;

private:
    Field() = default;
    int l_ = 0;
    std::shared_ptr<const CycloContext> ctx_;
};

// Laurent-polynomial forms of [r], [m]! and the Gaussian binomial [r over m].
LaurentPoly q_integer_laurent(long r);
LaurentPoly q_factorial_laurent(long m);
LaurentPoly q_binomial_laurent(long r, long m);

// In a cyclotomic field these are the values at q = eps.
Scalar q_integer(long r, const Field& f);
Scalar q_factorial(long m, const Field& f);
Scalar q_binomial(long r, long m, const Field& f);

// Ring map q -> eps; requires grid 1 and a denominator that survives at eps.
CycloNumber specialize(const RationalFunction& s, int l);
Scalar specialize(const Scalar& s, int l);
// Polynomial in q with rational coefficients mapping to c under specialize.
RationalFunction lift(const CycloNumber& c);

}  // namespace qloop
