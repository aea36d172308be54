#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qloop {

// Integer Laurent polynomial sum_k coeffs[k] * x^(low + k).
// Trimmed: no zero coefficient at either end; the zero polynomial has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(mpz_class c, int exponent = 0);
    LaurentPoly(int low, std::vector<mpz_class> coeffs);

    static LaurentPoly monomial(const mpz_class& c, int exponent) { return LaurentPoly(c, exponent); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() == 1 && low_ == 0; }
    bool is_monomial() const { return coeffs_.size() == 1; }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    std::size_t length() const { return coeffs_.size(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& lead() const { return coeffs_.back(); }
    mpz_class coeff(int exponent) const;

    mpz_class content() const;
    LaurentPoly shifted(int by) const;
    // x -> x^factor, factor nonzero.
    LaurentPoly scaled_exponents(int factor) const;
    LaurentPoly divexact(const mpz_class& c) const;
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const mpz_class& c);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    // Exponents are printed as k / grid.
    std::string to_string(int grid = 1, char var = 'q') const;

private:
    void trim();

    int low_ = 0;
    std::vector<mpz_class> coeffs_;
};

// Ordinary polynomial helpers on LaurentPoly with low() == 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);
// Exact quotient a / b over Z[x]; throws std::logic_error when b does not divide a.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qloop
