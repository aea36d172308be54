#include "qloop/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qloop {

LaurentPoly::LaurentPoly(mpz_class c, int exponent) : low_(exponent) {
    if (c != 0) coeffs_.push_back(std::move(c));
    else low_ = 0;
}

LaurentPoly::LaurentPoly(int low, std::vector<mpz_class> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
    trim();
}

void LaurentPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
    if (skip > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
        low_ += static_cast<int>(skip);
    }
    if (coeffs_.empty()) low_ = 0;
}

mpz_class LaurentPoly::coeff(int exponent) const {
    if (exponent < low_ || exponent > high() || coeffs_.empty()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::shifted(int by) const {
    LaurentPoly r = *this;
    if (!r.coeffs_.empty()) r.low_ += by;
    return r;
}

LaurentPoly LaurentPoly::scaled_exponents(int factor) const {
    if (factor == 0) throw std::invalid_argument("scaled_exponents: factor must be nonzero");
    if (coeffs_.empty() || factor == 1) return *this;
    auto step = static_cast<std::size_t>(factor < 0 ? -factor : factor);
    std::size_t last = coeffs_.size() - 1;
    std::vector<mpz_class> c(last * step + 1);
    // a negative factor reverses the coefficient order
    for (std::size_t k = 0; k <= last; ++k) c[(factor > 0 ? k : last - k) * step] = coeffs_[k];
    return LaurentPoly((factor > 0 ? low_ : high()) * factor, std::move(c));
}

LaurentPoly LaurentPoly::divexact(const mpz_class& c) const {
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

namespace {

LaurentPoly add_scaled(const LaurentPoly& a, const LaurentPoly& b, int sign) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sign > 0 ? b : -b;
    int lo = std::min(a.low(), b.low());
    int hi = std::max(a.high(), b.high());
    std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < a.length(); ++k) c[static_cast<std::size_t>(a.low() - lo) + k] = a.coeffs()[k];
    auto off = static_cast<std::size_t>(b.low() - lo);
    for (std::size_t k = 0; k < b.length(); ++k) {
        if (sign > 0) c[off + k] += b.coeffs()[k];
        else c[off + k] -= b.coeffs()[k];
    }
    return LaurentPoly(lo, std::move(c));
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add_scaled(a, b, 1); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return add_scaled(a, b, -1); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.length() + b.length() - 1);
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.length(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return LaurentPoly(a.low_ + b.low_, std::move(c));
}

LaurentPoly operator*(const LaurentPoly& a, const mpz_class& c) {
    if (c == 0 || a.is_zero()) return {};
    LaurentPoly r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::string LaurentPoly::to_string(int grid, char var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        int e = low_ + k;
        bool neg = c < 0;
        mpz_class mag = abs(c);
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string pw;
        if (e != 0) {
            pw += var;
            if (grid == 1) {
                if (e != 1) pw += "^" + std::to_string(e);
            } else {
                int g = std::gcd(std::abs(e), grid);
                int num = e / g, den = grid / g;
                if (den == 1) {
                    if (num != 1) pw += "^" + std::to_string(num);
                } else {
                    pw += "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
                }
            }
        }
        if (pw.empty()) out += mag.get_str();
        else if (mag == 1) out += pw;
        else out += mag.get_str() + "*" + pw;
    }
    return out;
}

namespace {

LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    if (p.lead() < 0) c = -c;
    return c == 1 ? p : p.divexact(c);
}

// lc(b)^k * a mod b with the leading-coefficient multiplier folded in each step.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
    const mpz_class& lb = b.lead();
    while (!a.is_zero() && a.high() >= b.high()) {
        mpz_class la = a.lead();
        int shift = a.high() - b.high();
        a = a * lb - (b * la).shifted(shift);
    }
    return a;
}

}  // namespace

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    a = a.shifted(-a.low());
    b = b.shifted(-b.low());
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    mpz_class g;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.high() < b.high()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.high() == 0) {
            a = LaurentPoly(mpz_class(1));
            break;
        }
        LaurentPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r.shifted(-r.low()));
    }
    return primitive_part(a) * g;
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::logic_error("poly_divexact: zero divisor");
    if (a.is_zero()) return {};
    if (b.is_monomial()) {
        LaurentPoly q = a.divexact(b.lead());
        return q.shifted(-b.low());
    }
    LaurentPoly r = a;
    int qlow = a.low() - b.low();
    int qhigh = a.high() - b.high();
    if (qhigh < qlow) throw std::logic_error("poly_divexact: inexact division");
    std::vector<mpz_class> q(static_cast<std::size_t>(qhigh - qlow + 1));
    const mpz_class& lb = b.lead();
    while (!r.is_zero()) {
        int shift = r.high() - b.high();
        if (shift < qlow) throw std::logic_error("poly_divexact: inexact division");
        if (!mpz_divisible_p(r.lead().get_mpz_t(), lb.get_mpz_t()))
            throw std::logic_error("poly_divexact: inexact division");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), r.lead().get_mpz_t(), lb.get_mpz_t());
        q[static_cast<std::size_t>(shift - qlow)] = c;
        r = r - (b * c).shifted(shift);
    }
    return LaurentPoly(qlow, std::move(q));
}

}  // namespace qloop
