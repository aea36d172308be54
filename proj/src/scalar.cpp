#include "qloop/scalar.hpp"

#include "qloop/error.hpp"

#include <numeric>

namespace qloop {

namespace {

const LaurentPoly& unit_poly() {
    static const LaurentPoly one(mpz_class(1));
    return one;
}

// Divide every exponent by g (all exponents must be multiples of g).
LaurentPoly compress_exponents(const LaurentPoly& p, int g) {
    if (g == 1 || p.is_zero()) return p;
    std::vector<mpz_class> c;
    for (std::size_t k = 0; k < p.length(); k += static_cast<std::size_t>(g)) c.push_back(p.coeffs()[k]);
    return LaurentPoly(p.low() / g, std::move(c));
}

int exponent_gcd(const LaurentPoly& p, int g) {
    if (p.is_zero()) return g;
    g = std::gcd(g, std::abs(p.low()));
    for (std::size_t k = 1; k < p.length() && g > 1; ++k)
        if (p.coeffs()[k] != 0) g = std::gcd(g, static_cast<int>(k));
    return g;
}

}  // namespace

RationalFunction::RationalFunction() : den_(unit_poly()) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den, int grid)
    : num_(std::move(num)), den_(std::move(den)), grid_(grid) {
    if (grid_ < 1) throw std::invalid_argument("grid divisor must be positive");
    canonicalize();
}

RationalFunction RationalFunction::from_rational(const mpq_class& c) {
    return RationalFunction(LaurentPoly(c.get_num()), LaurentPoly(c.get_den()));
}

RationalFunction RationalFunction::q_power(int num, int grid) {
    return RationalFunction(LaurentPoly(mpz_class(1), num), unit_poly(), grid);
}

void RationalFunction::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = unit_poly();
        grid_ = 1;
        return;
    }
    if (den_.low() != 0) {
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
    }
    if (!den_.is_constant()) {
        LaurentPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    mpz_class c;
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.lead() < 0) c = -c;
    if (c != 1) {
        num_ = num_.divexact(c);
        den_ = den_.divexact(c);
    }
    if (grid_ > 1) {
        int g = exponent_gcd(den_, exponent_gcd(num_, grid_));
        if (g > 1) {
            num_ = compress_exponents(num_, g);
            den_ = compress_exponents(den_, g);
            grid_ /= g;
        }
    }
}

bool RationalFunction::is_one() const { return num_.is_constant() && num_.lead() == 1 && den_.is_constant() && den_.lead() == 1; }

RationalFunction RationalFunction::on_grid(int g) const {
    if (g % grid_ != 0) throw std::invalid_argument("on_grid: target grid is not a multiple");
    int f = g / grid_;
    return RationalFunction(Raw{}, num_.scaled_exponents(f), den_.scaled_exponents(f), g);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Raw{}, -num_, den_, grid_); }

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RationalFunction(den_, num_, grid_);
}

namespace {

int common_grid(const RationalFunction& a, const RationalFunction& b) { return std::lcm(a.grid(), b.grid()); }

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.grid_ != b.grid_) {
        int g = common_grid(a, b);
        return a.on_grid(g) + b.on_grid(g);
    }
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_, a.grid_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.grid_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.grid_ != b.grid_) {
        int g = common_grid(a, b);
        return a.on_grid(g) * b.on_grid(g);
    }
    if (a.den_.is_constant() && b.den_.is_constant())
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_, a.grid_);
    // cancel cross factors first to keep the products small
    LaurentPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_constant()) {
        LaurentPoly g = poly_gcd(an, bd);
        if (!g.is_constant()) {
            an = poly_divexact(an, g);
            bd = poly_divexact(bd, g);
        }
    }
    if (!ad.is_constant()) {
        LaurentPoly g = poly_gcd(bn, ad);
        if (!g.is_constant()) {
            bn = poly_divexact(bn, g);
            ad = poly_divexact(ad, g);
        }
    }
    return RationalFunction(an * bn, ad * bd, a.grid_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

std::string RationalFunction::to_string() const {
    return "(" + num_.to_string(grid_) + ")/(" + den_.to_string(grid_) + ")";
}

// ---------------------------------------------------------------- Scalar

Field Scalar::field() const { return is_generic() ? Field::generic() : Field::cyclotomic(cyc().context().l); }

bool Scalar::is_zero() const { return is_generic() ? rf().is_zero() : cyc().is_zero(); }
bool Scalar::is_one() const { return is_generic() ? rf().is_one() : cyc().is_one(); }

namespace {

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
    throw ContextMismatch("operands live in " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Scalar Scalar::operator-() const {
    if (is_generic()) return Scalar(-rf());
    return Scalar(-cyc());
}

Scalar Scalar::inverse() const {
    if (is_generic()) return Scalar(rf().inverse());
    return Scalar(cyc().inverse());
}

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Scalar acc = field().one();
    while (k > 0) {
        if (k & 1UL) acc *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return acc;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) mismatch(a, b);
    if (a.is_generic()) return Scalar(a.rf() + b.rf());
    return Scalar(a.cyc() + b.cyc());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) mismatch(a, b);
    if (a.is_generic()) return Scalar(a.rf() - b.rf());
    return Scalar(a.cyc() - b.cyc());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) mismatch(a, b);
    if (a.is_generic()) return Scalar(a.rf() * b.rf());
    return Scalar(a.cyc() * b.cyc());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) mismatch(a, b);
    return a * b.inverse();
}

Scalar operator*(const Scalar& a, long c) { return a * a.field().integer(c); }

Scalar& Scalar::operator+=(const Scalar& b) { return *this = *this + b; }
Scalar& Scalar::operator-=(const Scalar& b) { return *this = *this - b; }
Scalar& Scalar::operator*=(const Scalar& b) { return *this = *this * b; }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) mismatch(a, b);
    if (a.is_generic()) return a.rf() == b.rf();
    return a.cyc() == b.cyc();
}

std::string Scalar::to_string() const { return is_generic() ? rf().to_string() : cyc().to_string(); }

// ---------------------------------------------------------------- Field

Field Field::cyclotomic(int l) {
    Field f;
    f.ctx_ = cyclo_context(l);
    f.l_ = l;
    return f;
}

Scalar Field::zero() const {
    if (is_generic()) return Scalar(RationalFunction());
    return Scalar(CycloNumber(ctx_));
}

Scalar Field::integer(long c) const { return rational(mpq_class(c)); }

Scalar Field::rational(const mpq_class& c) const {
    if (is_generic()) return Scalar(RationalFunction::from_rational(c));
    std::vector<mpq_class> v{c};
    return Scalar(CycloNumber(ctx_, std::move(v)));
}

Scalar Field::qpow(long e) const {
    if (is_generic()) return Scalar(RationalFunction::q_power(static_cast<int>(e)));
    return Scalar(CycloNumber::eps_power(ctx_, e));
}

Scalar Field::qpow_frac(long num, long den) const {
    if (!is_generic()) throw ContextMismatch("fractional q-powers exist only in the generic field");
    if (den <= 0) throw std::invalid_argument("qpow_frac: denominator must be positive");
    return Scalar(RationalFunction::q_power(static_cast<int>(num), static_cast<int>(den)));
}

std::string Field::name() const { return is_generic() ? "Q(q)" : "Q(eps_" + std::to_string(l_) + ")"; }

// ---------------------------------------------------------------- q-numbers

LaurentPoly q_integer_laurent(long r) {
    if (r == 0) return {};
    long m = r < 0 ? -r : r;
    std::vector<mpz_class> c(static_cast<std::size_t>(2 * m - 1));
    for (long k = 0; k < m; ++k) c[static_cast<std::size_t>(2 * k)] = r < 0 ? -1 : 1;
    return LaurentPoly(static_cast<int>(-(m - 1)), std::move(c));
}

LaurentPoly q_factorial_laurent(long m) {
    if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
    LaurentPoly acc(mpz_class(1));
    for (long k = 2; k <= m; ++k) acc = acc * q_integer_laurent(k);
    return acc;
}

LaurentPoly q_binomial_laurent(long r, long m) {
    if (m < 0) throw std::invalid_argument("q_binomial: negative lower index");
    LaurentPoly num(mpz_class(1));
    for (long p = 0; p < m; ++p) num = num * q_integer_laurent(r - p);
    return poly_divexact(num, q_factorial_laurent(m));
}

namespace {

Scalar from_laurent(const LaurentPoly& p, const Field& f) {
    RationalFunction r(p);
    if (f.is_generic()) return Scalar(r);
    return Scalar(specialize(r, f.l()));
}

}  // namespace

Scalar q_integer(long r, const Field& f) { return from_laurent(q_integer_laurent(r), f); }
Scalar q_factorial(long m, const Field& f) { return from_laurent(q_factorial_laurent(m), f); }
Scalar q_binomial(long r, long m, const Field& f) { return from_laurent(q_binomial_laurent(r, m), f); }

// ---------------------------------------------------------------- specialization

namespace {

CycloNumber image(const LaurentPoly& p, const std::shared_ptr<const CycloContext>& ctx) {
    std::vector<mpq_class> acc(static_cast<std::size_t>(ctx->l));
    long l = ctx->l;
    for (std::size_t k = 0; k < p.length(); ++k) {
        if (p.coeffs()[k] == 0) continue;
        long e = p.low() + static_cast<long>(k);
        auto r = static_cast<std::size_t>(((e % l) + l) % l);
        acc[r] += p.coeffs()[k];
    }
    return CycloNumber(ctx, std::move(acc));
}

}  // namespace

CycloNumber specialize(const RationalFunction& s, int l) {
    if (s.grid() != 1)
        throw FractionalExponentLeak("cannot specialize " + s.to_string() + ": fractional q-exponents");
    auto ctx = cyclo_context(l);
    CycloNumber den = image(s.den(), ctx);
    if (den.is_zero())
        throw DenominatorVanishesAtRootOfUnity("denominator of " + s.to_string() + " vanishes at eps_" +
                                               std::to_string(l));
    CycloNumber num = image(s.num(), ctx);
    if (s.is_laurent()) {
        mpq_class inv(mpz_class(1), s.den().lead());
        inv.canonicalize();
        std::vector<mpq_class> c = num.coeffs();
        for (auto& x : c) x *= inv;
        return CycloNumber(ctx, std::move(c));
    }
    return num * den.inverse();
}

Scalar specialize(const Scalar& s, int l) {
    if (!s.is_generic()) {
        if (s.cyc().context().l != l) throw ContextMismatch("value already lives in " + s.field().name());
        return s;
    }
    return Scalar(specialize(s.rf(), l));
}

RationalFunction lift(const CycloNumber& c) {
    mpz_class d = 1;
    for (const auto& x : c.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> num;
    for (const auto& x : c.coeffs()) num.push_back(x.get_num() * (d / x.get_den()));
    return RationalFunction(LaurentPoly(0, std::move(num)), LaurentPoly(d));
}

}  // namespace qloop
