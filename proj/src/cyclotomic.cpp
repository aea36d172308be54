#include "qloop/error.hpp"
#include "qloop/scalar.hpp"

#include <map>
#include <mutex>

namespace qloop {

namespace {

LaurentPoly cyclotomic_poly(int l) {
    std::vector<mpz_class> c(static_cast<std::size_t>(l) + 1);
    c[0] = -1;
    c[static_cast<std::size_t>(l)] = 1;
    LaurentPoly p(0, std::move(c));
    for (int d = 1; d < l; ++d)
        if (l % d == 0) p = poly_divexact(p, cyclotomic_poly(d));
    return p;
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub_mul(const QPoly& a, const mpq_class& c, const QPoly& b, std::size_t shift) {
    QPoly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift);
    for (std::size_t k = 0; k < b.size(); ++k) r[k + shift] -= c * b[k];
    trim(r);
    return r;
}

// Quotient and remainder over Q[x].
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    QPoly q;
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        if (q.size() < shift + 1) q.resize(shift + 1);
        q[shift] = c;
        a = sub_mul(a, c, b, shift);
    }
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    trim(r);
    return r;
}

}  // namespace

std::shared_ptr<const CycloContext> cyclo_context(int l) {
    if (l < 3 || l % 2 == 0)
        throw ContextMismatch("root-of-unity order must be odd and at least 3, got " + std::to_string(l));
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;

    auto ctx = std::make_shared<CycloContext>();
    ctx->l = l;
    LaurentPoly phi = cyclotomic_poly(l);
    ctx->phi = phi.high();
    for (int k = 0; k <= phi.high(); ++k) ctx->modulus.push_back(phi.coeff(k));
    auto n = static_cast<std::size_t>(ctx->phi);
    std::vector<mpz_class> cur(n);
    cur[0] = 1;
    for (int r = 0; r < l; ++r) {
        ctx->eps_powers.push_back(cur);
        // multiply by x and reduce with the monic modulus
        mpz_class top = cur[n - 1];
        for (std::size_t k = n - 1; k > 0; --k) cur[k] = cur[k - 1];
        cur[0] = 0;
        for (std::size_t k = 0; k < n; ++k) cur[k] -= top * ctx->modulus[k];
    }
    cache.emplace(l, ctx);
    return ctx;
}

CycloNumber::CycloNumber(std::shared_ptr<const CycloContext> ctx)
    : ctx_(std::move(ctx)), c_(static_cast<std::size_t>(ctx_->phi)) {}

CycloNumber::CycloNumber(std::shared_ptr<const CycloContext> ctx, std::vector<mpq_class> coeffs)
    : ctx_(std::move(ctx)) {
    auto n = static_cast<std::size_t>(ctx_->phi);
    c_.assign(n, mpq_class(0));
    // reduce arbitrary-length input: x^k = x^(k mod l), then use the power table
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (k < n) {
            c_[k] += coeffs[k];
            continue;
        }
        const auto& row = ctx_->eps_powers[k % static_cast<std::size_t>(ctx_->l)];
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] != 0) c_[j] += coeffs[k] * row[j];
    }
    for (auto& x : c_) x.canonicalize();
}

CycloNumber CycloNumber::eps_power(std::shared_ptr<const CycloContext> ctx, long e) {
    long l = ctx->l;
    long r = ((e % l) + l) % l;
    CycloNumber out(ctx);
    const auto& row = ctx->eps_powers[static_cast<std::size_t>(r)];
    for (std::size_t j = 0; j < row.size(); ++j) out.c_[j] = row[j];
    return out;
}

bool CycloNumber::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloNumber::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

void CycloNumber::check(const CycloNumber& other) const {
    if (ctx_->l != other.ctx_->l)
        throw ContextMismatch("cyclotomic orders " + std::to_string(ctx_->l) + " and " +
                              std::to_string(other.ctx_->l));
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    a.check(b);
    CycloNumber r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
    a.check(b);
    CycloNumber r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
    return r;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    a.check(b);
    std::size_t n = a.c_.size();
    std::vector<mpq_class> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return CycloNumber(a.ctx_, std::move(prod));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    return a.ctx_->l == b.ctx_->l && a.c_ == b.c_;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(eps)");
    // extended Euclid: track s with s*a == r (mod Phi)
    QPoly m;
    for (const auto& x : ctx_->modulus) m.emplace_back(x);
    QPoly a = c_;
    trim(a);
    QPoly r0 = m, r1 = a, s0, s1{mpq_class(1)};
    while (r1.size() > 1) {
        auto [q, rem] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant since Phi is irreducible and a != 0 mod Phi
    mpq_class c = r1[0];
    for (auto& x : s1) x /= c;
    return CycloNumber(ctx_, s1);
}

std::string CycloNumber::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const mpq_class& c = c_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        mpq_class mag = abs(c);
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        std::string pw = k == 0 ? "" : (k == 1 ? "e" : "e^" + std::to_string(k));
        if (pw.empty()) out += mag.get_str();
        else if (mag == 1) out += pw;
        else out += mag.get_str() + "*" + pw;
    }
    return out.empty() ? "0" : out;
}

}  // namespace qloop
