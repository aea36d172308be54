#include "qloop/dpoly.hpp"

#include "qloop/error.hpp"

#include <algorithm>

namespace qloop {

namespace {

using Poly = std::vector<Scalar>;

Poly poly_mul(const Poly& a, const Poly& b, const Field& f) {
    Poly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return r;
}

Poly scale_argument(const Poly& p, const Scalar& s) {
    Poly r = p;
    Scalar pw = s.field().one();
    for (auto& c : r) {
        c *= pw;
        pw *= s;
    }
    return r;
}

void require_nonzero(const Scalar& a) {
    if (a.is_zero()) throw ZeroSpectralParameter("spectral parameter must be nonzero");
}

}  // namespace

Poly poly_from_roots(const std::vector<Scalar>& roots, const Field& f) {
    Poly p{f.one()};
    for (const auto& a : roots) p = poly_mul(p, Poly{f.one(), -a}, f);
    return p;
}

DrinfeldPoly DrinfeldPoly::trivial(int n, const Field& f) {
    DrinfeldPoly p;
    p.n = n;
    p.field = f;
    p.polys.assign(static_cast<std::size_t>(n), Poly{f.one()});
    p.inverse_roots.assign(static_cast<std::size_t>(n), std::vector<Scalar>{});
    return p;
}

DrinfeldPoly DrinfeldPoly::from_roots(int n, const Field& f, const std::vector<std::vector<Scalar>>& roots) {
    DrinfeldPoly p = trivial(n, f);
    for (int i = 1; i <= n; ++i) {
        const auto& r = roots.at(static_cast<std::size_t>(i - 1));
        for (const auto& a : r) require_nonzero(a);
        p.polys[static_cast<std::size_t>(i - 1)] = poly_from_roots(r, f);
        p.inverse_roots[static_cast<std::size_t>(i - 1)] = r;
    }
    return p;
}

Weight DrinfeldPoly::degree_weight() const {
    Weight w = Weight::zero(n);
    for (int i = 1; i <= n; ++i) w.coeffs[static_cast<std::size_t>(i - 1)] = degree(i);
    return w;
}

bool operator==(const DrinfeldPoly& a, const DrinfeldPoly& b) { return a.n == b.n && a.polys == b.polys; }

DrinfeldPoly operator*(const DrinfeldPoly& a, const DrinfeldPoly& b) {
    if (a.n != b.n) throw std::invalid_argument("Drinfeld polynomial product: rank mismatch");
    if (a.field != b.field) throw ContextMismatch("Drinfeld polynomial product across fields");
    DrinfeldPoly r = a;
    for (std::size_t k = 0; k < r.polys.size(); ++k) {
        r.polys[k] = poly_mul(a.polys[k], b.polys[k], a.field);
        if (a.inverse_roots[k] && b.inverse_roots[k]) {
            auto roots = *a.inverse_roots[k];
            roots.insert(roots.end(), b.inverse_roots[k]->begin(), b.inverse_roots[k]->end());
            r.inverse_roots[k] = std::move(roots);
        } else {
            r.inverse_roots[k].reset();
        }
    }
    return r;
}

std::string DrinfeldPoly::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < polys.size(); ++k) {
        if (k) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < polys[k].size(); ++j) s += (j ? "; " : "") + polys[k][j].to_string();
        s += "]";
    }
    return s + ")";
}

DrinfeldPoly fundamental_poly(int xi, const Scalar& a, int n) {
    if (xi < 1 || xi > n) throw std::out_of_range("fundamental_poly: xi outside 1..n");
    require_nonzero(a);
    std::vector<std::vector<Scalar>> roots(static_cast<std::size_t>(n));
    roots[static_cast<std::size_t>(xi - 1)].push_back(a);
    return DrinfeldPoly::from_roots(n, a.field(), roots);
}

DrinfeldPoly kr_poly(int i, const Scalar& a, int lambda, int n) {
    if (lambda < 0) throw std::invalid_argument("kr_poly: negative length");
    require_nonzero(a);
    Field f = a.field();
    std::vector<std::vector<Scalar>> roots(static_cast<std::size_t>(n));
    for (int k = 1; k <= lambda; ++k) roots[static_cast<std::size_t>(i - 1)].push_back(a * f.qpow(lambda - 2 * k + 1));
    return DrinfeldPoly::from_roots(n, f, roots);
}

DrinfeldPoly pi_minus(const DrinfeldPoly& p) {
    DrinfeldPoly r = p;
    for (std::size_t k = 0; k < p.polys.size(); ++k) {
        Poly rev(p.polys[k].rbegin(), p.polys[k].rend());
        Scalar inv = rev[0].inverse();
        for (auto& c : rev) c *= inv;
        r.polys[k] = std::move(rev);
        if (p.inverse_roots[k]) {
            std::vector<Scalar> roots;
            for (const auto& a : *p.inverse_roots[k]) roots.push_back(a.inverse());
            r.inverse_roots[k] = std::move(roots);
        }
    }
    return r;
}

std::vector<Scalar> psi_series(const DrinfeldPoly& p, int i, SeriesSide side, int N) {
    if (N < 0) throw std::invalid_argument("psi_series: negative order");
    const Field& f = p.field;
    const Poly& pi = p.slot(i);
    int d = static_cast<int>(pi.size()) - 1;
    Poly num = scale_argument(pi, f.qpow(-2));
    for (auto& c : num) c *= f.qpow(d);
    Poly den = pi;
    if (side == SeriesSide::Infinity) {
        std::reverse(num.begin(), num.end());
        std::reverse(den.begin(), den.end());
    }
    Scalar inv0 = den[0].inverse();
    std::vector<Scalar> s;
    for (int k = 0; k <= N; ++k) {
        Scalar acc = static_cast<std::size_t>(k) < num.size() ? num[static_cast<std::size_t>(k)] : f.zero();
        for (int j = 1; j <= k && static_cast<std::size_t>(j) < den.size(); ++j)
            acc -= den[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
        s.push_back(acc * inv0);
    }
    return s;
}

int la_bracket(const Weight& lambda, int i) {
    int s = -i;
    for (int k = 1; k < i; ++k) s -= lambda[k];
    for (int k = i + 1; k <= lambda.rank(); ++k) s += lambda[k];
    return s;
}

std::pair<DrinfeldPoly, DrinfeldPoly> l_acyclic_split(const DrinfeldPoly& p, int l) {
    if (p.field.is_generic() || p.field.l() != l)
        throw ContextMismatch("l_acyclic_split needs coefficients in Q(eps_" + std::to_string(l) + ")");
    const Field& f = p.field;
    std::vector<std::vector<Scalar>> acyclic(static_cast<std::size_t>(p.n)), cyclic(static_cast<std::size_t>(p.n));
    Scalar eps = f.qpow(1);
    for (std::size_t k = 0; k < p.polys.size(); ++k) {
        if (!p.inverse_roots[k] || poly_from_roots(*p.inverse_roots[k], f) != p.polys[k])
            throw NotSplitOverField("slot " + std::to_string(k + 1) + " has no known factorization into 1 - a t");
        std::vector<Scalar> pool = *p.inverse_roots[k];
        bool found = true;
        while (found) {
            found = false;
            for (std::size_t s = 0; s < pool.size() && !found; ++s) {
                // try to remove c, c eps, ..., c eps^{l-1}
                std::vector<Scalar> rest = pool;
                Scalar c = pool[s];
                bool full = true;
                for (int j = 0; j < l && full; ++j) {
                    Scalar target = c * eps.pow(j);
                    auto it = std::find(rest.begin(), rest.end(), target);
                    if (it == rest.end()) full = false;
                    else rest.erase(it);
                }
                if (full) {
                    for (int j = 0; j < l; ++j) cyclic[k].push_back(c * eps.pow(j));
                    pool = std::move(rest);
                    found = true;
                }
            }
        }
        acyclic[k] = std::move(pool);
    }
    return {DrinfeldPoly::from_roots(p.n, f, acyclic), DrinfeldPoly::from_roots(p.n, f, cyclic)};
}

DrinfeldPoly dual_transform(const DrinfeldPoly& p, int c) {
    DrinfeldPoly r = p;
    Scalar s = p.field.qpow(c);
    for (int i = 1; i <= p.n; ++i) {
        auto src = static_cast<std::size_t>(p.n - i);
        auto dst = static_cast<std::size_t>(i - 1);
        r.polys[dst] = scale_argument(p.polys[src], s);
        r.inverse_roots[dst].reset();
        if (p.inverse_roots[src]) {
            std::vector<Scalar> roots;
            for (const auto& a : *p.inverse_roots[src]) roots.push_back(a * s);
            r.inverse_roots[dst] = std::move(roots);
        }
    }
    return r;
}

DrinfeldPoly omega_transform(const DrinfeldPoly& p, const Scalar& kappa) {
    DrinfeldPoly m = pi_minus(p);
    DrinfeldPoly r = m;
    Scalar s = p.field.qpow(2) * kappa;
    for (int i = 1; i <= p.n; ++i) {
        auto src = static_cast<std::size_t>(p.n - i);
        auto dst = static_cast<std::size_t>(i - 1);
        r.polys[dst] = scale_argument(m.polys[src], s);
        r.inverse_roots[dst].reset();
        if (m.inverse_roots[src]) {
            std::vector<Scalar> roots;
            for (const auto& a : *m.inverse_roots[src]) roots.push_back(a * s);
            r.inverse_roots[dst] = std::move(roots);
        }
    }
    return r;
}

}  // namespace qloop
