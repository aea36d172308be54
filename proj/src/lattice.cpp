#include "qloop/lattice.hpp"

#include "qloop/error.hpp"

#include <algorithm>
#include <set>

namespace qloop {

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t k = 0; k < coeffs.size(); ++k) r.coeffs[k] += o.coeffs.at(k);
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t k = 0; k < coeffs.size(); ++k) r.coeffs[k] -= o.coeffs.at(k);
    return r;
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(int c) const {
    Weight r = *this;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

std::string Weight::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += (k ? "," : "") + std::to_string(coeffs[k]);
    return s + "]";
}

int cartan_entry(int i, int j, int n) {
    if (n < 1) throw InvalidRank("rank must be at least 1");
    if (i < 0 || j < 0 || i > n || j > n) throw std::out_of_range("cartan_entry: index outside 0..n");
    if (i == j) return 2;
    if (n == 1) return -2;
    int d = std::abs(i - j);
    return (d == 1 || d == n) ? -1 : 0;
}

Weight fundamental_weight(int i, int n) {
    Weight w = Weight::zero(n);
    w.coeffs.at(static_cast<std::size_t>(i - 1)) = 1;
    return w;
}

Weight simple_root(int i, int n) {
    Weight w = Weight::zero(n);
    for (int j = 1; j <= n; ++j) w.coeffs[static_cast<std::size_t>(j - 1)] = cartan_entry(j, i, n);
    return w;
}

std::vector<mpq_class> fundamental_in_alpha(int i, int n) {
    // (n-i+1) sum_{k<=i} k alpha_k + i sum_{k>i} (n-k+1) alpha_k, all over n+1
    std::vector<mpq_class> c(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        long num = k <= i ? static_cast<long>(n - i + 1) * k : static_cast<long>(i) * (n - k + 1);
        c[static_cast<std::size_t>(k - 1)] = mpq_class(num, n + 1);
        c[static_cast<std::size_t>(k - 1)].canonicalize();
    }
    return c;
}

std::vector<mpq_class> to_alpha_basis(const Weight& mu) {
    int n = mu.rank();
    std::vector<mpq_class> out(static_cast<std::size_t>(n), mpq_class(0));
    for (int i = 1; i <= n; ++i) {
        if (mu[i] == 0) continue;
        auto f = fundamental_in_alpha(i, n);
        for (std::size_t k = 0; k < f.size(); ++k) out[k] += mu[i] * f[k];
    }
    return out;
}

Weight from_alpha_basis(const std::vector<int>& c, int n) {
    Weight w = Weight::zero(n);
    for (int i = 1; i <= n; ++i) w = w + simple_root(i, n).scaled(c.at(static_cast<std::size_t>(i - 1)));
    return w;
}

int positive_root_pairing(const Weight& mu, int i, int j) {
    int s = 0;
    for (int k = i; k <= j; ++k) s += mu[k];
    return s;
}

bool is_dominant(const Weight& mu) {
    return std::all_of(mu.coeffs.begin(), mu.coeffs.end(), [](int x) { return x >= 0; });
}

Weight reflect(const Weight& mu, int i) { return mu - simple_root(i, mu.rank()).scaled(mu[i]); }

bool dominance_leq(const Weight& nu, const Weight& nu_prime) {
    if (nu.rank() != nu_prime.rank()) throw std::invalid_argument("dominance_leq: rank mismatch");
    for (const auto& c : to_alpha_basis(nu_prime - nu))
        if (c.get_den() != 1 || c < 0) return false;
    return true;
}

std::vector<Weight> weyl_orbit(int xi, int n) {
    if (n < 1) throw InvalidRank("rank must be at least 1");
    if (xi < 1 || xi > n) throw std::out_of_range("weyl_orbit: xi outside 1..n");
    std::set<Weight> seen{fundamental_weight(xi, n)};
    std::vector<Weight> frontier{fundamental_weight(xi, n)};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& mu : frontier)
            for (int i = 1; i <= n; ++i) {
                Weight nu = reflect(mu, i);
                if (seen.insert(nu).second) next.push_back(nu);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<int> ReducedWord::exponents(const Weight& lambda) const {
    std::vector<int> m(letters.size());
    Weight mu = lambda;
    for (std::size_t k = letters.size(); k-- > 0;) {
        m[k] = mu[letters[k]];
        mu = reflect(mu, letters[k]);
    }
    return m;
}

Weight ReducedWord::apply(const Weight& mu) const {
    Weight r = mu;
    for (std::size_t k = letters.size(); k-- > 0;) r = reflect(r, letters[k]);
    return r;
}

ReducedWord omega_word(int i, int j) {
    if (i < 1 || j < i) throw std::out_of_range("omega_word: need 1 <= i <= j");
    ReducedWord w;
    for (int k = i; k <= j; ++k) w.letters.push_back(k);
    for (int t = j - 1; t >= 1; --t)
        for (int k = 1; k <= t; ++k) w.letters.push_back(k);
    return w;
}

mpz_class weyl_dimension(const Weight& lambda) {
    int n = lambda.rank();
    mpq_class d = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            long num = positive_root_pairing(lambda, i, j) + (j - i + 1);
            d *= mpq_class(num, j - i + 1);
        }
    d.canonicalize();
    return d.get_num();
}

}  // namespace qloop
