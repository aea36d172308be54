#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qloop {

// Weight of sl_{n+1} in the fundamental-weight basis; coeffs[i-1] = <mu, alpha_i^vee>.
struct Weight {
    std::vector<int> coeffs;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coeffs(std::move(c)) {}
    static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int rank() const { return static_cast<int>(coeffs.size()); }
    // 1-based access by node index.
    int operator[](int i) const { return coeffs[static_cast<std::size_t>(i - 1)]; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(int c) const;
    auto operator<=>(const Weight& o) const = default;

    std::string to_string() const;
};

// Affine Cartan entry a_{i,j}, i, j in {0..n}; for n = 1 the off-diagonal entries are -2.
int cartan_entry(int i, int j, int n);

Weight fundamental_weight(int i, int n);
// Simple root alpha_i (i in 1..n) in the fundamental-weight basis.
Weight simple_root(int i, int n);
// Lambda_i in the simple-root basis; denominators divide n+1.
std::vector<mpq_class> fundamental_in_alpha(int i, int n);
std::vector<mpq_class> to_alpha_basis(const Weight& mu);
Weight from_alpha_basis(const std::vector<int>& c, int n);

// Pairing with the coroot of the positive root alpha_i + ... + alpha_j.
int positive_root_pairing(const Weight& mu, int i, int j);
bool is_dominant(const Weight& mu);
Weight reflect(const Weight& mu, int i);
// nu <= nu' iff nu' - nu is a nonnegative integer combination of simple roots.
bool dominance_leq(const Weight& nu, const Weight& nu_prime);

// Orbit of Lambda_xi under the Weyl group, sorted lexicographically.
std::vector<Weight> weyl_orbit(int xi, int n);

struct ReducedWord {
    std::vector<int> letters;  // w = s_{letters[0]} s_{letters[1]} ...

    std::size_t length() const { return letters.size(); }
    // m_k = <s_{k+1} ... s_last lambda, alpha_{letters[k]}^vee>.
    std::vector<int> exponents(const Weight& lambda) const;
    Weight apply(const Weight& mu) const;
};

// (s_i s_{i+1} ... s_j)(s_1 ... s_{j-1})(s_1 ... s_{j-2}) ... (s_1 s_2)(s_1)
ReducedWord omega_word(int i, int j);

// Weyl dimension formula for sl_{n+1}.
mpz_class weyl_dimension(const Weight& lambda);

}  // namespace qloop
