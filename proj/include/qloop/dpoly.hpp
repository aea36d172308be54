#pragma once

#include "qloop/lattice.hpp"
#include "qloop/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qloop {

// n-tuple of polynomials in t with constant term 1. When a slot was assembled from
// linear factors, its inverse roots (the a with factor 1 - a t) are kept alongside.
struct DrinfeldPoly {
    int n = 0;
    Field field = Field::generic();
    std::vector<std::vector<Scalar>> polys;  // polys[i-1][k] = coefficient of t^k
    std::vector<std::optional<std::vector<Scalar>>> inverse_roots;

    static DrinfeldPoly trivial(int n, const Field& f);
    static DrinfeldPoly from_roots(int n, const Field& f, const std::vector<std::vector<Scalar>>& roots);

    const std::vector<Scalar>& slot(int i) const { return polys.at(static_cast<std::size_t>(i - 1)); }
    int degree(int i) const { return static_cast<int>(slot(i).size()) - 1; }
    Weight degree_weight() const;

    friend bool operator==(const DrinfeldPoly& a, const DrinfeldPoly& b);
    friend DrinfeldPoly operator*(const DrinfeldPoly& a, const DrinfeldPoly& b);
    std::string to_string() const;
};

DrinfeldPoly fundamental_poly(int xi, const Scalar& a, int n);
DrinfeldPoly kr_poly(int i, const Scalar& a, int lambda, int n);
DrinfeldPoly pi_minus(const DrinfeldPoly& p);

enum class SeriesSide { Zero, Infinity };
// First N+1 coefficients of q^{deg} pi_i(q^-2 u) / pi_i(u) around u = 0 or in u^{-1} around infinity.
std::vector<Scalar> psi_series(const DrinfeldPoly& p, int i, SeriesSide side, int N);

// lambda[i] = -sum_{k<i} lambda_k + sum_{k>i} lambda_k - i
int la_bracket(const Weight& lambda, int i);

// (pi0, pi1): pi0 has no full eps-cycle of inverse roots, pi1 is a polynomial in t^l.
std::pair<DrinfeldPoly, DrinfeldPoly> l_acyclic_split(const DrinfeldPoly& p, int l);

// (pi_n(s t), ..., pi_1(s t)) with s = q^c.
DrinfeldPoly dual_transform(const DrinfeldPoly& p, int c);
// (pi_n^-(q^2 kappa t), ..., pi_1^-(q^2 kappa t)).
DrinfeldPoly omega_transform(const DrinfeldPoly& p, const Scalar& kappa);

// Polynomial product of linear factors 1 - a t.
std::vector<Scalar> poly_from_roots(const std::vector<Scalar>& roots, const Field& f);

}  // namespace qloop
