#pragma once

#include "qloop/module.hpp"

#include <optional>
#include <vector>

namespace qloop {

// Left-nested tensor product through the divided-power coproduct
//   E^(m) -> sum_p q^{p(m-p)} E^(m-p) K^p (x) E^(p),  F^(m) -> sum_p q^{p(m-p)} F^(p) (x) F^(m-p) K^-p.
ModuleRep tensor_product(const std::vector<ModuleRep>& factors);
ModuleRep tensor_product(const ModuleRep& a, const ModuleRep& b);

// Contragredient module through the antipode: g acts by rho(S(g))^T.
ModuleRep dual_module(const ModuleRep& m);

// Pull-back through the involution with E_i -> -F_i, F_i -> -E_i, K_i -> K_i^{-1} on finite nodes and
// E_0 -> -q^{n+1} F_0, F_0 -> -q^{-(n+1)} E_0.
ModuleRep omega_module(const ModuleRep& m);

// Basis of Hom(a, b) commuting with every generator of a (weight-preserving maps only).
std::vector<Matrix> intertwiners(const ModuleRep& a, const ModuleRep& b);
std::optional<Matrix> find_isomorphism(const ModuleRep& a, const ModuleRep& b);

// Integer c with V(Lambda_xi)_a^* = V(Lambda_{n+1-xi})_{q^c a}, found by search over |c| <= 2(n+1).
int calibrate_dual_shift(int n, int xi);
// kappa = +-q^j, |j| <= 2(n+1), with V(Lambda_xi)_a^Omega = V(Lambda_{n+1-xi})_{q^2 kappa a^-1}.
Scalar calibrate_omega_scale(int n, int xi);

}  // namespace qloop
