#pragma once

#include "qloop/fundrep.hpp"
#include "qloop/module.hpp"

#include <utility>
#include <vector>

namespace qloop {

struct PairComponent {
    int k = 0;
    Weight highest;  // Lambda_{xi+zeta-k} + Lambda_k, with Lambda_0 = Lambda_{n+1} = 0
    mpz_class dim;
};

// Summands of V(Lambda_xi) (x) V(Lambda_zeta) for k = max(0, xi+zeta-n-1) .. min(xi, zeta).
std::vector<PairComponent> decompose_pair(int xi, int zeta, int n);

// Highest-weight vector of the k-th summand in the basis of V(Lambda_xi) (x) V(Lambda_zeta).
Vector hw_vector(int xi, int zeta, int k, int n);

// Finite-type intertwiners Pbar_k : V(Lambda_xi) (x) V(Lambda_zeta) -> V(Lambda_zeta) (x) V(Lambda_xi)
// with Pbar_k w_{k'} = delta_{k,k'} w_k^{(zeta,xi)}.
struct ProjectorSet {
    int n = 0, xi = 0, zeta = 0, kmin = 0, kmax = 0;
    std::vector<Matrix> pbar;  // pbar[k - kmin]
    const Matrix& at(int k) const { return pbar.at(static_cast<std::size_t>(k - kmin)); }
};
ProjectorSet projectors(int xi, int zeta, int n);
Matrix projector(int xi, int zeta, int k, int n);

enum class RNormalization { Barred, Polynomial };
std::string normalization_name(RNormalization r);

struct RTerm {
    int k = 0;
    Scalar rho;
    Matrix P;
};

struct RData {
    int n = 0, xi = 0, zeta = 0;
    Scalar a, b;
    RNormalization normalization = RNormalization::Barred;
    std::vector<RTerm> terms;
    Matrix assembled;
};

// Barred: terms over k = kmin..kmax with rho_kmax = 1 and
//   rho_{k-1} / rho_k = (-1)^{xi-zeta} (a - q^{xi+zeta-2k+2} b) / (b - q^{xi+zeta-2k+2} a).
// Polynomial: terms j = 0..M, M = min(xi, zeta, n+1-xi, n+1-zeta), P_j = Pbar_{kmax-j},
//   rho_j = (-1)^{j(xi-zeta)} prod_{p<=j} (a - q^{2p+d} b) prod_{j<p<=M} (b - q^{2p+d} a), d = |xi - zeta|.
RData build_R(int xi, int zeta, const Scalar& a, const Scalar& b, int n, RNormalization norm,
              const ProjectorSet* cache = nullptr);
Matrix assemble_R(const std::vector<RTerm>& terms, std::size_t dim, const Field& f);
// prod_{p=1}^{M} (b - q^{2p+d} a): polynomial R = factor * barred R.
Scalar normalization_factor(int xi, int zeta, const Scalar& a, const Scalar& b, int n);

// R g = g R for every generator, comparing V_xi(a) (x) V_zeta(b) with V_zeta(b) (x) V_xi(a).
RelationReport verify_affine_intertwiner(const RData& r);

// (rank, kernel dimension) of the polynomial-normalized R.
std::pair<std::size_t, std::size_t> resonance_rank(int xi, int zeta, const Scalar& a, const Scalar& b, int n,
                                                   const ProjectorSet* cache = nullptr);

}  // namespace qloop
