#pragma once

#include "qloop/matrix.hpp"

#include <string>
#include <vector>

namespace qloop {

struct CriterionMode {
    enum Kind { Generic, Epsilon, Small } kind = Generic;
    int l = 0;

    static CriterionMode generic() { return {}; }
    static CriterionMode epsilon(int l) { return {Epsilon, l}; }
    static CriterionMode small(int l) { return {Small, l}; }
    Field field() const;
    std::string to_string() const;
};

// Ordered pair (k, k2) of 1-based factor indices with a_k2 / a_k = q^{sign (2t + |xi_k - xi_k2|)}.
struct Violation {
    int k = 0, k2 = 0, t = 0, sign = 1;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct CriterionResult {
    bool holds = true;
    std::vector<Violation> violations;
};

// Closed-form irreducibility prediction for the tensor of V(Lambda_{xis[k]})_{as[k]}.
CriterionResult criterion(int n, const std::vector<int>& xis, const std::vector<Scalar>& as, CriterionMode mode);
// Same forbidden set written over max(xi, xi') <= t <= min(xi + xi' - 1, n).
bool sufficiency_condition(int n, const std::vector<int>& xis, const std::vector<Scalar>& as, CriterionMode mode);

// m x m matrix A_{r,s} = sum_{k<r} a_s^{r-k} d_{k,s}, d_{.,s} the series of prod_{p>s} (q + (q - q^-1) sum_j a_p^j u^j).
Matrix amatrix(const std::vector<Scalar>& as);
Scalar det_amatrix(const std::vector<Scalar>& as);
// (prod a_k) prod_{s<t} (q^-1 a_t - q a_s)
Scalar det_amatrix_closed_form(const std::vector<Scalar>& as);

}  // namespace qloop
