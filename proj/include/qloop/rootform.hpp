#pragma once

#include "qloop/criterion.hpp"
#include "qloop/module.hpp"
#include "qloop/oracle.hpp"

#include <vector>

namespace qloop {

// Entrywise q -> eps image of a generic module, as a restricted-flavor module with Cartan binomials.
ModuleRep specialize_module(const ModuleRep& m, int l);

// Same matrices read as a module over the small algebra (Chevalley generators only).
ModuleRep small_form(const ModuleRep& m);

// mu_i = residue_i + l * level_i with 0 <= residue_i < l, per basis vector.
struct RestrictedWeightData {
    int l = 0;
    std::vector<std::vector<int>> residue;
    std::vector<std::vector<int>> level;
};

// Read off from the weights and cross-checked against the K_i and Cartan binomial matrices.
RestrictedWeightData restricted_weight_table(const ModuleRep& m);
// Distinct integral weights give distinct (residue, level) pairs.
bool restricted_weights_separated(const ModuleRep& m, const RestrictedWeightData& t);

// V(Lambda_xi) at a parameter a in Q(eps): specialized at a = 1, then E_0^(k) scaled by a^k and F_0^(k) by a^-k.
ModuleRep restricted_fundamental(int n, int xi, const Scalar& a);

// l >= 5 is the documented range; l = 3 runs but is flagged.
bool l_in_contract(int l);

struct RootVerdict {
    IrreducibilityVerdict verdict;
    CriterionResult prediction;
    bool agrees = false;
    int l = 0;
    bool l_flagged = false;
    // Weight separation failed for the selector and the Norton fallback decided.
    bool collision_fallback = false;
};

RootVerdict restricted_tensor_and_oracle(int n, const std::vector<int>& xis, const std::vector<Scalar>& as,
                                         const OracleOptions& opts = {});
RootVerdict small_tensor_and_oracle(int n, const std::vector<int>& xis, const std::vector<Scalar>& as,
                                    OracleOptions opts = {});

}  // namespace qloop
