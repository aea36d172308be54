#pragma once

#include "qloop/module.hpp"

#include <string>
#include <vector>

namespace qloop {

// All xi-element subsets of {1..n+1} in lexicographic order.
std::vector<ColumnSet> column_sets(int n, int xi);
Weight column_weight(const ColumnSet& J, int n);
ColumnSet highest_column(int xi);

// Finite-type part (nodes 1..n) of the fundamental module on xi-subsets, over Q(q).
ModuleRep build_subset_module(int n, int xi);

// Factor relating the second displayed E_0 constant a q^{n-1} (-1)^xi to the one realized by the
// evaluation homomorphism: -q^2 on E_0 and its inverse on F_0.
Scalar closed_form_normalization(const Field& f);

// Adds nodes 0 with E_0 J = c a (J \ {1}) + {n+1}, F_0 J = c^{-1} a^{-1} (J \ {n+1}) + {1}, where
// c = q^{n-1} (-1)^xi, times closed_form_normalization() unless raw is set.
ModuleRep attach_affine_closed_form(const ModuleRep& m, const Scalar& a, bool raw = false);

// E_0, F_0 pulled back along the evaluation map with sign +1 or -1; parameter convention
// V_a = V^+_{a q^xi} = V^-_{a q^-xi}.
ModuleRep evaluation_action(const ModuleRep& m, const Scalar& a, int sign);

// Fundamental evaluation module V(Lambda_xi)_a with its Drinfeld polynomial recorded.
ModuleRep fundamental_module(int n, int xi, const Scalar& a);

// Exponent of q in K'_{Lambda_i} on weight mu, as numerator over n+1.
long kprime_numerator(int i, const Weight& mu);

// Weyl-orbit realization: basis z_mu (labels hold the weight coordinates), finite part only.
ModuleRep orbit_module(int n, int xi);

// F-divided powers along a reduced word applied to the highest-weight vector of m.
Vector extremal_vector(const ModuleRep& m, const ReducedWord& w, const Weight& lambda);
// Closed-form column set reached by omega_{i,j} from the highest column of V(Lambda_xi).
ColumnSet extremal_closed_form(int n, int xi, int i, int j);

struct RelationCheck {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_passed() const;
    std::vector<std::string> failures() const;
};

RelationReport verify_defining_relations(const ModuleRep& m);

}  // namespace qloop
