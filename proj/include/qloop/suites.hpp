#pragma once

#include "qloop/criterion.hpp"
#include "qloop/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qloop {

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// Relations on V(Lambda_xi)_a for every xi <= n, plus agreement of the closed-form E_0/F_0 with the
// evaluation construction (both signs). only_xi > 0 restricts to that node.
SuiteReport relations_suite(const std::vector<int>& ns, const std::vector<Scalar>& as, int only_xi = 0);
// F-words along omega_{i,j} against the closed-form subset and the orbit realization, all xi, 1 <= i <= j <= n.
SuiteReport extremal_suite(const std::vector<int>& ns, int only_xi = 0);
// R commutes with every generator for all (xi, zeta) at `points` seeded random (a, b).
SuiteReport intertwiner_suite(int n, std::uint64_t seed, int points);
// Rank of the polynomial R on the generic ratio grid: deficient (and nonzero) exactly where the criterion fails.
SuiteReport resonance_suite(int n);
// Laplace expansion of the A-matrix against the closed form, `trials` draws of distinct q-powers per size.
SuiteReport deta_suite(std::uint64_t seed, int trials, int max_size);
// specialize commutes with tensor products and duals, exactly, on the two-factor modules of the eps grid.
SuiteReport specialization_suite(int n, int l);

// Ratio set b/a swept by the grids: q^e with |e| <= 2n+3 plus 2 and 3q, or eps^e for 0 <= e < l plus 2.
std::vector<Scalar> grid_ratios(int n, const CriterionMode& mode);

struct GridRow {
    int xi = 0, zeta = 0;
    Scalar ratio;
    bool predicted = false;
    bool verdict = false;
    std::string strategy;
    bool agrees() const { return predicted == verdict; }
};

struct GridReport {
    int n = 0;
    CriterionMode mode;
    std::vector<GridRow> rows;
    std::size_t disagreements() const;
};

// V(Lambda_xi)_1 (x) V(Lambda_zeta)_r for all xi, zeta and every grid ratio r; oracle against criterion.
GridReport criterion_grid(int n, const CriterionMode& mode, const OracleOptions& opts = {});

}  // namespace qloop
