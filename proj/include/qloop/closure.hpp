#pragma once

#include "qloop/module.hpp"

#include <vector>

namespace qloop {

// Full: every stored generator (divided powers and Cartan binomials included).
// Small: E_i, F_i, K_i^{+-1} only.
enum class Selector { Full, Small };

std::vector<GenKey> selected_generators(const ModuleRep& m, Selector s);

// Joint-eigenvalue key of a basis vector under the diagonal generators picked by the selector:
// the full weight, or the weight mod l when only K_i is available over Q(eps).
std::vector<int> grading_key(const ModuleRep& m, std::size_t basis_index, Selector s);

struct Subspace {
    std::size_t ambient = 0;
    std::vector<Vector> basis;
    std::size_t dim() const { return basis.size(); }
    bool proper_nonzero() const { return !basis.empty() && basis.size() < ambient; }
};

// Smallest subspace containing the seeds and stable under the selected generators.
Subspace submodule_closure(const ModuleRep& m, const std::vector<Vector>& seeds, Selector s);
Subspace submodule_closure(const ModuleRep& m, const Vector& seed, Selector s);

bool is_invariant(const ModuleRep& m, const Subspace& w, Selector s);

// {v : f(v) = 0 for every f in w}, w read as functionals in the dual basis.
Subspace annihilator(const Subspace& w, const Field& f);

}  // namespace qloop
