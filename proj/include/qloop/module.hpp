#pragma once

#include "qloop/dpoly.hpp"
#include "qloop/lattice.hpp"
#include "qloop/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qloop {

enum class Flavor { Generic, Restricted, Small };
std::string flavor_name(Flavor f);

// E, F, K, K^{-1}; KBinom is the Cartan binomial [K_i; 0 over l] of the restricted form.
enum class GenKind { E, F, K, Kinv, KBinom };

struct GenKey {
    GenKind kind;
    int index;      // node in 0..n
    int power = 1;  // divided power for E/F, 1 otherwise
    auto operator<=>(const GenKey&) const = default;
    std::string to_string() const;
};

using ColumnSet = std::vector<int>;
// Basis label: one column set per tensor factor.
using Label = std::vector<ColumnSet>;
std::string label_string(const Label& l);

struct ModuleRep {
    int n = 0;
    Flavor flavor = Flavor::Generic;
    int l = 0;
    Field field = Field::generic();
    std::vector<Label> basis;
    std::vector<Weight> weights;
    std::map<GenKey, Matrix> gens;
    // Divided powers E^(m), F^(m) are stored for 1 <= m <= max_power and vanish beyond it.
    int max_power = 1;
    bool affine = false;
    bool dual = false;
    std::vector<int> xis;
    std::vector<Scalar> params;
    std::optional<DrinfeldPoly> dpoly;

    std::size_t dim() const { return basis.size(); }
    bool has(const GenKey& k) const { return gens.count(k) != 0; }
    const Matrix& gen(const GenKey& k) const;
    const Matrix& E(int i, int m = 1) const { return gen({GenKind::E, i, m}); }
    const Matrix& F(int i, int m = 1) const { return gen({GenKind::F, i, m}); }
    const Matrix& K(int i) const { return gen({GenKind::K, i, 1}); }
    const Matrix& Kinv(int i) const { return gen({GenKind::Kinv, i, 1}); }
    // E^(m) or F^(m) for any m >= 0: identity at 0, zero above max_power.
    Matrix divided(GenKind kind, int i, int m) const;
    // Nodes carrying generators: 1..n, plus 0 when affine.
    std::vector<int> nodes() const;
    std::size_t index_of(const Label& label) const;
};

// Sets Kbinom_i to the diagonal of [mu_i over l] at q = eps (restricted flavor, cyclotomic field).
void attach_cartan_binomials(ModuleRep& m);

}  // namespace qloop
