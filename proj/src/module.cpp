#include "qloop/module.hpp"

#include "qloop/error.hpp"

#include <stdexcept>

namespace qloop {

std::string flavor_name(Flavor f) {
    switch (f) {
    case Flavor::Generic: return "generic";
    case Flavor::Restricted: return "restricted";
    case Flavor::Small: return "small";
    }
    return "?";
}

std::string GenKey::to_string() const {
    std::string s;
    switch (kind) {
    case GenKind::E: s = "E"; break;
    case GenKind::F: s = "F"; break;
    case GenKind::K: s = "K"; break;
    case GenKind::Kinv: s = "Kinv"; break;
    case GenKind::KBinom: s = "Kbinom"; break;
    }
    s += std::to_string(index);
    if ((kind == GenKind::E || kind == GenKind::F) && power != 1) s += "^(" + std::to_string(power) + ")";
    return s;
}

std::string label_string(const Label& l) {
    std::string s;
    for (std::size_t k = 0; k < l.size(); ++k) {
        if (k) s += "x";
        s += "{";
        for (std::size_t j = 0; j < l[k].size(); ++j) s += (j ? "," : "") + std::to_string(l[k][j]);
        s += "}";
    }
    return s;
}

const Matrix& ModuleRep::gen(const GenKey& k) const {
    auto it = gens.find(k);
    if (it == gens.end()) throw std::out_of_range("module has no generator " + k.to_string());
    return it->second;
}

Matrix ModuleRep::divided(GenKind kind, int i, int m) const {
    if (m == 0) return Matrix::identity(field, dim());
    if (m > max_power) return Matrix(field, dim(), dim());
    return gen({kind, i, m});
}

std::vector<int> ModuleRep::nodes() const {
    std::vector<int> out;
    if (affine) out.push_back(0);
    for (int i = 1; i <= n; ++i) out.push_back(i);
    return out;
}

std::size_t ModuleRep::index_of(const Label& label) const {
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k] == label) return k;
    throw std::out_of_range("label " + label_string(label) + " not in basis");
}

void attach_cartan_binomials(ModuleRep& m) {
    if (m.field.is_generic()) throw ContextMismatch("Cartan binomials need a cyclotomic field");
    int l = m.field.l();
    for (int i = 1; i <= m.n; ++i) {
        std::vector<Scalar> diag;
        for (const auto& w : m.weights) diag.push_back(specialize(RationalFunction(q_binomial_laurent(w[i], l)), l));
        m.gens[{GenKind::KBinom, i, 1}] = Matrix::diagonal(m.field, diag);
    }
}

}  // namespace qloop
