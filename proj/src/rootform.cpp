#include "qloop/rootform.hpp"

#include "qloop/error.hpp"
#include "qloop/fundrep.hpp"
#include "qloop/tensor.hpp"

#include <set>

namespace qloop {

namespace {

int floor_div(int a, int l) { return a >= 0 ? a / l : -((-a + l - 1) / l); }

Scalar specialize_entry(const Scalar& s, int l, const std::string& where) {
    if (!s.is_generic()) throw ContextMismatch(where + ": entry is already cyclotomic");
    if (!s.rf().is_laurent()) throw NonIntegralEntry(where + ": entry " + s.to_string() + " is not a Laurent polynomial");
    return specialize(s, l);
}

int check_parameters(const std::vector<int>& xis, const std::vector<Scalar>& as) {
    if (as.empty() || xis.size() != as.size()) throw std::invalid_argument("one parameter per factor expected");
    Field f = as[0].field();
    if (f.is_generic()) throw ContextMismatch("root-of-unity parameters must lie in Q(eps)");
    return f.l();
}

ModuleRep restricted_tensor(int n, const std::vector<int>& xis, const std::vector<Scalar>& as) {
    std::vector<ModuleRep> factors;
    for (std::size_t k = 0; k < xis.size(); ++k) factors.push_back(restricted_fundamental(n, xis[k], as[k]));
    return tensor_product(factors);
}

RootVerdict finish(IrreducibilityVerdict v, CriterionResult c, int l) {
    RootVerdict r;
    r.collision_fallback = !v.weight_separated;
    r.agrees = v.irreducible == c.holds;
    r.l = l;
    r.l_flagged = !l_in_contract(l);
    if (r.l_flagged) v.transcript.push_back("l = " + std::to_string(l) + " is below the documented range l >= 5");
    r.verdict = std::move(v);
    r.prediction = std::move(c);
    return r;
}

}  // namespace

ModuleRep specialize_module(const ModuleRep& m, int l) {
    if (m.flavor != Flavor::Generic || !m.field.is_generic())
        throw FlavorMismatch("specialize_module expects a generic module");
    Field f = Field::cyclotomic(l);
    ModuleRep out = m;
    out.flavor = Flavor::Restricted;
    out.l = l;
    out.field = f;
    out.gens.clear();
    for (const auto& [key, g] : m.gens) {
        std::string where = "generator " + key.to_string();
        out.gens[key] = g.map(f, [&](const Scalar& s) { return specialize_entry(s, l, where); });
    }
    out.params.clear();
    for (const auto& a : m.params) out.params.push_back(specialize_entry(a, l, "spectral parameter"));
    out.dpoly.reset();
    if (m.dpoly) {
        std::vector<std::vector<Scalar>> roots;
        bool known = true;
        for (const auto& r : m.dpoly->inverse_roots) {
            if (!r) {
                known = false;
                break;
            }
            std::vector<Scalar> mapped;
            for (const auto& a : *r) mapped.push_back(specialize_entry(a, l, "Drinfeld root"));
            roots.push_back(std::move(mapped));
        }
        if (known) out.dpoly = DrinfeldPoly::from_roots(m.n, f, roots);
    }
    attach_cartan_binomials(out);
    return out;
}

ModuleRep small_form(const ModuleRep& m) {
    if (m.flavor != Flavor::Restricted) throw FlavorMismatch("small_form expects a restricted module");
    ModuleRep out = m;
    out.flavor = Flavor::Small;
    for (auto it = out.gens.begin(); it != out.gens.end();)
        if (it->first.kind == GenKind::KBinom) it = out.gens.erase(it);
        else ++it;
    return out;
}

RestrictedWeightData restricted_weight_table(const ModuleRep& m) {
    if (m.field.is_generic()) throw ContextMismatch("restricted weight data needs a cyclotomic field");
    int l = m.field.l();
    RestrictedWeightData t;
    t.l = l;
    for (std::size_t v = 0; v < m.dim(); ++v) {
        std::vector<int> res, lev;
        for (int i = 1; i <= m.n; ++i) {
            int mu = m.weights[v][i];
            int hi = floor_div(mu, l);
            int lo = mu - l * hi;
            if (m.K(i).at(v, v) != m.field.qpow(lo))
                throw std::logic_error("K_" + std::to_string(i) + " eigenvalue disagrees with the weight residue");
            GenKey bin{GenKind::KBinom, i, 1};
            if (m.has(bin) && m.gen(bin).at(v, v) != m.field.integer(hi))
                throw std::logic_error("Cartan binomial " + std::to_string(i) + " disagrees with the weight level");
            res.push_back(lo);
            lev.push_back(hi);
        }
        t.residue.push_back(std::move(res));
        t.level.push_back(std::move(lev));
    }
    return t;
}

bool restricted_weights_separated(const ModuleRep& m, const RestrictedWeightData& t) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen_pairs;
    std::set<Weight> seen_weights;
    for (std::size_t v = 0; v < m.dim(); ++v) {
        seen_pairs.insert({t.residue[v], t.level[v]});
        seen_weights.insert(m.weights[v]);
    }
    return seen_pairs.size() == seen_weights.size();
}

ModuleRep restricted_fundamental(int n, int xi, const Scalar& a) {
    if (a.is_zero()) throw ZeroSpectralParameter("spectral parameter must be nonzero");
    if (a.is_generic()) throw ContextMismatch("restricted_fundamental expects a parameter in Q(eps)");
    const Field f = a.field();
    ModuleRep m = specialize_module(fundamental_module(n, xi, Field::generic().one()), f.l());
    for (int p = 1; p <= m.max_power; ++p) {
        m.gens[{GenKind::E, 0, p}] = m.E(0, p).scaled(a.pow(p));
        m.gens[{GenKind::F, 0, p}] = m.F(0, p).scaled(a.pow(-p));
    }
    m.params = {a};
    m.dpoly = fundamental_poly(xi, a, n);
    return m;
}

bool l_in_contract(int l) { return l >= 5; }

RootVerdict restricted_tensor_and_oracle(int n, const std::vector<int>& xis, const std::vector<Scalar>& as,
                                         const OracleOptions& opts) {
    int l = check_parameters(xis, as);
    ModuleRep t = restricted_tensor(n, xis, as);
    OracleOptions o = opts;
    o.selector = Selector::Full;
    return finish(irreducible_oracle(t, o), criterion(n, xis, as, CriterionMode::epsilon(l)), l);
}

RootVerdict small_tensor_and_oracle(int n, const std::vector<int>& xis, const std::vector<Scalar>& as,
                                    OracleOptions opts) {
    int l = check_parameters(xis, as);
    ModuleRep t = small_form(restricted_tensor(n, xis, as));
    opts.selector = Selector::Small;
    return finish(irreducible_oracle(t, opts), criterion(n, xis, as, CriterionMode::small(l)), l);
}

}  // namespace qloop
