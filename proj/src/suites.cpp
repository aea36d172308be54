#include "qloop/suites.hpp"

#include "qloop/error.hpp"
#include "qloop/fundrep.hpp"
#include "qloop/linalg.hpp"
#include "qloop/rmatrix.hpp"
#include "qloop/rootform.hpp"
#include "qloop/tensor.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

namespace qloop {

namespace {

std::string tag(int n, int xi) { return "n=" + std::to_string(n) + " xi=" + std::to_string(xi); }
std::string tag(int n, int xi, int zeta) { return tag(n, xi) + " zeta=" + std::to_string(zeta); }

bool same_module(const ModuleRep& a, const ModuleRep& b) {
    return a.basis == b.basis && a.weights == b.weights && a.gens == b.gens && a.max_power == b.max_power;
}

}  // namespace

SuiteReport relations_suite(const std::vector<int>& ns, const std::vector<Scalar>& as, int only_xi) {
    SuiteReport r{"relations", 0, {}};
    for (int n : ns)
        for (int xi = 1; xi <= n; ++xi)
            for (const auto& a : as) {
                if (only_xi > 0 && xi != only_xi) continue;
                std::string where = tag(n, xi) + " a=" + a.to_string();
                ModuleRep m = fundamental_module(n, xi, a);
                ++r.cases;
                for (const auto& f : verify_defining_relations(m).failures()) r.failures.push_back(where + ": " + f);
                for (int sign : {1, -1}) {
                    ++r.cases;
                    ModuleRep ev = evaluation_action(build_subset_module(n, xi), a, sign);
                    if (ev.E(0) != m.E(0) || ev.F(0) != m.F(0))
                        r.failures.push_back(where + ": evaluation construction (sign " + std::to_string(sign) +
                                             ") differs from the closed form");
                }
            }
    return r;
}

SuiteReport extremal_suite(const std::vector<int>& ns, int only_xi) {
    SuiteReport r{"extremal", 0, {}};
    for (int n : ns)
        for (int xi = 1; xi <= n; ++xi) {
            if (only_xi > 0 && xi != only_xi) continue;
            ModuleRep subset = build_subset_module(n, xi), orbit = orbit_module(n, xi);
            Weight lambda = fundamental_weight(xi, n);
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    ++r.cases;
                    ReducedWord w = omega_word(i, j);
                    std::string where = tag(n, xi) + " omega(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    Vector v = extremal_vector(subset, w, lambda);
                    Vector want = unit_vector(subset.field, subset.dim(), subset.index_of({extremal_closed_form(n, xi, i, j)}));
                    if (v != want) r.failures.push_back(where + ": subset realization differs from the closed form");
                    Weight mu = w.apply(lambda);
                    Vector vo = extremal_vector(orbit, w, lambda);
                    Vector want_o =
                        unit_vector(orbit.field, orbit.dim(), orbit.index_of({ColumnSet(mu.coeffs.begin(), mu.coeffs.end())}));
                    if (vo != want_o) r.failures.push_back(where + ": orbit realization differs from z at " + mu.to_string());
                    if (column_weight(extremal_closed_form(n, xi, i, j), n) != mu)
                        r.failures.push_back(where + ": closed-form subset has the wrong weight");
                }
        }
    return r;
}

SuiteReport intertwiner_suite(int n, std::uint64_t seed, int points) {
    SuiteReport r{"intertwiner", 0, {}};
    Field f = Field::generic();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> expo(-3, 3), pick(0, 4);
    const long coeffs[] = {1, 2, 3, 5, 7};
    for (int xi = 1; xi <= n; ++xi)
        for (int zeta = 1; zeta <= n; ++zeta) {
            ProjectorSet ps = projectors(xi, zeta, n);
            for (int p = 0; p < points; ++p) {
                Scalar a = f.qpow(expo(rng)) * coeffs[pick(rng)];
                Scalar b = f.qpow(expo(rng)) * coeffs[pick(rng)];
                std::string where = tag(n, xi, zeta) + " a=" + a.to_string() + " b=" + b.to_string();
                ++r.cases;
                for (const auto& fail : verify_affine_intertwiner(build_R(xi, zeta, a, b, n, RNormalization::Polynomial, &ps)).failures())
                    r.failures.push_back(where + " polynomial: " + fail);
                try {
                    RData barred = build_R(xi, zeta, a, b, n, RNormalization::Barred, &ps);
                    ++r.cases;
                    for (const auto& fail : verify_affine_intertwiner(barred).failures())
                        r.failures.push_back(where + " barred: " + fail);
                } catch (const ResonantDenominator&) {
                    // resonant point: only the polynomial form exists
                }
            }
        }
    return r;
}

SuiteReport resonance_suite(int n) {
    SuiteReport r{"resonance", 0, {}};
    Field f = Field::generic();
    for (int xi = 1; xi <= n; ++xi)
        for (int zeta = 1; zeta <= n; ++zeta) {
            ProjectorSet ps = projectors(xi, zeta, n);
            for (const auto& ratio : grid_ratios(n, CriterionMode::generic())) {
                ++r.cases;
                auto [rk, ker] = resonance_rank(xi, zeta, f.one(), ratio, n, &ps);
                std::size_t d = rk + ker;
                bool holds = criterion(n, {xi, zeta}, {f.one(), ratio}, CriterionMode::generic()).holds;
                std::string where = tag(n, xi, zeta) + " b/a=" + ratio.to_string() + " rank " + std::to_string(rk) + "/" +
                                    std::to_string(d);
                if (holds && rk != d) r.failures.push_back(where + ": rank drops at a non-resonant ratio");
                if (!holds && (rk == 0 || rk == d)) r.failures.push_back(where + ": rank not strictly between 0 and dim at resonance");
            }
            // at b = q^{-(2p0+d)} a the polynomial coefficients rho_j vanish for j >= p0
            int M = std::min({xi, zeta, n + 1 - xi, n + 1 - zeta}), d = std::abs(xi - zeta);
            for (int p0 = 1; p0 <= M; ++p0) {
                ++r.cases;
                RData R = build_R(xi, zeta, f.one(), f.qpow(-(2 * p0 + d)), n, RNormalization::Polynomial, &ps);
                for (const auto& t : R.terms)
                    if ((t.k >= p0) != t.rho.is_zero())
                        r.failures.push_back(tag(n, xi, zeta) + " p0=" + std::to_string(p0) + ": rho_" + std::to_string(t.k) +
                                             " = " + t.rho.to_string());
            }
        }
    return r;
}

SuiteReport deta_suite(std::uint64_t seed, int trials, int max_size) {
    SuiteReport r{"detA", 0, {}};
    Field f = Field::generic();
    std::mt19937_64 rng(seed);
    for (int m = 1; m <= max_size; ++m)
        for (int t = 0; t < trials; ++t) {
            std::vector<int> pool(13);
            std::iota(pool.begin(), pool.end(), -6);
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<Scalar> as;
            std::string where = "m=" + std::to_string(m) + " exponents";
            for (int s = 0; s < m; ++s) {
                as.push_back(f.qpow(pool[static_cast<std::size_t>(s)]));
                where += " " + std::to_string(pool[static_cast<std::size_t>(s)]);
            }
            ++r.cases;
            Scalar closed = det_amatrix_closed_form(as);
            if (cofactor_determinant(amatrix(as)) != closed) r.failures.push_back(where + ": cofactor expansion differs");
            if (det_amatrix(as) != closed) r.failures.push_back(where + ": elimination determinant differs");
        }
    return r;
}

SuiteReport specialization_suite(int n, int l) {
    SuiteReport r{"specialization", 0, {}};
    Field g = Field::generic(), e = Field::cyclotomic(l);
    std::vector<std::pair<Scalar, Scalar>> params;
    for (int k = 0; k < l; ++k) params.emplace_back(g.qpow(k), e.qpow(k));
    params.emplace_back(g.integer(2), e.integer(2));
    for (int xi = 1; xi <= n; ++xi)
        for (int zeta = 1; zeta <= n; ++zeta)
            for (const auto& [pg, pe] : params) {
                std::string where = tag(n, xi, zeta) + " l=" + std::to_string(l) + " b=" + pg.to_string();
                ModuleRep v1 = fundamental_module(n, xi, g.one()), v2 = fundamental_module(n, zeta, pg);
                ModuleRep s1 = specialize_module(v1, l), s2 = specialize_module(v2, l);
                ModuleRep t = tensor_product(v1, v2);
                ++r.cases;
                if (!same_module(specialize_module(t, l), tensor_product(s1, s2)))
                    r.failures.push_back(where + ": specialize(tensor) != tensor(specialize)");
                ++r.cases;
                if (!same_module(specialize_module(dual_module(t), l), dual_module(specialize_module(t, l))))
                    r.failures.push_back(where + ": specialize(dual) != dual(specialize)");
                ++r.cases;
                if (!same_module(restricted_fundamental(n, zeta, pe), s2))
                    r.failures.push_back(where + ": parameter rescaling differs from entrywise specialization");
            }
    return r;
}

std::vector<Scalar> grid_ratios(int n, const CriterionMode& mode) {
    Field f = mode.field();
    std::vector<Scalar> out;
    if (mode.kind == CriterionMode::Generic) {
        for (int e = -(2 * n + 3); e <= 2 * n + 3; ++e) out.push_back(f.qpow(e));
        out.push_back(f.integer(2));
        out.push_back(f.integer(3) * f.qpow(1));
    } else {
        for (int e = 0; e < mode.l; ++e) out.push_back(f.qpow(e));
        out.push_back(f.integer(2));
    }
    return out;
}

std::size_t GridReport::disagreements() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const GridRow& g) { return !g.agrees(); }));
}

GridReport criterion_grid(int n, const CriterionMode& mode, const OracleOptions& opts) {
    GridReport rep;
    rep.n = n;
    rep.mode = mode;
    Field f = mode.field();
    for (int xi = 1; xi <= n; ++xi)
        for (int zeta = 1; zeta <= n; ++zeta)
            for (const auto& ratio : grid_ratios(n, mode)) {
                GridRow row{xi, zeta, ratio, false, false, ""};
                std::vector<Scalar> as{f.one(), ratio};
                if (mode.kind == CriterionMode::Generic) {
                    ModuleRep t = tensor_product(fundamental_module(n, xi, as[0]), fundamental_module(n, zeta, as[1]));
                    OracleOptions o = opts;
                    o.selector = Selector::Full;
                    auto v = irreducible_oracle(t, o);
                    row.verdict = v.irreducible;
                    row.strategy = v.strategy;
                    row.predicted = criterion(n, {xi, zeta}, as, mode).holds;
                } else {
                    RootVerdict v = mode.kind == CriterionMode::Epsilon ? restricted_tensor_and_oracle(n, {xi, zeta}, as, opts)
                                                                        : small_tensor_and_oracle(n, {xi, zeta}, as, opts);
                    row.verdict = v.verdict.irreducible;
                    row.strategy = v.verdict.strategy;
                    row.predicted = v.prediction.holds;
                }
                rep.rows.push_back(std::move(row));
            }
    return rep;
}

}  // namespace qloop
