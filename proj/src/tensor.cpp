#include "qloop/tensor.hpp"

#include "qloop/closure.hpp"
#include "qloop/error.hpp"
#include "qloop/linalg.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace qloop {

namespace {

Matrix mat_pow(const Matrix& m, int p) {
    Matrix r = Matrix::identity(m.field(), m.rows());
    for (int k = 0; k < p; ++k) r = r * m;
    return r;
}

bool has_binomials(const ModuleRep& m) {
    for (const auto& [key, mat] : m.gens)
        if (key.kind == GenKind::KBinom) return true;
    return false;
}

void check_compatible(const ModuleRep& a, const ModuleRep& b) {
    if (a.n != b.n) throw InvalidRank("tensor factors of different rank");
    if (a.field != b.field) throw ContextMismatch("tensor factors over different fields");
    if (a.flavor != b.flavor) throw FlavorMismatch("tensor of " + flavor_name(a.flavor) + " and " + flavor_name(b.flavor));
    if (a.affine != b.affine) throw FlavorMismatch("tensor of affine and finite-type modules");
}

}  // namespace

ModuleRep tensor_product(const ModuleRep& a, const ModuleRep& b) {
    check_compatible(a, b);
    const Field& f = a.field;
    ModuleRep out;
    out.n = a.n;
    out.flavor = a.flavor;
    out.l = a.l;
    out.field = f;
    out.affine = a.affine;
    out.max_power = a.max_power + b.max_power;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            Label lab = a.basis[i];
            lab.insert(lab.end(), b.basis[j].begin(), b.basis[j].end());
            out.basis.push_back(std::move(lab));
            out.weights.push_back(a.weights[i] + b.weights[j]);
        }
    out.xis = a.xis;
    out.xis.insert(out.xis.end(), b.xis.begin(), b.xis.end());
    out.params = a.params;
    out.params.insert(out.params.end(), b.params.begin(), b.params.end());
    if (a.dpoly && b.dpoly) out.dpoly = *a.dpoly * *b.dpoly;

    for (int i : a.nodes()) {
        out.gens[{GenKind::K, i, 1}] = kron(a.K(i), b.K(i));
        out.gens[{GenKind::Kinv, i, 1}] = kron(a.Kinv(i), b.Kinv(i));
        for (int m = 1; m <= out.max_power; ++m) {
            Matrix E(f, out.dim(), out.dim()), F(f, out.dim(), out.dim());
            for (int p = 0; p <= m; ++p) {
                if (m - p > a.max_power || p > b.max_power) continue;
                Scalar c = f.qpow(static_cast<long>(p) * (m - p));
                E = E + kron(a.divided(GenKind::E, i, m - p) * mat_pow(a.K(i), p), b.divided(GenKind::E, i, p)).scaled(c);
            }
            for (int p = 0; p <= m; ++p) {
                if (p > a.max_power || m - p > b.max_power) continue;
                Scalar c = f.qpow(static_cast<long>(p) * (m - p));
                F = F + kron(a.divided(GenKind::F, i, p), b.divided(GenKind::F, i, m - p) * mat_pow(b.Kinv(i), p)).scaled(c);
            }
            out.gens[{GenKind::E, i, m}] = E;
            out.gens[{GenKind::F, i, m}] = F;
        }
    }
    // drop trailing divided powers that vanish on every node
    while (out.max_power > 1) {
        bool vanishes = true;
        for (int i : a.nodes())
            vanishes = vanishes && out.E(i, out.max_power).is_zero() && out.F(i, out.max_power).is_zero();
        if (!vanishes) break;
        for (int i : a.nodes()) {
            out.gens.erase({GenKind::E, i, out.max_power});
            out.gens.erase({GenKind::F, i, out.max_power});
        }
        --out.max_power;
    }
    if (has_binomials(a) && has_binomials(b)) attach_cartan_binomials(out);
    return out;
}

ModuleRep tensor_product(const std::vector<ModuleRep>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor product of no factors");
    ModuleRep acc = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) acc = tensor_product(acc, factors[k]);
    return acc;
}

ModuleRep dual_module(const ModuleRep& m) {
    const Field& f = m.field;
    ModuleRep out = m;
    out.dual = !m.dual;
    out.dpoly.reset();
    for (auto& w : out.weights) w = w.scaled(-1);
    out.gens.clear();
    for (int i : m.nodes()) {
        out.gens[{GenKind::K, i, 1}] = m.Kinv(i).transpose();
        out.gens[{GenKind::Kinv, i, 1}] = m.K(i).transpose();
        for (int p = 1; p <= m.max_power; ++p) {
            Scalar sign = f.integer(p % 2 == 0 ? 1 : -1);
            long e = static_cast<long>(p) * (p - 1);
            out.gens[{GenKind::E, i, p}] =
                (mat_pow(m.Kinv(i), p) * m.E(i, p)).scaled(sign * f.qpow(e)).transpose();
            out.gens[{GenKind::F, i, p}] =
                (m.F(i, p) * mat_pow(m.K(i), p)).scaled(sign * f.qpow(-e)).transpose();
        }
    }
    if (has_binomials(m)) attach_cartan_binomials(out);
    return out;
}

ModuleRep omega_module(const ModuleRep& m) {
    if (!m.affine) throw std::invalid_argument("omega_module needs an affine module");
    const Field& f = m.field;
    ModuleRep out = m;
    out.dpoly.reset();
    for (auto& w : out.weights) w = w.scaled(-1);
    for (auto& xi : out.xis) xi = m.n + 1 - xi;
    out.gens.clear();
    for (int i : m.nodes()) {
        out.gens[{GenKind::K, i, 1}] = m.Kinv(i);
        out.gens[{GenKind::Kinv, i, 1}] = m.K(i);
        Scalar toE = f.integer(-1), toF = f.integer(-1);
        if (i == 0) {
            toE = -f.qpow(m.n + 1);
            toF = -f.qpow(-(m.n + 1));
        }
        for (int p = 1; p <= m.max_power; ++p) {
            out.gens[{GenKind::E, i, p}] = m.F(i, p).scaled(toE.pow(p));
            out.gens[{GenKind::F, i, p}] = m.E(i, p).scaled(toF.pow(p));
        }
    }
    if (has_binomials(m)) attach_cartan_binomials(out);
    return out;
}

std::vector<Matrix> intertwiners(const ModuleRep& a, const ModuleRep& b) {
    if (a.field != b.field) throw ContextMismatch("intertwiners across fields");
    if (a.n != b.n) return {};
    const Field& f = a.field;
    Selector sel = a.flavor == Flavor::Small ? Selector::Small : Selector::Full;
    std::size_t da = a.dim(), db = b.dim();

    // unknown X[r][c] for r in b, c in a with equal grading key
    std::map<std::vector<int>, std::vector<std::size_t>> a_by_key;
    for (std::size_t c = 0; c < da; ++c) a_by_key[grading_key(a, c, sel)].push_back(c);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < db; ++r) {
        auto it = a_by_key.find(grading_key(b, r, sel));
        if (it == a_by_key.end()) continue;
        for (std::size_t c : it->second) cells.emplace_back(r, c);
    }
    if (cells.empty()) return {};
    // column-wise lookup: for each c, the rows r carrying an unknown
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_col(da);
    for (std::size_t v = 0; v < cells.size(); ++v) by_col[cells[v].second].emplace_back(cells[v].first, v);

    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> eqs;
    auto bump = [&](std::map<std::size_t, Scalar>& row, std::size_t v, const Scalar& x) {
        auto it = row.find(v);
        if (it == row.end()) row.emplace(v, x);
        else it->second += x;
    };
    std::vector<std::map<std::size_t, Scalar>> rows;
    for (const auto& key : selected_generators(a, sel)) {
        if (!b.has(key)) return {};
        const Matrix& ga = a.gen(key);
        const Matrix& gb = b.gen(key);
        eqs.clear();
        // (X ga)[r, c] = sum_k X[r, k] ga[k, c]
        for (std::size_t c = 0; c < da; ++c)
            for (const auto& e : ga.column(c))
                for (const auto& [r, v] : by_col[e.row]) bump(eqs[{r, c}], v, e.value);
        // (gb X)[r, c] = sum_k gb[r, k] X[k, c]
        for (std::size_t v = 0; v < cells.size(); ++v) {
            auto [k, c] = cells[v];
            for (const auto& e : gb.column(k)) bump(eqs[{e.row, c}], v, -e.value);
        }
        for (auto& [rc, row] : eqs) rows.push_back(std::move(row));
    }
    Matrix sys(f, rows.size(), cells.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [v, s] : rows[i])
            if (!s.is_zero()) sys.set(i, v, s);
    std::vector<Matrix> out;
    for (const auto& x : kernel(sys)) {
        Matrix X(f, db, da);
        for (std::size_t v = 0; v < cells.size(); ++v)
            if (!x[v].is_zero()) X.set(cells[v].first, cells[v].second, x[v]);
        out.push_back(std::move(X));
    }
    return out;
}

std::optional<Matrix> find_isomorphism(const ModuleRep& a, const ModuleRep& b) {
    if (a.dim() != b.dim()) return std::nullopt;
    auto hom = intertwiners(a, b);
    if (hom.empty()) return std::nullopt;
    if (rank(hom[0]) == a.dim()) return hom[0];
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Matrix x(a.field, b.dim(), a.dim());
        for (const auto& h : hom) x = x + h.scaled(a.field.integer(coef(rng)));
        if (rank(x) == a.dim()) return x;
    }
    return std::nullopt;
}

}  // namespace qloop
