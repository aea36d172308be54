#include "qloop/rmatrix.hpp"

#include "qloop/error.hpp"
#include "qloop/linalg.hpp"
#include "qloop/tensor.hpp"

#include <algorithm>
#include <cstdlib>

namespace qloop {

namespace {

int kmin_of(int xi, int zeta, int n) { return std::max(0, xi + zeta - n - 1); }
int kmax_of(int xi, int zeta) { return std::min(xi, zeta); }
int span_of(int xi, int zeta, int n) { return std::min({xi, zeta, n + 1 - xi, n + 1 - zeta}); }

void check_pair(int xi, int zeta, int n) {
    if (n < 1) throw InvalidRank("rank must be at least 1");
    if (xi < 1 || xi > n || zeta < 1 || zeta > n) throw std::out_of_range("xi, zeta must lie in 1..n");
}

void check_k(int xi, int zeta, int k, int n) {
    check_pair(xi, zeta, n);
    if (k < kmin_of(xi, zeta, n) || k > kmax_of(xi, zeta)) throw std::out_of_range("k outside the summand range");
}

Weight fundamental_or_zero(int i, int n) { return (i == 0 || i == n + 1) ? Weight::zero(n) : fundamental_weight(i, n); }

// Subsets of `pool` of the given size, in lexicographic order.
void subsets(const std::vector<int>& pool, std::size_t size, std::size_t from, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        subsets(pool, size, i + 1, cur, out);
        cur.pop_back();
    }
}

ModuleRep finite_pair(int xi, int zeta, int n) { return tensor_product(build_subset_module(n, xi), build_subset_module(n, zeta)); }

}  // namespace

std::vector<PairComponent> decompose_pair(int xi, int zeta, int n) {
    check_pair(xi, zeta, n);
    std::vector<PairComponent> out;
    for (int k = kmin_of(xi, zeta, n); k <= kmax_of(xi, zeta); ++k) {
        Weight hw = fundamental_or_zero(xi + zeta - k, n) + fundamental_or_zero(k, n);
        out.push_back({k, hw, weyl_dimension(hw)});
    }
    return out;
}

Vector hw_vector(int xi, int zeta, int k, int n) {
    check_k(xi, zeta, k, n);
    Field f = Field::generic();
    auto left = column_sets(n, xi), right = column_sets(n, zeta);
    Vector v = zero_vector(f, left.size() * right.size());
    std::vector<int> pool;
    for (int j = k + 1; j <= xi + zeta - k; ++j) pool.push_back(j);
    std::vector<std::vector<int>> picks;
    std::vector<int> cur;
    subsets(pool, static_cast<std::size_t>(xi - k), 0, cur, picks);
    long shift = static_cast<long>(xi + k + 1) * (xi - k) / 2;
    Scalar minus_q = -f.qpow(1);
    for (const auto& J : picks) {
        ColumnSet a, b;
        for (int j = 1; j <= k; ++j) a.push_back(j);
        a.insert(a.end(), J.begin(), J.end());
        for (int j = 1; j <= xi + zeta - k; ++j)
            if (!std::binary_search(J.begin(), J.end(), j)) b.push_back(j);
        long e = -shift;
        for (int j : J) e += j;
        auto ia = static_cast<std::size_t>(std::find(left.begin(), left.end(), a) - left.begin());
        auto ib = static_cast<std::size_t>(std::find(right.begin(), right.end(), b) - right.begin());
        v[ia * right.size() + ib] += minus_q.pow(e);
    }
    return v;
}

ProjectorSet projectors(int xi, int zeta, int n) {
    check_pair(xi, zeta, n);
    ProjectorSet ps;
    ps.n = n;
    ps.xi = xi;
    ps.zeta = zeta;
    ps.kmin = kmin_of(xi, zeta, n);
    ps.kmax = kmax_of(xi, zeta);
    ModuleRep src = finite_pair(xi, zeta, n), dst = finite_pair(zeta, xi, n);
    const Field& f = src.field;
    auto hom = intertwiners(src, dst);
    std::size_t count = static_cast<std::size_t>(ps.kmax - ps.kmin + 1);
    if (hom.size() != count)
        throw SingularIntertwinerSystem("intertwiner space has dim " + std::to_string(hom.size()) + ", expected " +
                                        std::to_string(count));
    std::vector<Vector> w_src, w_dst;
    for (int k = ps.kmin; k <= ps.kmax; ++k) {
        w_src.push_back(hw_vector(xi, zeta, k, n));
        w_dst.push_back(hw_vector(zeta, xi, k, n));
    }
    std::size_t d = src.dim();
    // rows: coordinates of X_j w_{k'} stacked over k'; columns: coefficients c_j
    Matrix sys(f, count * d, count);
    for (std::size_t j = 0; j < count; ++j)
        for (std::size_t kp = 0; kp < count; ++kp) {
            Vector img = hom[j].apply(w_src[kp]);
            for (std::size_t r = 0; r < d; ++r)
                if (!img[r].is_zero()) sys.set(kp * d + r, j, img[r]);
        }
    if (rank(sys) != count) throw SingularIntertwinerSystem("prescribed values do not determine the intertwiner");
    for (std::size_t k = 0; k < count; ++k) {
        // solve sys c = target through the kernel of [sys | -target]
        Matrix aug(f, count * d, count + 1);
        for (std::size_t j = 0; j < count; ++j)
            for (const auto& e : sys.column(j)) aug.set(e.row, j, e.value);
        for (std::size_t r = 0; r < d; ++r)
            if (!w_dst[k][r].is_zero()) aug.set(k * d + r, count, -w_dst[k][r]);
        auto ker = kernel(aug);
        if (ker.size() != 1 || ker[0][count].is_zero())
            throw SingularIntertwinerSystem("no intertwiner with the prescribed values for k = " +
                                            std::to_string(ps.kmin + static_cast<int>(k)));
        Scalar norm = ker[0][count].inverse();
        Matrix P(f, d, d);
        for (std::size_t j = 0; j < count; ++j)
            if (!ker[0][j].is_zero()) P = P + hom[j].scaled(ker[0][j] * norm);
        ps.pbar.push_back(std::move(P));
    }
    return ps;
}

Matrix projector(int xi, int zeta, int k, int n) {
    check_k(xi, zeta, k, n);
    return projectors(xi, zeta, n).at(k);
}

std::string normalization_name(RNormalization r) { return r == RNormalization::Barred ? "barred" : "polynomial"; }

Matrix assemble_R(const std::vector<RTerm>& terms, std::size_t dim, const Field& f) {
    Matrix R(f, dim, dim);
    for (const auto& t : terms)
        if (!t.rho.is_zero()) R = R + t.P.scaled(t.rho);
    return R;
}

Scalar normalization_factor(int xi, int zeta, const Scalar& a, const Scalar& b, int n) {
    Field f = a.field();
    int d = std::abs(xi - zeta);
    Scalar s = f.one();
    for (int p = 1; p <= span_of(xi, zeta, n); ++p) s *= b - f.qpow(2 * p + d) * a;
    return s;
}

RData build_R(int xi, int zeta, const Scalar& a, const Scalar& b, int n, RNormalization norm, const ProjectorSet* cache) {
    check_pair(xi, zeta, n);
    if (a.is_zero() || b.is_zero()) throw ZeroSpectralParameter("R-matrix parameters must be nonzero");
    if (a.field() != b.field()) throw ContextMismatch("R-matrix parameters over different fields");
    ProjectorSet local;
    if (!cache || cache->n != n || cache->xi != xi || cache->zeta != zeta) {
        local = projectors(xi, zeta, n);
        cache = &local;
    }
    Field f = a.field();
    RData r;
    r.n = n;
    r.xi = xi;
    r.zeta = zeta;
    r.a = a;
    r.b = b;
    r.normalization = norm;
    int kmin = cache->kmin, kmax = cache->kmax;
    Scalar sign = f.integer((xi - zeta) % 2 == 0 ? 1 : -1);
    if (norm == RNormalization::Barred) {
        std::vector<RTerm> rev;
        Scalar rho = f.one();
        for (int k = kmax; k >= kmin; --k) {
            rev.push_back({k, rho, cache->at(k)});
            if (k == kmin) break;
            Scalar e = f.qpow(xi + zeta - 2 * k + 2);
            Scalar den = b - e * a;
            if (den.is_zero())
                throw ResonantDenominator("barred coefficient for k = " + std::to_string(k - 1) + " has a vanishing denominator");
            rho = rho * sign * (a - e * b) / den;
        }
        r.terms.assign(rev.rbegin(), rev.rend());
    } else {
        int M = span_of(xi, zeta, n), d = std::abs(xi - zeta);
        for (int j = 0; j <= M; ++j) {
            Scalar rho = sign.pow(j);
            for (int p = 1; p <= j; ++p) rho *= a - f.qpow(2 * p + d) * b;
            for (int p = j + 1; p <= M; ++p) rho *= b - f.qpow(2 * p + d) * a;
            r.terms.push_back({j, rho, cache->at(kmax - j)});
        }
    }
    r.assembled = assemble_R(r.terms, cache->at(kmax).rows(), f);
    return r;
}

RelationReport verify_affine_intertwiner(const RData& r) {
    ModuleRep src = tensor_product(fundamental_module(r.n, r.xi, r.a), fundamental_module(r.n, r.zeta, r.b));
    ModuleRep dst = tensor_product(fundamental_module(r.n, r.zeta, r.b), fundamental_module(r.n, r.xi, r.a));
    RelationReport rep;
    for (const auto& [key, g] : src.gens) {
        RelationCheck c;
        c.name = key.to_string();
        Matrix diff = r.assembled * g - dst.gen(key) * r.assembled;
        if (!diff.is_zero()) {
            c.passed = false;
            for (std::size_t j = 0; j < diff.cols() && c.witness.empty(); ++j)
                if (!diff.column(j).empty())
                    c.witness = "entry (" + std::to_string(diff.column(j)[0].row) + "," + std::to_string(j) +
                                ") = " + diff.column(j)[0].value.to_string();
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

std::pair<std::size_t, std::size_t> resonance_rank(int xi, int zeta, const Scalar& a, const Scalar& b, int n,
                                                   const ProjectorSet* cache) {
    RData r = build_R(xi, zeta, a, b, n, RNormalization::Polynomial, cache);
    std::size_t rk = rank(r.assembled);
    return {rk, r.assembled.cols() - rk};
}

}  // namespace qloop
