#include "qloop/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qloop {

void Echelon::reduce(Vector& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = v[pivots_[k]];
        if (c.is_zero()) continue;
        Scalar f = c;
        const Vector& r = rows_[k];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!r[j].is_zero()) v[j] -= f * r[j];
    }
}

bool Echelon::contains(Vector v) const {
    reduce(v);
    return is_zero(v);
}

bool Echelon::insert(Vector v) {
    if (v.size() != dim_) throw std::invalid_argument("Echelon::insert: size mismatch");
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    Scalar inv = v[p].inverse();
    for (auto& x : v)
        if (!x.is_zero()) x *= inv;
    for (auto& r : rows_) {
        if (r[p].is_zero()) continue;
        Scalar f = r[p];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) r[j] -= f * v[j];
    }
    auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
}

namespace {

struct Component {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

// Connected components of the bipartite row/column nonzero graph.
std::vector<Component> components(const Matrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> parent(R + C);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t j = 0; j < C; ++j)
        for (const auto& e : m.column(j)) {
            std::size_t a = find(e.row), b = find(R + j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<std::size_t, Component> by_root;
    for (std::size_t i = 0; i < R; ++i) by_root[find(i)].rows.push_back(i);
    for (std::size_t j = 0; j < C; ++j) by_root[find(R + j)].cols.push_back(j);
    std::vector<Component> out;
    for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
    return out;
}

std::vector<Vector> dense_rows(const Matrix& m, const Component& comp) {
    std::vector<std::size_t> local_col(m.cols(), 0);
    for (std::size_t k = 0; k < comp.cols.size(); ++k) local_col[comp.cols[k]] = k;
    std::map<std::size_t, std::size_t> local_row;
    for (std::size_t k = 0; k < comp.rows.size(); ++k) local_row[comp.rows[k]] = k;
    std::vector<Vector> rows(comp.rows.size(), zero_vector(m.field(), comp.cols.size()));
    for (std::size_t j : comp.cols)
        for (const auto& e : m.column(j)) rows[local_row.at(e.row)][local_col[j]] = e.value;
    return rows;
}

}  // namespace

std::size_t rank_of(const std::vector<Vector>& rows, const Field& f, std::size_t dim) {
    Echelon ech(f, dim);
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

std::size_t rank(const Matrix& m) {
    std::size_t r = 0;
    for (const auto& comp : components(m)) {
        if (comp.rows.empty() || comp.cols.empty()) continue;
        r += rank_of(dense_rows(m, comp), m.field(), comp.cols.size());
    }
    return r;
}

std::vector<Vector> kernel(const Matrix& m) {
    std::map<std::size_t, Vector> by_free_col;
    for (const auto& comp : components(m)) {
        if (comp.cols.empty()) continue;
        Echelon ech(m.field(), comp.cols.size());
        if (!comp.rows.empty())
            for (auto& r : dense_rows(m, comp)) ech.insert(std::move(r));
        std::vector<char> is_pivot(comp.cols.size(), 0);
        for (std::size_t p : ech.pivots()) is_pivot[p] = 1;
        for (std::size_t f = 0; f < comp.cols.size(); ++f) {
            if (is_pivot[f]) continue;
            Vector x = zero_vector(m.field(), m.cols());
            x[comp.cols[f]] = m.field().one();
            for (std::size_t k = 0; k < ech.rank(); ++k) {
                const Scalar& c = ech.rows()[k][f];
                if (!c.is_zero()) x[comp.cols[ech.pivots()[k]]] = -c;
            }
            by_free_col.emplace(comp.cols[f], std::move(x));
        }
    }
    std::vector<Vector> out;
    for (auto& [c, v] : by_free_col) out.push_back(std::move(v));
    return out;
}

namespace {

Scalar dense_determinant(std::vector<Vector> a, const Field& f) {
    std::size_t n = a.size();
    Scalar det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return f.zero();
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Scalar inv = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Scalar factor = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k)
                if (!a[c][k].is_zero()) a[r][k] -= factor * a[c][k];
        }
    }
    return det;
}

}  // namespace

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const Field& f = m.field();
    Scalar det = f.one();
    for (const auto& comp : components(m)) {
        if (comp.rows.size() != comp.cols.size()) return f.zero();
        // the permutation sign of the block decomposition is tracked through the row/col orders
        std::vector<Vector> rows = dense_rows(m, comp);
        det *= dense_determinant(std::move(rows), f);
    }
    // sign of the permutation taking the block-ordered rows/cols back to natural order
    std::vector<std::size_t> row_order, col_order;
    for (const auto& comp : components(m)) {
        row_order.insert(row_order.end(), comp.rows.begin(), comp.rows.end());
        col_order.insert(col_order.end(), comp.cols.begin(), comp.cols.end());
    }
    auto parity = [](std::vector<std::size_t> p) {
        int s = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            while (p[i] != i) {
                std::swap(p[i], p[p[i]]);
                s ^= 1;
            }
        return s;
    };
    if (parity(row_order) ^ parity(col_order)) det = -det;
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const Field& f = m.field();
    std::size_t n = m.rows();
    std::vector<Vector> a(n, zero_vector(f, 2 * n));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& e : m.column(j)) a[e.row][j] = e.value;
    for (std::size_t i = 0; i < n; ++i) a[i][n + i] = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        Scalar inv = a[c][c].inverse();
        for (auto& x : a[c])
            if (!x.is_zero()) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar factor = a[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k)
                if (!a[c][k].is_zero()) a[r][k] -= factor * a[c][k];
        }
    }
    Matrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a[i][n + j].is_zero()) out.set(i, j, a[i][n + j]);
    return out;
}

namespace {

Scalar laplace(const std::vector<Vector>& a, const Field& f) {
    std::size_t n = a.size();
    if (n == 0) return f.one();
    if (n == 1) return a[0][0];
    Scalar acc = f.zero();
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c].is_zero()) continue;
        std::vector<Vector> minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(std::move(row));
        }
        Scalar term = a[0][c] * laplace(minor, f);
        if (c % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

}  // namespace

Scalar cofactor_determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<Vector> a(m.rows(), zero_vector(m.field(), m.cols()));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j)) a[e.row][j] = e.value;
    return laplace(a, m.field());
}

}  // namespace qloop
