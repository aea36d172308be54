#include "qloop/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qloop {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v[i] = f.one();
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(std::move(f)), rows_(rows), cols_(cols) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i].push_back({i, f.one()});
    return m;
}

Matrix Matrix::diagonal(const Field& f, const std::vector<Scalar>& d) {
    Matrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) m.cols_[i].push_back({i, d[i]});
    return m;
}

namespace {

auto find_row(const std::vector<Matrix::Entry>& col, std::size_t i) {
    return std::lower_bound(col.begin(), col.end(), i, [](const Matrix::Entry& e, std::size_t r) { return e.row < r; });
}

}  // namespace

Scalar Matrix::at(std::size_t i, std::size_t j) const {
    const auto& col = cols_.at(j);
    auto it = find_row(col, i);
    if (it != col.end() && it->row == i) return it->value;
    return field_.zero();
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_) throw std::out_of_range("Matrix::set row");
    auto& col = cols_.at(j);
    auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.row < r; });
    bool present = it != col.end() && it->row == i;
    if (v.is_zero()) {
        if (present) col.erase(it);
    } else if (present) {
        it->value = v;
    } else {
        col.insert(it, {i, v});
    }
}

void Matrix::add(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.is_zero()) return;
    set(i, j, at(i, j) + v);
}

bool Matrix::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

bool Matrix::is_diagonal() const {
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& e : cols_[j])
            if (e.row != j) return false;
    return true;
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : cols_[j]) t.cols_[e.row].push_back({j, e.value});
    return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
    if (s.is_zero()) return Matrix(field_, rows_, cols());
    Matrix out = *this;
    for (auto& c : out.cols_)
        for (auto& e : c) e.value = e.value * s;
    return out;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols()) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t j = 0; j < cols(); ++j) {
        if (cols_[j].empty() || v[j].is_zero()) continue;
        for (const auto& e : cols_[j]) out[e.row] += e.value * v[j];
    }
    return out;
}

Vector Matrix::apply_left(const Vector& v) const {
    if (v.size() != rows_) throw std::invalid_argument("Matrix::apply_left: size mismatch");
    Vector out = zero_vector(field_, cols());
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : cols_[j])
            if (!v[e.row].is_zero()) out[j] += v[e.row] * e.value;
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: size mismatch");
    Matrix out(a.field_, a.rows_, b.cols());
    Vector acc = zero_vector(a.field_, a.rows_);
    std::vector<char> touched(a.rows_, 0);
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        rows.clear();
        for (const auto& eb : b.cols_[j])
            for (const auto& ea : a.cols_[eb.row]) {
                if (!touched[ea.row]) {
                    touched[ea.row] = 1;
                    rows.push_back(ea.row);
                    acc[ea.row] = ea.value * eb.value;
                } else {
                    acc[ea.row] += ea.value * eb.value;
                }
            }
        std::sort(rows.begin(), rows.end());
        for (std::size_t r : rows) {
            if (!acc[r].is_zero()) out.cols_[j].push_back({r, std::move(acc[r])});
            acc[r] = a.field_.zero();
            touched[r] = 0;
        }
    }
    return out;
}

namespace {

Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("Matrix sum: size mismatch");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& ca = a.column(j);
        const auto& cb = b.column(j);
        std::size_t p = 0, q = 0;
        while (p < ca.size() || q < cb.size()) {
            if (q == cb.size() || (p < ca.size() && ca[p].row < cb[q].row)) {
                out.set(ca[p].row, j, ca[p].value);
                ++p;
            } else if (p == ca.size() || cb[q].row < ca[p].row) {
                out.set(cb[q].row, j, subtract ? -cb[q].value : cb[q].value);
                ++q;
            } else {
                out.set(ca[p].row, j, subtract ? ca[p].value - cb[q].value : ca[p].value + cb[q].value);
                ++p;
                ++q;
            }
        }
    }
    return out;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols() != b.cols()) return false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& ca = a.cols_[j];
        const auto& cb = b.cols_[j];
        if (ca.size() != cb.size()) return false;
        for (std::size_t k = 0; k < ca.size(); ++k)
            if (ca[k].row != cb[k].row || ca[k].value != cb[k].value) return false;
    }
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ja = 0; ja < a.cols(); ++ja)
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
            std::size_t j = ja * b.cols() + jb;
            for (const auto& ea : a.column(ja))
                for (const auto& eb : b.column(jb)) out.set(ea.row * b.rows() + eb.row, j, ea.value * eb.value);
        }
    return out;
}

}  // namespace qloop
