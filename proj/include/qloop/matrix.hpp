#pragma once

#include "qloop/scalar.hpp"

#include <cstddef>
#include <vector>

namespace qloop {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

// Sparse matrix in compressed-column form; stored entries are nonzero, rows sorted.
class Matrix {
public:
    struct Entry {
        std::size_t row;
        Scalar value;
    };

    Matrix() : field_(Field::generic()) {}
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix diagonal(const Field& f, const std::vector<Scalar>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    const Field& field() const { return field_; }
    const std::vector<Entry>& column(std::size_t j) const { return cols_[j]; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void add(std::size_t i, std::size_t j, const Scalar& v);

    bool is_zero() const;
    bool is_diagonal() const;
    std::size_t nnz() const;

    Matrix transpose() const;
    Matrix scaled(const Scalar& s) const;
    Vector apply(const Vector& v) const;
    // Row vector times matrix.
    Vector apply_left(const Vector& v) const;

    Matrix operator-() const { return scaled(field_.integer(-1)); }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Entrywise map into another field (used for specialization).
    template <class F>
    Matrix map(const Field& target, F&& fn) const {
        Matrix out(target, rows_, cols());
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto& e : cols_[j]) {
                Scalar v = fn(e.value);
                if (!v.is_zero()) out.cols_[j].push_back({e.row, std::move(v)});
            }
        return out;
    }

private:
    Field field_;
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> cols_;
};

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace qloop
