#pragma once

#include "qloop/matrix.hpp"

#include <optional>
#include <vector>

namespace qloop {

// Incrementally maintained reduced row echelon basis of a subspace of F^dim.
class Echelon {
public:
    Echelon(Field f, std::size_t dim) : field_(std::move(f)), dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    // Rows sorted by pivot column, pivots equal to one, pivot columns cleared elsewhere.
    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Subtracts the span from v in place; v becomes zero iff it lies in the span.
    void reduce(Vector& v) const;
    bool contains(Vector v) const;
    // Returns true if v enlarged the span.
    bool insert(Vector v);

private:
    Field field_;
    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}.
std::vector<Vector> kernel(const Matrix& m);
Scalar determinant(const Matrix& m);
// Laplace expansion along the first row; exponential, meant as an independent check on small matrices.
Scalar cofactor_determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Basis of the row space as an echelon form of the given vectors.
std::size_t rank_of(const std::vector<Vector>& rows, const Field& f, std::size_t dim);

}  // namespace qloop
