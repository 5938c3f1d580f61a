#ifndef ABREC_MATRIX_HPP
#define ABREC_MATRIX_HPP

#include "abrec/integer.hpp"

#include <cstddef>
#include <vector>

namespace abrec {

// Dense integer matrix, row-major, unbounded entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(size_t n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void add_row_multiple(size_t dst, size_t src, const Int& factor);
    void add_col_multiple(size_t dst, size_t src, const Int& factor);
    void negate_row(size_t i);
    void negate_col(size_t j);

    std::vector<Int> column(size_t j) const;
    std::vector<Int> apply(const std::vector<Int>& x) const; // this * x

private:
    size_t rows_, cols_;
    std::vector<Int> data_;
};

// d = u * m * v with u, v unimodular and d diagonal with d_i | d_{i+1} >= 0.
struct SmithForm {
    IntMatrix d, u, v;
    std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Canonical column-style Hermite form of the lattice spanned by the columns
// of m. Requires the lattice to have full rank = rows(m); returns the unique
// square lower-triangular basis with positive diagonal and off-diagonal
// entries reduced mod the diagonal of their row.
IntMatrix hermite_column_basis(const IntMatrix& m);

Int determinant(const IntMatrix& m);

// Exact inverse of a matrix with det = +-1.
IntMatrix inverse_unimodular(const IntMatrix& u);

// Basis of { x : m x = 0 } as columns.
IntMatrix integer_kernel(const IntMatrix& m);

} // namespace abrec

#endif
