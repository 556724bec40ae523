#pragma once

#include "brst/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brst {

using Vector = std::vector<Scalar>;

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector apply(const Vector& x) const;
    DenseMatrix operator*(const DenseMatrix& o) const;
    bool is_zero() const;

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

// Gauss-Jordan elimination with row operations recorded: reduced == transform * input.
struct Echelon {
    DenseMatrix reduced;
    DenseMatrix transform;
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot;

    std::size_t rank() const { return pivot_cols.size(); }
};

// Pivots are chosen left to right, so column order fixes the canonical form.
Echelon row_echelon(const DenseMatrix& m);

// A linear map between two ordered bases of one graded slice, with its
// echelon data computed up front so solves are deterministic and cheap.
class SliceMap {
public:
    SliceMap(std::string label, DenseMatrix matrix);

    const std::string& label() const { return label_; }
    const DenseMatrix& matrix() const { return matrix_; }
    std::size_t domain_dim() const { return matrix_.cols(); }
    std::size_t codomain_dim() const { return matrix_.rows(); }
    std::size_t rank() const { return echelon_.rank(); }
    const std::vector<std::size_t>& pivot_cols() const { return echelon_.pivot_cols; }

    // Canonical solution of A x = b: free variables zero, pivots from the
    // reduced form. nullopt when b is outside the column span.
    std::optional<Vector> solve(const Vector& b) const;

private:
    std::string label_;
    DenseMatrix matrix_;
    Echelon echelon_;
};

std::optional<Vector> slice_solve(const SliceMap& a, const Vector& b);
std::size_t slice_rank(const SliceMap& a);

bool is_zero(const Vector& v);

// Determinant by elimination; used for invertibility checks.
Scalar determinant(const DenseMatrix& m);
// Throws ShapeError for singular or non-square input.
DenseMatrix inverse(const DenseMatrix& m);

// Basis of the right kernel, one vector per free column.
std::vector<Vector> kernel_basis(const DenseMatrix& m);

// Basis of the right kernel over the rationals (real matrices only).
std::vector<std::vector<Rational>> rational_kernel(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

} // namespace brst
