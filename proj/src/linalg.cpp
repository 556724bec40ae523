#include "brst/linalg.hpp"

#include "brst/errors.hpp"

#include <algorithm>

namespace brst {

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

Vector DenseMatrix::apply(const Vector& x) const
{
    if (x.size() != cols_)
        throw ShapeError("matrix has " + std::to_string(cols_) + " columns, vector has " + std::to_string(x.size()));
    Vector y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero())
                y[r] += a * x[c];
        }
    }
    return y;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const
{
    if (cols_ != o.rows_)
        throw ShapeError("matrix product shape mismatch");
    DenseMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero())
                    r(i, j) += a * o(k, j);
        }
    return r;
}

bool DenseMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Echelon row_echelon(const DenseMatrix& m)
{
    Echelon e{m, DenseMatrix::identity(m.rows()), {}, std::vector<bool>(m.cols(), false)};
    DenseMatrix& a = e.reduced;
    DenseMatrix& t = e.transform;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c).is_zero())
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(r, j), a(piv, j));
            for (std::size_t j = 0; j < rows; ++j)
                std::swap(t(r, j), t(piv, j));
        }
        Scalar inv = Scalar(1) / a(r, c);
        for (std::size_t j = 0; j < cols; ++j)
            if (!a(r, j).is_zero())
                a(r, j) *= inv;
        for (std::size_t j = 0; j < rows; ++j)
            if (!t(r, j).is_zero())
                t(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero())
                continue;
            Scalar f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j)
                if (!a(r, j).is_zero())
                    a(i, j) -= f * a(r, j);
            for (std::size_t j = 0; j < rows; ++j)
                if (!t(r, j).is_zero())
                    t(i, j) -= f * t(r, j);
        }
        e.pivot_cols.push_back(c);
        e.is_pivot[c] = true;
        ++r;
    }
    return e;
}

SliceMap::SliceMap(std::string label, DenseMatrix matrix)
    : label_(std::move(label)), matrix_(std::move(matrix)), echelon_(row_echelon(matrix_))
{
}

std::optional<Vector> SliceMap::solve(const Vector& b) const
{
    if (b.size() != codomain_dim())
        throw ShapeError("right-hand side has " + std::to_string(b.size()) + " entries, codomain has " +
                         std::to_string(codomain_dim()));
    Vector c = echelon_.transform.apply(b);
    for (std::size_t r = rank(); r < c.size(); ++r)
        if (!c[r].is_zero())
            return std::nullopt;
    Vector x(domain_dim());
    for (std::size_t r = 0; r < rank(); ++r)
        x[echelon_.pivot_cols[r]] = c[r];
    return x;
}

std::optional<Vector> slice_solve(const SliceMap& a, const Vector& b)
{
    return a.solve(b);
}

std::size_t slice_rank(const SliceMap& a)
{
    return a.rank();
}

DenseMatrix inverse(const DenseMatrix& m)
{
    if (m.rows() != m.cols())
        throw ShapeError("inverse of a non-square matrix");
    Echelon e = row_echelon(m);
    if (e.rank() != m.rows())
        throw ShapeError("inverse of a singular matrix");
    return e.transform;
}

Scalar determinant(const DenseMatrix& m)
{
    if (m.rows() != m.cols())
        throw ShapeError("determinant of a non-square matrix");
    DenseMatrix a = m;
    const std::size_t n = a.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero())
            ++piv;
        if (piv == n)
            return Scalar(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(c, j), a(piv, j));
            det = -det;
        }
        det *= a(c, c);
        Scalar inv = Scalar(1) / a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero())
                continue;
            Scalar f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::vector<Vector> kernel_basis(const DenseMatrix& m)
{
    Echelon e = row_echelon(m);
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (e.is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.rank(); ++r)
            v[e.pivot_cols[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> rational_kernel(const std::vector<std::vector<Rational>>& rows, std::size_t cols)
{
    DenseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Scalar(rows[r][c]);
    Echelon e = row_echelon(m);
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (e.is_pivot[free])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.rank(); ++r)
            v[e.pivot_cols[r]] = -e.reduced(r, free).re();
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace brst
