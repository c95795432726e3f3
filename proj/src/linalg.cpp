#include "quadric/linalg.hpp"

#include "quadric/error.hpp"

namespace quadric {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, FieldElement(field_))
{
}

Matrix Matrix::identity(const Field& field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = FieldElement(field, 1);
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(Errc::dimension_mismatch, "row length differs from column count");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column_vector(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw Error(Errc::dimension_mismatch, "matrix-vector product");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const FieldElement& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero())
                out[r] += a * v[c];
        }
    return out;
}

bool Matrix::is_zero() const
{
    return quadric::is_zero(data_);
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(Errc::dimension_mismatch, "matrix product");
    Matrix p(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElement& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    p(i, j) += x * b(k, j);
        }
    return p;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(Errc::dimension_mismatch, "matrix sum");
    Matrix s = a;
    for (std::size_t k = 0; k < s.data_.size(); ++k)
        s.data_[k] += b.data_[k];
    return s;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(Errc::dimension_mismatch, "matrix difference");
    Matrix s = a;
    for (std::size_t k = 0; k < s.data_.size(); ++k)
        s.data_[k] -= b.data_[k];
    return s;
}

Matrix operator*(const FieldElement& s, const Matrix& a)
{
    Matrix r = a;
    for (auto& x : r.data_)
        x *= s;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

RrefResult rref(Matrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        if (!m(r, c).is_one()) {
            FieldElement inv = m(r, c).inverse();
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            FieldElement f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j).sub_mul(f, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    return rref(m).rank;
}

Subspace::Subspace(Field field, std::size_t ambient_dim)
    : field_(std::move(field)), ambient_(ambient_dim), basis_(field_, 0, ambient_dim)
{
}

Subspace Subspace::row_space(const Matrix& m)
{
    auto res = rref(m);
    Subspace s(m.field(), m.cols());
    Matrix basis(m.field(), res.rank, m.cols());
    for (std::size_t i = 0; i < res.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            basis(i, j) = res.reduced(i, j);
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(res.pivots);
    return s;
}

Subspace Subspace::span(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
    return row_space(Matrix::from_rows(field, vectors, ambient_dim));
}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim)
{
    return row_space(Matrix::identity(field, ambient_dim));
}

std::vector<Vector> Subspace::basis_vectors() const
{
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i)
        out.push_back(basis_.row_vector(i));
    return out;
}

Vector Subspace::reduce(const Vector& v) const
{
    if (v.size() != ambient_)
        throw Error(Errc::ambient_mismatch, "vector length differs from ambient dimension");
    Vector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        FieldElement c = r[pivots_[i]];
        if (c.is_zero())
            continue;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (!basis_(i, j).is_zero())
                r[j].sub_mul(c, basis_(i, j));
    }
    return r;
}

bool Subspace::contains(const Vector& v) const
{
    return quadric::is_zero(reduce(v));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const
{
    if (!contains(v))
        return std::nullopt;
    Vector c;
    c.reserve(pivots_.size());
    for (std::size_t p : pivots_)
        c.push_back(v[p]);
    return c;
}

Subspace Subspace::annihilator() const
{
    return kernel(basis_);
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace kernel(const Matrix& m)
{
    auto res = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : res.pivots)
        is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v = unit_vector(m.field(), m.cols(), free);
        for (std::size_t i = 0; i < res.rank; ++i)
            v[res.pivots[i]] = -res.reduced(i, free);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), vecs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(Errc::ambient_mismatch, "subspace sum");
    auto vecs = a.basis_vectors();
    for (auto& v : b.basis_vectors())
        vecs.push_back(std::move(v));
    return Subspace::span(a.field(), a.ambient_dim(), vecs);
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw Error(Errc::ambient_mismatch, "subspace intersection");
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace(a.field(), a.ambient_dim());
    // v = lambda * A lies in b iff N (lambda A)^T = 0 for N spanning b's annihilator
    Subspace ann = b.annihilator();
    if (ann.dim() == 0)
        return a;
    Matrix constraint = ann.basis() * a.basis().transpose();
    Subspace lambdas = kernel(constraint);
    if (lambdas.dim() == 0)
        return Subspace(a.field(), a.ambient_dim());
    return Subspace::row_space(lambdas.basis() * a.basis());
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs)
{
    if (rhs.size() != m.rows())
        throw Error(Errc::dimension_mismatch, "solve: right-hand side length");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    auto res = rref(std::move(aug));
    if (!res.pivots.empty() && res.pivots.back() == m.cols())
        return std::nullopt;
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < res.rank; ++i)
        x[res.pivots[i]] = res.reduced(i, m.cols());
    return x;
}

Basis::Basis(const Field& field, std::size_t ambient_dim, std::vector<Vector> vectors)
    : field_(field), ambient_(ambient_dim), vectors_(std::move(vectors)), transform_(field, 0, 0), echelon_(field, ambient_dim)
{
    // rref of [V | I] records how each echelon row is built from the inputs
    std::size_t n = vectors_.size();
    Matrix aug(field, n, ambient_ + n);
    for (std::size_t i = 0; i < n; ++i) {
        if (vectors_[i].size() != ambient_)
            throw Error(Errc::dimension_mismatch, "basis vector length");
        for (std::size_t j = 0; j < ambient_; ++j)
            aug(i, j) = vectors_[i][j];
        aug(i, ambient_ + i) = FieldElement(field, 1);
    }
    auto res = rref(std::move(aug));
    std::size_t r = 0;
    while (r < res.rank && res.pivots[r] < ambient_)
        ++r;
    if (r != n)
        throw Error(Errc::dimension_mismatch, "basis vectors are linearly dependent");
    Matrix ech(field, n, ambient_);
    transform_ = Matrix(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ambient_; ++j)
            ech(i, j) = res.reduced(i, j);
        for (std::size_t j = 0; j < n; ++j)
            transform_(i, j) = res.reduced(i, ambient_ + j);
    }
    echelon_ = Subspace::row_space(ech);
}

std::optional<Vector> Basis::coordinates(const Vector& v) const
{
    auto ech = echelon_.coordinates(v);
    if (!ech)
        return std::nullopt;
    // v = sum_i ech_i * E_i and E_i = sum_j T_ij V_j
    Vector out = zero_vector(field_, vectors_.size());
    for (std::size_t i = 0; i < ech->size(); ++i) {
        if ((*ech)[i].is_zero())
            continue;
        for (std::size_t j = 0; j < vectors_.size(); ++j)
            if (!transform_(i, j).is_zero())
                out[j] += (*ech)[i] * transform_(i, j);
    }
    return out;
}

Vector Basis::combine(const Vector& coeffs) const
{
    Vector out = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!vectors_[i][j].is_zero())
                out[j] += coeffs[i] * vectors_[i][j];
    }
    return out;
}

}  // namespace quadric
