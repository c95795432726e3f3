#pragma once

#include "quadric/field.hpp"

#include <optional>
#include <span>
#include <vector>

namespace quadric {

/// Dense row-major matrix over a FieldSpec.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& field, std::size_t n);
    /// Rows must all have length `cols`.
    static Matrix from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    Vector column_vector(std::size_t c) const;
    /// Row-major flattening.
    const Vector& entries() const { return data_; }

    Matrix transpose() const;
    /// this * v
    Vector apply(const Vector& v) const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElement& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

    void swap_rows(std::size_t a, std::size_t b);

private:
    Field field_;
    std::size_t rows_, cols_;
    Vector data_;
};

struct RrefResult {
    Matrix reduced;  // same shape as the input; zero rows at the bottom
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Pivot = first nonzero entry scanning columns left to right,
/// rows top to bottom.
RrefResult rref(Matrix m);

/// A subspace of F^n stored as a reduced row echelon basis.
class Subspace {
public:
    Subspace(Field field, std::size_t ambient_dim);  // zero subspace
    static Subspace span(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace full(const Field& field, std::size_t ambient_dim);

    const Field& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
    std::vector<Vector> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Remainder of v after reduction against the basis; zero iff v lies in the subspace.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    /// Coefficients of v in the stored basis, or nullopt if v is outside.
    std::optional<Vector> coordinates(const Vector& v) const;
    /// { u : u . b = 0 for every b in the subspace } under the plain dot product.
    Subspace annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Field field_;
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// { v : m v = 0 }
Subspace kernel(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// One exact solution x of m x = rhs, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
std::size_t rank(const Matrix& m);

/// Coordinates of vectors with respect to a fixed (not necessarily echelon) list of
/// independent vectors.
class Basis {
public:
    Basis(const Field& field, std::size_t ambient_dim, std::vector<Vector> vectors);

    std::size_t size() const { return vectors_.size(); }
    const std::vector<Vector>& vectors() const { return vectors_; }
    const Vector& operator[](std::size_t i) const { return vectors_[i]; }
    std::optional<Vector> coordinates(const Vector& v) const;
    Vector combine(const Vector& coeffs) const;

private:
    Field field_;
    std::size_t ambient_;
    std::vector<Vector> vectors_;
    Matrix transform_;  // rows: echelon basis rows expressed in terms of vectors_
    Subspace echelon_;
};

}  // namespace quadric
