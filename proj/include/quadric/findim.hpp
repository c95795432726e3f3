#pragma once

#include "quadric/linalg.hpp"
#include "quadric/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace quadric {

/// A finite-dimensional associative unital algebra given by structure constants:
/// b_i * b_j = sum_k c[i][j][k] b_k.
class FiniteDimAlgebra {
public:
    /// constants[i * dim + j] holds the coordinates of b_i * b_j. Associativity on basis
    /// triples and two-sidedness of the unit are checked here.
    FiniteDimAlgebra(Field field, std::vector<std::string> labels, std::vector<Vector> constants, Vector unit);

    const Field& field() const { return field_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vector& unit() const { return unit_; }
    const Vector& product(std::size_t i, std::size_t j) const { return constants_[i * dim() + j]; }

    Vector basis_element(std::size_t i) const { return unit_vector(field_, dim(), i); }
    Vector multiply(const Vector& a, const Vector& b) const;
    /// Matrix of x -> a x, columns indexed by the basis.
    Matrix left_regular(const Vector& a) const;

private:
    Field field_;
    std::vector<std::string> labels_;
    std::vector<Vector> constants_;
    Vector unit_;
};

/// The subalgebra spanned by the given square matrices, which must contain the identity
/// and be closed under multiplication.
FiniteDimAlgebra algebra_from_matrices(const Field& field, const std::vector<Matrix>& basis,
                                       std::vector<std::string> labels = {});

/// Jacobson radical as the kernel of the trace form tr(L_x L_y) (valid in characteristic zero).
Subspace radical(const FiniteDimAlgebra& F);
bool is_semisimple(const FiniteDimAlgebra& F);
Subspace center(const FiniteDimAlgebra& F);
/// Monic minimal polynomial of a.
Polynomial min_poly(const FiniteDimAlgebra& F, const Vector& a);
/// F / rad F, with basis the non-pivot coordinates of the radical.
FiniteDimAlgebra semisimple_quotient(const FiniteDimAlgebra& F);

struct IdempotentSet {
    enum class Kind { central_primitive, primitive };
    Kind kind = Kind::primitive;
    std::vector<Vector> idempotents;
};

/// Central primitive idempotents from a generic central element. Throws NotSemisimple or
/// NonSplit (the message names the min-poly that failed to split).
IdempotentSet central_idempotents(const FiniteDimAlgebra& F, std::uint64_t seed = 0);

/// A complete set of orthogonal primitive idempotents: the central ones, with each matrix
/// block split further through minimal left ideals.
IdempotentSet primitive_idempotents(const FiniteDimAlgebra& F, std::uint64_t seed = 0);

/// Dimensions e F e over the central primitive idempotents, ascending.
std::vector<std::size_t> block_structure(const FiniteDimAlgebra& F, std::uint64_t seed = 0);

/// dim span{ a b_j c }.
std::size_t corner_dim(const FiniteDimAlgebra& F, const Vector& a, const Vector& c);

}  // namespace quadric
