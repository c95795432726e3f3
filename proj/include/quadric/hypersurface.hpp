#pragma once

#include "quadric/findim.hpp"
#include "quadric/module.hpp"
#include "quadric/quadratic.hpp"

#include <string>
#include <vector>

namespace quadric {

struct ContextOptions {
    /// Truncation degree for every Hilbert-level certificate.
    std::size_t max_degree = 6;
    /// Abort when the quantum-polynomial certificate fails; otherwise record a warning.
    bool require_quantum_polynomial = true;
};

/// S, the central element w, A = S/Sw and the data derived from them.
struct HypersurfaceContext {
    AlgebraPtr S;
    Vector w;
    AlgebraPtr A;
    /// dim V - 1, assuming gldim S = dim V.
    std::size_t d = 0;
    /// Recorded only; nothing is computed from it.
    long gorenstein_parameter = 0;
    Certificate quantum_polynomial;
    Certificate regular;
    /// C_0 .. C_{d+3} of A.
    std::vector<Subspace> koszul;
    /// Rows: a basis of C_{d+1} in coordinates c_k (x) v_l of C_d (x) V.
    Matrix syzygy_relations{FieldSpec::rationals(), 0, 0};
    std::vector<std::string> warnings;

    const Field& field() const { return A->field(); }
    std::size_t num_gens() const { return A->num_gens(); }
};

/// Throws UnsupportedDimension (dim V < 2), RelationDependence (w in R_S), NotCentral,
/// NotQuantumPolynomial (when required) and NotRegularCertificate.
HypersurfaceContext build_context(const QuadraticPresentation& S, const Vector& w, const ContextOptions& options = {});

/// M = Omega^d(k_A)(d): generators the echelon basis of C_d in degree 0, relations the rows
/// of the C_{d+1} matrix in degree 1.
ModulePresentation syzygy_presentation(const HypersurfaceContext& ctx);

struct EndAlgebraResult {
    /// Flattened row-major n x n matrices F with f(c_j) = sum_i F_ij c_i.
    Subspace solution_space;
    std::vector<Matrix> basis;
    FiniteDimAlgebra algebra;
};

/// { f in End(C_d) : (f (x) 1)(C_{d+1}) is contained in C_{d+1} }, with composition as product.
EndAlgebraResult end_M(const HypersurfaceContext& ctx);

struct DualCentral {
    Vector varpi;  // in A^!_2
    std::size_t m = 0;
    std::size_t checked_to = 0;
};

struct CAlgebraResult {
    std::shared_ptr<const QuadraticAlgebra> dual;
    DualCentral central;
    FiniteDimAlgebra algebra;
};

/// C(A) realized on A^!_{2m} with product (varpi^m)^{-1}(a b). Throws NoStableCentral.
CAlgebraResult c_algebra_via_dual(const HypersurfaceContext& ctx, std::size_t m = 0);

struct Identity {
    std::string name;
    long long lhs;
    long long rhs;
    bool ok() const { return lhs == rhs; }
};

struct DimensionReport {
    bool skipped = false;
    std::string reason;
    long long dual_total = 0;  // dim S^!
    std::vector<Identity> identities;
    bool passed() const;
};

DimensionReport dimension_identities(const HypersurfaceContext& ctx, const EndAlgebraResult& end);

}  // namespace quadric
