#pragma once

#include "quadric/hypersurface.hpp"
#include "quadric/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadric {

/// An End(M) element written as an n x n matrix on the C_d basis.
Matrix end_element(const EndAlgebraResult& end, const Vector& coords);

/// The summand e(M) of a module generated in degree 0, presented on a basis of the image
/// of e on the degree-0 generators. Relations are searched in degrees 1 and 2, and the
/// presented Hilbert function is compared with the directly computed one up to `check_to`;
/// a mismatch throws AdditivityViolated.
ModulePresentation idempotent_summand(const ModulePresentation& P, const Matrix& e, int check_to = 6);

/// dim of (sum_j u_j A)_n inside M_n, for degree-0 elements u_j of the free part of M.
std::size_t submodule_dim(const ModulePresentation& P, const std::vector<Vector>& generators, int n);

struct CyclicIdentification {
    /// Spans the degree-1 annihilator of the generator when that is a line.
    std::optional<Vector> x;
    std::size_t annihilator_dim = 0;
    /// dim (A/xA)_n == dim N_n for 0 <= n <= N.
    bool hilbert_match = false;
    std::string diagnostics;
};

/// For a summand with one degree-0 generator: x with N = A/xA, checked up to degree N.
CyclicIdentification identify_cyclic_quotient(const ModulePresentation& summand, std::size_t max_degree);

struct McmSummand {
    Matrix idempotent;
    /// Generators of e(M) in coordinates of the C_d basis.
    std::vector<Vector> generators;
    ModulePresentation presentation;
    CyclicIdentification cyclic;
    std::vector<std::size_t> hilbert;  // degrees 0..N
};

struct McmClassification {
    std::vector<McmSummand> summands;
    std::vector<std::size_t> hilbert_M;
    /// sum_i dim M^i_n == dim M_n for every n <= N.
    bool additive = false;
    std::size_t max_degree = 0;
};

/// Splits M by primitive idempotents of End(M) (coordinates in the End basis).
McmClassification classify_mcm(const HypersurfaceContext& ctx, const EndAlgebraResult& end,
                               const std::vector<Vector>& idempotents, std::size_t max_degree);

struct ShiftEvidence {
    /// dim Omega(M)_n against dim M_{n-1} for 1 <= n <= N.
    Certificate dims;
    /// For each summand u_i: the index j with the degree-1 right annihilator of u_i spanned by u_j.
    std::vector<std::optional<std::size_t>> matching;
    bool permutation = false;
    bool passed() const { return dims.passed() && permutation; }
};

/// Throws NotIsolated when End(M) is not semisimple.
ShiftEvidence syzygy_shift_evidence(const HypersurfaceContext& ctx, const EndAlgebraResult& end,
                                    const McmClassification& classes, std::size_t max_degree);

/// dim Hom_A(P, Q)_n: generator assignments in degree deg g + n killing every relation,
/// modulo those that vanish in Q.
std::size_t hom_graded(const ModulePresentation& P, const ModulePresentation& Q, int n);

/// Degree-0 homomorphisms of a module generated in degree 0 with relations in positive
/// degree, as matrices on the generators (column j is the image of generator j).
std::vector<Matrix> degree_zero_endomorphisms(const ModulePresentation& P);

ModulePresentation direct_sum(const ModulePresentation& P, const ModulePresentation& Q);

struct PreresolutionTable {
    /// Objects: the summands followed by A. dims[i][j][n - min_degree] = dim Hom(P_i, P_j)_n.
    std::vector<std::string> labels;
    int min_degree = -3;
    int max_degree = 6;
    std::vector<std::vector<std::vector<std::size_t>>> dims;
    bool nonnegative = false;

    std::size_t b0_dim = 0;
    /// Hom(M^i, A)_0 = 0 for every i.
    bool corner_zero = false;
    /// Hom(A, M^i)_0 = M^i_0 for every i.
    bool column_is_M0 = false;
    /// The M-M corner of B_0 is End(M).
    bool diagonal_is_end = false;
    bool diagonal_semisimple = false;
    std::optional<FiniteDimAlgebra> b0;

    std::size_t at(std::size_t i, std::size_t j, int n) const
    {
        return dims[i][j][static_cast<std::size_t>(n - min_degree)];
    }
};

/// Throws NotIsolated when End(M) is not semisimple.
PreresolutionTable preresolution_table(const HypersurfaceContext& ctx, const EndAlgebraResult& end,
                                       const McmClassification& classes, int max_degree, int min_degree = -3);

/// dim M_n from the Koszul complex: the rank of C_d (x) A_n -> C_{d-1} (x) A_{n+1}.
std::size_t koszul_syzygy_dim(const HypersurfaceContext& ctx, std::size_t n);

}  // namespace quadric
