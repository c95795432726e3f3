#pragma once

#include "quadric/linalg.hpp"
#include "quadric/tensor.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace quadric {

/// T(V)/(R): generator names form an ordered basis of V, relations live in V (x) V.
struct QuadraticPresentation {
    Field field;
    std::vector<std::string> generators;
    Subspace relations;

    QuadraticPresentation(Field f, std::vector<std::string> names, Subspace rels);

    std::size_t num_gens() const { return generators.size(); }
};

/// Same generators, relations R + span{w}.
QuadraticPresentation with_relation(const QuadraticPresentation& p, const Vector& w);

/// T(V*)/(R^perp) under the pairing <a (x) b, f (x) g> = f(a) g(b).
QuadraticPresentation quadratic_dual(const QuadraticPresentation& p);

/// Degree-n piece of T(V)/(R).
struct GradedComponent {
    std::size_t degree = 0;
    /// Normal words, ascending in the lexicographic word order; they index the coordinates.
    std::vector<Word> words;
    /// Entry j * num_gens + v: coordinates of (words_{n-1}[j] * v) in this component.
    std::vector<Vector> right_mult;
};

/// A quadratic algebra with its graded components computed on demand. Components are
/// appended under a lock and never modified afterwards.
class QuadraticAlgebra {
public:
    explicit QuadraticAlgebra(QuadraticPresentation p);
    QuadraticAlgebra(const QuadraticAlgebra&) = delete;
    QuadraticAlgebra& operator=(const QuadraticAlgebra&) = delete;

    const QuadraticPresentation& presentation() const { return pres_; }
    const Field& field() const { return pres_.field; }
    std::size_t num_gens() const { return pres_.num_gens(); }

    const GradedComponent& component(std::size_t n) const;
    std::size_t dim(std::size_t n) const { return component(n).words.size(); }
    /// dim A_0 .. dim A_N
    std::vector<std::size_t> hilbert(std::size_t max_degree) const;

    Vector one() const;
    Vector generator(std::size_t v) const;
    /// a * v for a in A_m and a generator v.
    Vector times_generator(const Vector& a, std::size_t m, std::size_t v) const;
    /// a * b for a in A_m, b in A_n.
    Vector multiply(const Vector& a, std::size_t m, const Vector& b, std::size_t n) const;
    Vector normal_form(const Word& w) const;
    /// Image of a tensor in V^{(x)n} in A_n.
    Vector project(const Vector& tensor, std::size_t n) const;
    /// Matrix of b -> a * b from A_n to A_{m+n} (columns indexed by the basis of A_n).
    Matrix left_mult_matrix(const Vector& a, std::size_t m, std::size_t n) const;

    /// Human-readable element of A_n, e.g. "x*y - 1/2*z*z".
    std::string format(const Vector& a, std::size_t n) const;

private:
    void extend_locked(std::size_t n) const;

    QuadraticPresentation pres_;
    mutable std::mutex mutex_;
    mutable std::deque<GradedComponent> components_;
};

using AlgebraPtr = std::shared_ptr<const QuadraticAlgebra>;

/// Outcome of one degree in a degree-by-degree certificate.
struct DegreeCheck {
    std::size_t degree;
    long long expected;
    long long actual;
    bool ok() const { return expected == actual; }
};

/// A check verified only up to a truncation degree; passing is evidence, not proof.
struct Certificate {
    std::string name;
    std::size_t max_degree = 0;
    std::vector<DegreeCheck> checks;
    std::vector<std::string> notes;

    bool passed() const;
    std::optional<std::size_t> first_failure() const;
};

/// w in V (x) V is central in the algebra iff w v - v w vanishes in degree 3 for every generator.
bool is_central_deg2(const QuadraticAlgebra& algebra, const Vector& w);

/// dim (S/wS)_n == dim S_n - dim S_{n-2} for 2 <= n <= N.
Certificate is_regular_deg2(const QuadraticAlgebra& algebra, const Vector& w, std::size_t max_degree);

/// Coefficients of H_A(t) H_{A^!}(-t) equal those of 1 up to t^N.
Certificate koszul_numeric_check(const QuadraticAlgebra& algebra, std::size_t max_degree);

/// Hilbert-level evidence that S is a quantum polynomial algebra on g generators:
/// H_S = 1/(1-t)^g and H_{S^!} = (1+t)^g up to degree N, plus the Koszul numeric identity.
Certificate quantum_polynomial_check(const QuadraticAlgebra& algebra, std::size_t max_degree);

/// Parse-free helper: the element of V (x) V with the given coefficient on word (a, b).
Vector quadratic_tensor(const Field& field, std::size_t num_gens,
                        const std::vector<std::pair<std::pair<std::size_t, std::size_t>, FieldElement>>& terms);

}  // namespace quadric
