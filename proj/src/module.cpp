#include "quadric/module.hpp"

#include "quadric/error.hpp"

namespace quadric {

namespace {

std::size_t component_dim(const QuadraticAlgebra& A, int n)
{
    return n < 0 ? 0 : A.dim(static_cast<std::size_t>(n));
}

}  // namespace

std::size_t free_dim(const ModulePresentation& P, int n)
{
    std::size_t total = 0;
    for (int deg : P.generator_degrees)
        total += component_dim(*P.algebra, n - deg);
    return total;
}

std::size_t free_offset(const ModulePresentation& P, std::size_t g, int n)
{
    std::size_t off = 0;
    for (std::size_t h = 0; h < g; ++h)
        off += component_dim(*P.algebra, n - P.generator_degrees[h]);
    return off;
}

Vector free_times(const ModulePresentation& P, const Vector& u, int m, const Vector& a, std::size_t k)
{
    const QuadraticAlgebra& A = *P.algebra;
    int target = m + static_cast<int>(k);
    Vector out;
    out.reserve(free_dim(P, target));
    std::size_t off = 0;
    for (int deg : P.generator_degrees) {
        int src = m - deg;
        std::size_t len = component_dim(A, src);
        if (target - deg < 0)
            continue;
        if (src < 0) {
            auto zeros = zero_vector(A.field(), A.dim(static_cast<std::size_t>(target - deg)));
            out.insert(out.end(), zeros.begin(), zeros.end());
            continue;
        }
        Vector block(u.begin() + static_cast<std::ptrdiff_t>(off), u.begin() + static_cast<std::ptrdiff_t>(off + len));
        auto prod = A.multiply(block, static_cast<std::size_t>(src), a, k);
        out.insert(out.end(), prod.begin(), prod.end());
        off += len;
    }
    return out;
}

Subspace relation_component(const ModulePresentation& P, int n)
{
    const QuadraticAlgebra& A = *P.algebra;
    std::vector<Vector> vecs;
    for (const auto& r : P.relations) {
        if (r.coords.size() != free_dim(P, r.degree))
            throw Error(Errc::dimension_mismatch, "relation vector does not match its degree");
        int k = n - r.degree;
        if (k < 0)
            continue;
        for (std::size_t b = 0; b < A.dim(static_cast<std::size_t>(k)); ++b)
            vecs.push_back(free_times(P, r.coords, r.degree, unit_vector(A.field(), A.dim(static_cast<std::size_t>(k)), b),
                                      static_cast<std::size_t>(k)));
    }
    return Subspace::span(A.field(), free_dim(P, n), vecs);
}

std::size_t module_graded_dim(const ModulePresentation& P, int n)
{
    return free_dim(P, n) - relation_component(P, n).dim();
}

std::vector<std::size_t> module_hilbert(const ModulePresentation& P, int from, int to)
{
    std::vector<std::size_t> out;
    for (int n = from; n <= to; ++n)
        out.push_back(module_graded_dim(P, n));
    return out;
}

ModulePresentation free_module(const AlgebraPtr& algebra, int shift)
{
    ModulePresentation P;
    P.algebra = algebra;
    P.generator_degrees = {shift};
    P.generator_labels = {"1"};
    return P;
}

ModulePresentation cyclic_quotient(const AlgebraPtr& algebra, const Vector& x)
{
    auto P = free_module(algebra);
    P.relations.push_back({1, x});
    return P;
}

}  // namespace quadric
