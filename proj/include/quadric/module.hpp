#pragma once

#include "quadric/quadratic.hpp"

#include <string>
#include <vector>

namespace quadric {

/// A finitely presented graded right module over a quadratic algebra.
///
/// A relation of degree r is a vector over the concatenation, in generator order, of the
/// components A_{r - deg g}; blocks with r < deg g are empty.
struct ModulePresentation {
    struct Relation {
        int degree = 0;
        Vector coords;
    };

    AlgebraPtr algebra;
    std::vector<int> generator_degrees;
    std::vector<std::string> generator_labels;
    std::vector<Relation> relations;

    std::size_t num_generators() const { return generator_degrees.size(); }
};

/// dim of the free module part in degree n: sum over generators of dim A_{n - deg g}.
std::size_t free_dim(const ModulePresentation& P, int n);

/// Offset of generator g's block inside the degree-n free component.
std::size_t free_offset(const ModulePresentation& P, std::size_t g, int n);

/// The degree-n part of the submodule generated by the relations, inside the free component.
Subspace relation_component(const ModulePresentation& P, int n);

/// dim M_n = dim F_n - dim K_n.
std::size_t module_graded_dim(const ModulePresentation& P, int n);
std::vector<std::size_t> module_hilbert(const ModulePresentation& P, int from, int to);

/// u * a for u in the degree-m free component and a in A_k.
Vector free_times(const ModulePresentation& P, const Vector& u, int m, const Vector& a, std::size_t k);

/// The free module A(-shift) on one generator, no relations.
ModulePresentation free_module(const AlgebraPtr& algebra, int shift = 0);

/// A / xA for x in A_1.
ModulePresentation cyclic_quotient(const AlgebraPtr& algebra, const Vector& x);

}  // namespace quadric
