#pragma once

#include "quadric/linalg.hpp"

#include <vector>

namespace quadric {

/// A word in the generators; flat index is row-major with the leftmost letter most significant.
using Word = std::vector<std::size_t>;

std::size_t ipow(std::size_t base, std::size_t exp);
std::size_t flat_index(const Word& w, std::size_t num_gens);
Word word_at(std::size_t flat, std::size_t length, std::size_t num_gens);

/// a (x) b in V^{(x)(m+n)} from a in V^{(x)m} and b in V^{(x)n}.
Vector tensor(const Vector& a, const Vector& b);

/// V^{(x)i} (x) w (x) V^{(x)(n-i-2)} for w a subspace of V (x) V.
Subspace place(const Subspace& w, std::size_t num_gens, std::size_t i, std::size_t n);

/// Degree-n component of the two-sided ideal generated by R: the sum of all placements.
Subspace ideal_component(const Subspace& relations, std::size_t num_gens, std::size_t n);

/// C_n: C_0 = k, C_1 = V, C_2 = R, C_n = intersection of all placements of R in V^{(x)n}.
/// Built by the recursion C_n = (C_{n-1} (x) V) cap (V^{(x)(n-2)} (x) R).
Subspace koszul_space(const Subspace& relations, std::size_t num_gens, std::size_t n);

/// C_0 .. C_max in one pass.
std::vector<Subspace> koszul_spaces(const Subspace& relations, std::size_t num_gens, std::size_t max_degree);

/// Rows: the basis of `upper` (= C_{d+1}) written in the basis {c_k (x) v_l} of `lower` (x) V,
/// column index k * num_gens + l, where c_k is the k-th echelon basis vector of `lower` (= C_d).
Matrix express_in_CdV(const Subspace& lower, const Subspace& upper, std::size_t num_gens);
Matrix express_in_CdV(const Subspace& relations, std::size_t num_gens, std::size_t d);

}  // namespace quadric
