#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadric/error.hpp"
#include "quadric/tensor.hpp"
#include "support.hpp"

using namespace quadric;
using namespace quadric::testing;

namespace {

// Oracle: intersect every placement V^i (x) R (x) V^j directly.
Subspace koszul_by_intersection(const Subspace& r, std::size_t g, std::size_t n)
{
    Subspace acc = Subspace::full(r.field(), ipow(g, n));
    for (std::size_t i = 0; i + 2 <= n; ++i)
        acc = intersect(acc, place(r, g, i, n));
    return acc;
}

Subspace conic_RA(const Field& f)
{
    return Subspace::span(f, 9, conic_RA_basis(f));
}

}  // namespace

TEST_CASE("flat indices are row-major, leftmost significant")
{
    CHECK(flat_index({1, 0, 2}, 3) == 11);
    CHECK(word_at(11, 3, 3) == Word{1, 0, 2});
    CHECK(word_at(0, 0, 3).empty());
}

TEST_CASE("placements")
{
    auto G = FieldSpec::gaussian();
    auto r = conic_RA(G);
    CHECK(place(r, 3, 0, 2) == r);
    CHECK(place(Subspace(G, 9), 3, 1, 4).dim() == 0);
    CHECK(place(r, 3, 0, 3).dim() == 12);
    CHECK(place(r, 3, 1, 3).dim() == 12);
    CHECK_THROWS_AS(place(r, 3, 2, 3), Error);
}

TEST_CASE("C_3 of the conic hypersurface is spanned by the four listed tensors")
{
    auto G = FieldSpec::gaussian();
    auto m = conic_RA_basis(G);
    auto c3 = koszul_space(conic_RA(G), 3, 3);
    CHECK(c3.dim() == 4);
    CHECK(intersect(place(conic_RA(G), 3, 0, 3), place(conic_RA(G), 3, 1, 3)) == c3);

    auto e = [&](std::size_t v) { return unit_vector(G, 3, v); };
    auto add = [](Vector a, const Vector& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            a[k] += b[k];
        return a;
    };
    auto scale = [](const FieldElement& s, Vector a) {
        for (auto& x : a)
            x *= s;
        return a;
    };
    auto two = gi(2, 0), minus = gi(-1, 0);
    std::vector<Vector> listed{
        add(add(tensor(m[0], e(X)), tensor(m[1], e(Y))), tensor(m[2], e(Z))),
        add(add(add(scale(two, tensor(m[0], e(X))), tensor(m[1], e(Y))), tensor(m[2], e(Z))), tensor(m[3], e(Z))),
        add(add(tensor(m[1], e(Z)), scale(minus, tensor(m[2], e(Y)))), tensor(m[3], e(Y))),
        add(add(add(tensor(m[0], e(Z)), tensor(m[1], e(Z))), scale(minus, tensor(m[2], e(Y)))),
            tensor(m[3], add(e(X), e(Y)))),
    };
    CHECK(Subspace::span(G, 27, listed) == c3);
}

TEST_CASE("Koszul spaces of polynomial rings are exterior powers")
{
    auto Q = FieldSpec::rationals();
    const long binom3[] = {1, 3, 3, 1, 0, 0};
    auto r3 = polynomial_ring(Q, 3).relations;
    auto spaces = koszul_spaces(r3, 3, 5);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(spaces[n].dim() == static_cast<std::size_t>(binom3[n]));
    for (std::size_t n = 3; n <= 4; ++n)
        CHECK(koszul_by_intersection(r3, 3, n) == spaces[n]);

    auto r4 = polynomial_ring(Q, 4).relations;
    const long binom4[] = {1, 4, 6, 4, 1, 0};
    auto s4 = koszul_spaces(r4, 4, 5);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(s4[n].dim() == static_cast<std::size_t>(binom4[n]));
}

TEST_CASE("recursion agrees with direct intersection on the conic")
{
    auto G = FieldSpec::gaussian();
    auto r = conic_RA(G);
    auto spaces = koszul_spaces(r, 3, 5);
    for (std::size_t n = 3; n <= 4; ++n)
        CHECK(koszul_by_intersection(r, 3, n) == spaces[n]);
    for (std::size_t n = 2; n <= 5; ++n)
        CHECK(spaces[n].dim() == 4);
    // C_{n+1} sits in both C_n (x) V and V (x) C_n
    for (std::size_t n = 2; n < 5; ++n) {
        auto left = Subspace::span(G, ipow(3, n + 1), [&] {
            std::vector<Vector> out;
            for (const auto& c : spaces[n].basis_vectors())
                for (std::size_t v = 0; v < 3; ++v) {
                    out.push_back(tensor(c, unit_vector(G, 3, v)));
                    out.push_back(tensor(unit_vector(G, 3, v), c));
                }
            return out;
        }());
        for (const auto& c : spaces[n + 1].basis_vectors())
            CHECK(left.contains(c));
    }
}

TEST_CASE("ideal components")
{
    auto G = FieldSpec::gaussian();
    CHECK(ideal_component(conic_RA(G), 3, 2) == conic_RA(G));
    CHECK(ideal_component(conic_RA(G), 3, 3).dim() == 20);
    CHECK(ideal_component(Subspace(G, 4), 2, 4).dim() == 0);
}

TEST_CASE("express_in_CdV")
{
    auto Q = FieldSpec::rationals();
    // k[x,y]: C_2 = span{xy - yx} in C_1 (x) V
    auto r = polynomial_ring(Q, 2).relations;
    auto m = express_in_CdV(r, 2, 1);
    REQUIRE(m.rows() == 1);
    CHECK(m.row_vector(0) == Vector{q(Q, 0), q(Q, 1), q(Q, -1), q(Q, 0)});

    // zero C_{d+1}
    auto r3 = polynomial_ring(Q, 3).relations;
    CHECK(express_in_CdV(r3, 3, 3).rows() == 0);
}

TEST_CASE("express_in_CdV on the conic reproduces r1..r4 in the hand-picked basis")
{
    auto G = FieldSpec::gaussian();
    auto spaces = koszul_spaces(conic_RA(G), 3, 3);
    auto rows = express_in_CdV(spaces[2], spaces[3], 3);
    CHECK(rows.rows() == 4);
    CHECK(rows.cols() == 12);

    // change basis: c_k -> m_j via coordinates of c_k in the m-basis
    Basis m(G, 9, conic_RA_basis(G));
    Matrix c_in_m(G, 4, 4);  // row k: c_k in terms of m_j
    for (std::size_t k = 0; k < 4; ++k) {
        auto co = m.coordinates(spaces[2].basis_vector(k));
        REQUIRE(co);
        for (std::size_t j = 0; j < 4; ++j)
            c_in_m(k, j) = (*co)[j];
    }
    std::vector<Vector> converted;
    for (std::size_t r = 0; r < 4; ++r) {
        Vector out = zero_vector(G, 12);
        for (std::size_t k = 0; k < 4; ++k)
            for (std::size_t l = 0; l < 3; ++l)
                for (std::size_t j = 0; j < 4; ++j)
                    out[j * 3 + l] += rows(r, k * 3 + l) * c_in_m(k, j);
        converted.push_back(out);
    }
    // r1 = m1 x + m2 y + m3 z, r2 = 2 m1 x + m2 y + m3 z + m4 z,
    // r3 = m2 z - m3 y + m4 y, r4 = m1 z + m2 z - m3 y + m4 (x + y)
    auto rel = [&](std::vector<std::tuple<std::size_t, std::size_t, long>> terms) {
        Vector v = zero_vector(G, 12);
        for (auto [j, l, c] : terms)
            v[j * 3 + l] += gi(c, 0);
        return v;
    };
    std::vector<Vector> reference{
        rel({{0, X, 1}, {1, Y, 1}, {2, Z, 1}}),
        rel({{0, X, 2}, {1, Y, 1}, {2, Z, 1}, {3, Z, 1}}),
        rel({{1, Z, 1}, {2, Y, -1}, {3, Y, 1}}),
        rel({{0, Z, 1}, {1, Z, 1}, {2, Y, -1}, {3, X, 1}, {3, Y, 1}}),
    };
    CHECK(Subspace::span(G, 12, converted) == Subspace::span(G, 12, reference));
}
