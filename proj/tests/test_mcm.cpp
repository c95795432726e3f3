#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadric/error.hpp"
#include "quadric/mcm.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace quadric;
using namespace quadric::testing;

namespace {

HypersurfaceContext conic(const Field& f)
{
    return build_context(conic_S(f), conic_w(f));
}

HypersurfaceContext binary(const Field& f, long xx, long xy, long yy)
{
    return build_context(polynomial_ring(f, 2), binary_form(f, xx, xy, yy));
}

Vector lin(const Field& f, std::vector<FieldElement> c)
{
    (void)f;
    return c;
}

bool proportional(const Vector& a, const Vector& b)
{
    return Subspace::span(a.front().field(), a.size(), {a}) == Subspace::span(b.front().field(), b.size(), {b});
}

struct Pipeline {
    HypersurfaceContext ctx;
    EndAlgebraResult end;
    McmClassification classes;
};

Pipeline run(HypersurfaceContext ctx, std::size_t N = 6)
{
    auto end = end_M(ctx);
    auto ids = primitive_idempotents(end.algebra).idempotents;
    auto classes = classify_mcm(ctx, end, ids, N);
    return {std::move(ctx), std::move(end), std::move(classes)};
}

}  // namespace

TEST_CASE("graded dims of M agree with the Koszul complex")
{
    auto G = FieldSpec::gaussian();
    auto ctx = conic(G);
    auto M = syzygy_presentation(ctx);
    for (std::size_t n = 0; n <= 5; ++n) {
        CHECK(module_graded_dim(M, static_cast<int>(n)) == dim_M_by_kernel(ctx, n));
        CHECK(module_graded_dim(M, static_cast<int>(n)) == koszul_syzygy_dim(ctx, n));
    }
    // four summands, each with Hilbert series 1/(1-t)^2
    CHECK(module_hilbert(M, 0, 3) == std::vector<std::size_t>{4, 8, 12, 16});

    auto node = binary(G, 1, 0, 1);
    auto Mn = syzygy_presentation(node);
    for (std::size_t n = 0; n <= 4; ++n)
        CHECK(module_graded_dim(Mn, static_cast<int>(n)) == koszul_syzygy_dim(node, n));
}

TEST_CASE("free and cyclic modules")
{
    auto G = FieldSpec::gaussian();
    auto ctx = conic(G);
    auto free = free_module(ctx.A);
    CHECK(module_hilbert(free, 0, 4) == std::vector<std::size_t>{1, 3, 5, 7, 9});
    auto x = lin(G, {gi(0, 0), gi(1, 0), gi(0, 1)});  // y + iz
    auto Q = cyclic_quotient(ctx.A, x);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(module_graded_dim(Q, static_cast<int>(n)) == quotient_dim(*ctx.A, x, n));
    // A/uA = uA(1) gives (1 + t) H_{A/uA} = H_A = (1 + t)/(1 - t)^2
    CHECK(module_hilbert(Q, 0, 5) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("summands of trivial idempotents")
{
    auto G = FieldSpec::gaussian();
    auto ctx = conic(G);
    auto M = syzygy_presentation(ctx);
    auto all = idempotent_summand(M, Matrix::identity(G, 4));
    CHECK(module_hilbert(all, 0, 4) == module_hilbert(M, 0, 4));
    auto none = idempotent_summand(M, Matrix(G, 4, 4));
    CHECK(none.num_generators() == 0);
    CHECK(module_graded_dim(none, 3) == 0);
}

TEST_CASE("the conic: four cyclic MCM classes")
{
    auto G = FieldSpec::gaussian();
    auto p = run(conic(G));
    REQUIRE(p.classes.summands.size() == 4);
    CHECK(p.classes.additive);

    std::vector<Vector> expected{
        lin(G, {gi(0, 0), gi(1, 0), gi(0, 1)}),   // y + iz
        lin(G, {gi(0, 0), gi(1, 0), gi(0, -1)}),  // y - iz
        lin(G, {gi(1, 0), gi(0, 0), gi(1, 0)}),   // x + z
        lin(G, {gi(1, 0), gi(0, 0), gi(-1, 0)}),  // x - z
    };
    std::vector<bool> seen(4, false);
    for (const auto& s : p.classes.summands) {
        REQUIRE(s.cyclic.x);
        CHECK(s.cyclic.hilbert_match);
        CHECK(s.generators.size() == 1);
        bool found = false;
        for (std::size_t k = 0; k < 4; ++k)
            if (proportional(*s.cyclic.x, expected[k])) {
                CHECK_FALSE(seen[k]);
                seen[k] = true;
                found = true;
            }
        CHECK(found);
        for (std::size_t n = 0; n <= 6; ++n)
            CHECK(s.hilbert[n] == quotient_dim(*p.ctx.A, *s.cyclic.x, n));
        // the generator is killed by x in M_1
        auto M = syzygy_presentation(p.ctx);
        auto gx = free_times(M, s.generators[0], 0, *s.cyclic.x, 1);
        CHECK(relation_component(M, 1).contains(gx));
    }
}

TEST_CASE("the conic: summand generators match the published idempotent images")
{
    auto G = FieldSpec::gaussian();
    auto p = run(conic(G));
    Basis m(G, 9, conic_RA_basis(G));
    // images of e1..e4 in the basis m1..m4
    std::vector<Vector> reference{
        {gi(0, 0), gi(1, 0), gi(0, -1), gi(0, 1)},
        {gi(0, 0), gi(1, 0), gi(0, 1), gi(0, -1)},
        {gi(1, 0), gi(0, 0), gi(0, 0), gi(1, 0)},
        {gi(1, 0), gi(0, 0), gi(0, 0), gi(-1, 0)},
    };
    std::vector<Vector> ours;
    for (const auto& s : p.classes.summands) {
        Vector tensor_form = zero_vector(G, 9);
        for (std::size_t k = 0; k < 4; ++k)
            for (std::size_t r = 0; r < 9; ++r)
                tensor_form[r] += s.generators[0][k] * p.ctx.koszul[2].basis()(k, r);
        auto co = m.coordinates(tensor_form);
        REQUIRE(co);
        ours.push_back(*co);
    }
    for (const auto& v : reference) {
        bool found = false;
        for (const auto& o : ours)
            found = found || proportional(v, o);
        CHECK(found);
    }
}

TEST_CASE("the node over Q(i): annihilators x + iy and x - iy")
{
    auto G = FieldSpec::gaussian();
    auto p = run(binary(G, 1, 0, 1));
    REQUIRE(p.classes.summands.size() == 2);
    std::vector<Vector> expected{lin(G, {gi(1, 0), gi(0, 1)}), lin(G, {gi(1, 0), gi(0, -1)})};
    for (const auto& s : p.classes.summands) {
        REQUIRE(s.cyclic.x);
        CHECK((proportional(*s.cyclic.x, expected[0]) || proportional(*s.cyclic.x, expected[1])));
    }
    CHECK_FALSE(proportional(*p.classes.summands[0].cyclic.x, *p.classes.summands[1].cyclic.x));
}

TEST_CASE("syzygy shift evidence")
{
    auto G = FieldSpec::gaussian();
    auto p = run(conic(G));
    auto ev = syzygy_shift_evidence(p.ctx, p.end, p.classes, 6);
    CHECK(ev.dims.passed());
    CHECK(ev.dims.checks.size() == 6);
    CHECK(ev.dims.checks[0].actual == 4);
    CHECK(ev.dims.checks[1].actual == 8);
    CHECK(ev.permutation);
    CHECK(ev.passed());

    auto node = run(binary(G, 1, 0, 1));
    CHECK(syzygy_shift_evidence(node.ctx, node.end, node.classes, 6).passed());

    auto cusp = binary(G, 1, 0, 0);
    auto end = end_M(cusp);
    try {
        (void)syzygy_shift_evidence(cusp, end, McmClassification{}, 6);
        FAIL("expected NotIsolated");
    }
    catch (const Error& e) {
        CHECK(e.code() == Errc::not_isolated);
    }
}

TEST_CASE("graded Hom")
{
    auto G = FieldSpec::gaussian();
    auto p = run(conic(G));
    auto A = free_module(p.ctx.A);
    for (int n = -2; n <= 4; ++n)
        CHECK(hom_graded(A, A, n) == (n < 0 ? 0 : p.ctx.A->dim(static_cast<std::size_t>(n))));
    const auto& m1 = p.classes.summands[0].presentation;
    const auto& m2 = p.classes.summands[1].presentation;
    CHECK(hom_graded(m1, m1, 0) == 1);
    CHECK(hom_graded(m1, m2, 0) == 0);
    CHECK(hom_graded(m1, A, 0) == 0);
    CHECK(hom_graded(A, m1, 0) == 1);
    // Hom(A, N)_n = N_n
    for (int n = 0; n <= 4; ++n)
        CHECK(hom_graded(A, m1, n) == module_graded_dim(m1, n));
}

TEST_CASE("pre-resolution table of the conic")
{
    auto G = FieldSpec::gaussian();
    auto p = run(conic(G));
    auto t = preresolution_table(p.ctx, p.end, p.classes, 6);
    CHECK(t.nonnegative);
    CHECK(t.b0_dim == 9);
    CHECK(t.corner_zero);
    CHECK(t.column_is_M0);
    CHECK(t.diagonal_is_end);
    CHECK(t.diagonal_semisimple);
    REQUIRE(t.b0);
    CHECK(radical(*t.b0).dim() == 4);  // the M_0 column
    std::vector<std::size_t> hA;
    for (int n = 0; n <= 6; ++n)
        hA.push_back(t.at(4, 4, n));
    CHECK(hA == std::vector<std::size_t>{1, 3, 5, 7, 9, 11, 13});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(t.at(i, j, 0) == (i == j ? 1u : 0u));

    auto cusp = binary(G, 1, 0, 0);
    auto end = end_M(cusp);
    CHECK_THROWS_AS(preresolution_table(cusp, end, McmClassification{}, 3), Error);
}
