#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadric/error.hpp"
#include "quadric/quadratic.hpp"
#include "support.hpp"

using namespace quadric;
using namespace quadric::testing;

namespace {

// Coefficients of num(t) / (1-t)^k up to t^N.
std::vector<long long> series(std::vector<long long> num, int k, std::size_t N)
{
    num.resize(N + 1, 0);
    for (int r = 0; r < k; ++r)
        for (std::size_t n = 1; n <= N; ++n)
            num[n] += num[n - 1];
    return num;
}

std::vector<long long> as_ll(const std::vector<std::size_t>& v)
{
    return {v.begin(), v.end()};
}

// Oracle for graded dims: g^n - dim of the ideal component computed from placements.
std::size_t tensor_route_dim(const QuadraticPresentation& p, std::size_t n)
{
    return ipow(p.num_gens(), n) - ideal_component(p.relations, p.num_gens(), n).dim();
}

// Oracle for centrality: brute-force membership of w v - v w in U_3.
bool central_by_ideal(const QuadraticPresentation& p, const Vector& w)
{
    auto u3 = ideal_component(p.relations, p.num_gens(), 3);
    for (std::size_t v = 0; v < p.num_gens(); ++v) {
        auto e = unit_vector(p.field, p.num_gens(), v);
        auto a = tensor(w, e), b = tensor(e, w);
        for (std::size_t k = 0; k < a.size(); ++k)
            a[k] -= b[k];
        if (!u3.contains(a))
            return false;
    }
    return true;
}

QuadraticPresentation conic_A(const Field& f)
{
    return with_relation(conic_S(f), conic_w(f));
}

}  // namespace

TEST_CASE("Hilbert functions")
{
    auto G = FieldSpec::gaussian();
    QuadraticAlgebra S(conic_S(G));
    QuadraticAlgebra A(conic_A(G));
    CHECK(as_ll(S.hilbert(3)) == series({1}, 3, 3));
    CHECK(as_ll(S.hilbert(3)) == std::vector<long long>{1, 3, 6, 10});
    CHECK(as_ll(A.hilbert(6)) == series({1, 0, -1}, 3, 6));
    CHECK(as_ll(A.hilbert(4)) == std::vector<long long>{1, 3, 5, 7, 9});

    auto Q = FieldSpec::rationals();
    QuadraticAlgebra free2(QuadraticPresentation(Q, {"x", "y"}, Subspace(Q, 4)));
    CHECK(as_ll(free2.hilbert(3)) == std::vector<long long>{1, 2, 4, 8});
}

TEST_CASE("graded dims agree with the tensor-level ideal")
{
    auto G = FieldSpec::gaussian();
    for (const auto& p : {conic_S(G), conic_A(G), polynomial_ring(G, 2)}) {
        QuadraticAlgebra alg(p);
        for (std::size_t n = 0; n <= 4; ++n) {
            CHECK(alg.dim(n) == tensor_route_dim(p, n));
            // dim A_n + dim U_n = g^n
            CHECK(alg.dim(n) + ideal_component(p.relations, p.num_gens(), n).dim() == ipow(p.num_gens(), n));
        }
    }
}

TEST_CASE("multiplication in the conic hypersurface")
{
    auto G = FieldSpec::gaussian();
    QuadraticAlgebra A(conic_A(G));
    auto x = A.generator(X), y = A.generator(Y), z = A.generator(Z);
    CHECK(A.multiply(A.one(), 0, x, 1) == x);
    CHECK(A.multiply(x, 1, A.one(), 0) == x);

    auto xx = A.multiply(x, 1, x, 1);
    auto yy = A.multiply(y, 1, y, 1);
    for (std::size_t k = 0; k < xx.size(); ++k)
        CHECK(xx[k] == -yy[k]);
    auto xz = A.multiply(x, 1, z, 1);
    auto zx = A.multiply(z, 1, x, 1);
    for (std::size_t k = 0; k < xz.size(); ++k)
        CHECK(xz[k] == -zx[k]);
    CHECK(A.normal_form({X, X}) == xx);
    CHECK(A.project(t2(G, 3, {{X, X, gi(1, 0)}, {Z, Z, gi(1, 0)}}), 2) == zero_vector(G, A.dim(2)));
}

TEST_CASE("property: multiplication is associative and bilinear")
{
    auto G = FieldSpec::gaussian();
    QuadraticAlgebra A(conic_A(G));
    QuadraticAlgebra S(conic_S(G));
    Lcg rng(99);
    auto random_in = [&](const QuadraticAlgebra& alg, std::size_t n) {
        Vector v;
        for (std::size_t k = 0; k < alg.dim(n); ++k)
            v.push_back(random_element(rng, G, 2));
        return v;
    };
    for (const QuadraticAlgebra* alg : {&A, &S}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto m = static_cast<std::size_t>(rng.next(0, 2));
            auto n = static_cast<std::size_t>(rng.next(0, 2));
            auto p = static_cast<std::size_t>(rng.next(0, 2));
            auto a = random_in(*alg, m), b = random_in(*alg, n), c = random_in(*alg, p);
            auto left = alg->multiply(alg->multiply(a, m, b, n), m + n, c, p);
            auto right = alg->multiply(a, m, alg->multiply(b, n, c, p), n + p);
            CHECK(left == right);
            auto b2 = random_in(*alg, n);
            Vector sum = b;
            for (std::size_t k = 0; k < sum.size(); ++k)
                sum[k] += b2[k];
            auto lhs = alg->multiply(a, m, sum, n);
            auto r1 = alg->multiply(a, m, b, n), r2 = alg->multiply(a, m, b2, n);
            for (std::size_t k = 0; k < r1.size(); ++k)
                r1[k] += r2[k];
            CHECK(lhs == r1);
        }
    }
}

TEST_CASE("quadratic dual")
{
    auto Q = FieldSpec::rationals();
    auto k2 = polynomial_ring(Q, 2);
    QuadraticAlgebra ext(quadratic_dual(k2));
    CHECK(ext.hilbert(3) == std::vector<std::size_t>{1, 2, 1, 0});
    CHECK(ext.presentation().generators == std::vector<std::string>{"x'", "y'"});

    auto G = FieldSpec::gaussian();
    QuadraticAlgebra sdual(quadratic_dual(conic_S(G)));
    CHECK(sdual.hilbert(4) == std::vector<std::size_t>{1, 3, 3, 1, 0});

    auto full = QuadraticPresentation(Q, {"x", "y"}, Subspace::full(Q, 4));
    auto fd = quadratic_dual(full);
    CHECK(fd.relations.dim() == 0);

    for (const auto& p : {conic_S(G), conic_A(G)}) {
        auto dd = quadratic_dual(quadratic_dual(p));
        CHECK(dd.relations == p.relations);
        CHECK(dd.generators == p.generators);
        CHECK(quadratic_dual(p).relations.dim() == 9 - p.relations.dim());
    }
}

TEST_CASE("dual graded dims equal Koszul space dims on Koszul inputs")
{
    auto G = FieldSpec::gaussian();
    for (const auto& p : {conic_S(G), conic_A(G), polynomial_ring(G, 3)}) {
        QuadraticAlgebra dual(quadratic_dual(p));
        auto spaces = koszul_spaces(p.relations, p.num_gens(), 5);
        for (std::size_t n = 0; n <= 5; ++n)
            CHECK(dual.dim(n) == spaces[n].dim());
    }
}

TEST_CASE("centrality of degree-2 elements")
{
    auto G = FieldSpec::gaussian();
    QuadraticAlgebra S(conic_S(G));
    auto w = conic_w(G);
    CHECK(is_central_deg2(S, w));
    CHECK(central_by_ideal(S.presentation(), w));

    // x^2 is central in S too: x^2 = -y^2 and x^2 commutes with z by the anticommutation
    auto xx = t2(G, 3, {{X, X, gi(1, 0)}});
    CHECK(central_by_ideal(S.presentation(), xx));
    CHECK(is_central_deg2(S, xx));

    auto xy = t2(G, 3, {{X, Y, gi(1, 0)}});
    CHECK_FALSE(central_by_ideal(S.presentation(), xy));
    CHECK_FALSE(is_central_deg2(S, xy));

    auto Q = FieldSpec::rationals();
    QuadraticAlgebra k2(polynomial_ring(Q, 2));
    Lcg rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        Vector w2;
        for (int k = 0; k < 4; ++k)
            w2.push_back(random_element(rng, Q));
        CHECK(is_central_deg2(k2, w2));
    }
}

TEST_CASE("regularity certificate")
{
    auto G = FieldSpec::gaussian();
    QuadraticAlgebra S(conic_S(G));
    auto cert = is_regular_deg2(S, conic_w(G), 5);
    CHECK(cert.passed());
    QuadraticAlgebra A(conic_A(G));
    CHECK(A.hilbert(5) == std::vector<std::size_t>{1, 3, 5, 7, 9, 11});

    auto Q = FieldSpec::rationals();
    QuadraticAlgebra k2(polynomial_ring(Q, 2));
    CHECK(is_regular_deg2(k2, t2(Q, 2, {{0, 0, q(Q, 1)}}), 6).passed());

    auto xy = t2(Q, 2, {{0, 1, q(Q, 1)}});
    QuadraticAlgebra kxy(QuadraticPresentation(Q, {"x", "y"}, Subspace::span(Q, 4, {xy})));
    auto bad = is_regular_deg2(kxy, xy, 4);
    CHECK_FALSE(bad.passed());
    CHECK(bad.first_failure() == std::optional<std::size_t>(2));
}

TEST_CASE("Koszul numeric check")
{
    auto G = FieldSpec::gaussian();
    QuadraticAlgebra A(conic_A(G));
    CHECK(koszul_numeric_check(A, 6).passed());

    auto Q = FieldSpec::rationals();
    QuadraticAlgebra free2(QuadraticPresentation(Q, {"x", "y"}, Subspace(Q, 4)));
    CHECK(koszul_numeric_check(free2, 5).passed());

    QuadraticAlgebra dual_numbers(QuadraticPresentation(Q, {"x"}, Subspace::full(Q, 1)));
    CHECK(dual_numbers.hilbert(3) == std::vector<std::size_t>{1, 1, 0, 0});
    CHECK(koszul_numeric_check(dual_numbers, 6).passed());
}

TEST_CASE("quantum polynomial certificate")
{
    auto G = FieldSpec::gaussian();
    CHECK(quantum_polynomial_check(QuadraticAlgebra(conic_S(G)), 6).passed());
    auto Q = FieldSpec::rationals();
    CHECK(quantum_polynomial_check(QuadraticAlgebra(polynomial_ring(Q, 2)), 6).passed());
    QuadraticAlgebra free2(QuadraticPresentation(Q, {"x", "y"}, Subspace(Q, 4)));
    CHECK_FALSE(quantum_polynomial_check(free2, 4).passed());
}

TEST_CASE("presentations reject duplicate names")
{
    auto Q = FieldSpec::rationals();
    CHECK_THROWS_AS(QuadraticPresentation(Q, {"x", "x"}, Subspace(Q, 4)), Error);
}

TEST_CASE("formatting elements")
{
    auto G = FieldSpec::gaussian();
    QuadraticAlgebra A(conic_A(G));
    Vector u{gi(0, 0), gi(1, 0), gi(0, 1)};
    CHECK(A.format(u, 1) == "y + i*z");
    Vector v{gi(1, 0), gi(0, 0), gi(-1, 0)};
    CHECK(A.format(v, 1) == "x - z");
}
