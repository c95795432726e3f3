#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadric/error.hpp"
#include "quadric/polynomial.hpp"
#include "support.hpp"

using namespace quadric;
using namespace quadric::testing;

TEST_CASE("rational arithmetic")
{
    auto Q = FieldSpec::rationals();
    CHECK(q(Q, 1, 2) + q(Q, 1, 3) == q(Q, 5, 6));
    CHECK((q(Q, 3, 4) / q(Q, 3, 2)).str() == "1/2");
    CHECK_THROWS_AS(q(Q, 1) / q(Q, 0), Error);
}

TEST_CASE("gaussian arithmetic")
{
    auto i = FieldElement::generator(FieldSpec::gaussian());
    CHECK(i * i == gi(-1, 0));
    CHECK((gi(1, 2) * gi(1, -2)) == gi(5, 0));
    CHECK(gi(3, 4).inverse() == gi(3, -4, 25));
    CHECK(gi(0, 1, 2).str() == "1/2*i");
    CHECK(gi(1, -1, 2).str() == "1/2 - 1/2*i");
    CHECK(gi(0, -1).str() == "-i");
}

TEST_CASE("simple extension reduces modulo the modulus")
{
    auto K = FieldSpec::extension({-2, 0, 1});
    auto t = FieldElement::generator(K);
    auto one = FieldElement(K, 1);
    CHECK((one + t) * (one - t) == FieldElement(K, -1));
    CHECK(t.inverse() == t * FieldElement(K, Rational(1, 2)));
    CHECK(K->describe() == "Q[t]/(t^2-2)");
    CHECK(K->irreducibility_certified());
}

TEST_CASE("extension moduli")
{
    CHECK_THROWS_AS(FieldSpec::extension({-1, 0, 1}), Error);  // t^2 - 1 = (t-1)(t+1)
    CHECK_THROWS_AS(FieldSpec::extension({1, 2}), Error);
    auto quartic = FieldSpec::extension({2, 0, 0, 0, 1});
    CHECK_FALSE(quartic->irreducibility_certified());
    auto t = FieldElement::generator(quartic);
    CHECK(t * t * t * t == FieldElement(quartic, -2));
    CHECK(t * t.inverse() == FieldElement(quartic, 1));
}

TEST_CASE("mixed fields are rejected")
{
    auto a = FieldElement(FieldSpec::rationals(), 1);
    auto b = gi(1, 0);
    try {
        (void)(a + b);
        FAIL("expected FieldMismatch");
    }
    catch (const Error& e) {
        CHECK(e.code() == Errc::field_mismatch);
    }
}

TEST_CASE("field axioms on random elements")
{
    for (auto f : {FieldSpec::rationals(), FieldSpec::gaussian(), FieldSpec::extension({-2, 0, 1}),
                   FieldSpec::extension({1, 1, 0, 1})}) {
        Lcg rng(17);
        for (int trial = 0; trial < 60; ++trial) {
            auto a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero())
                CHECK((a * a.inverse()).is_one());
        }
    }
}

namespace {

Polynomial poly(const Field& f, std::vector<FieldElement> c)
{
    return Polynomial(f, std::move(c));
}

}  // namespace

TEST_CASE("roots over Q")
{
    auto Q = FieldSpec::rationals();
    auto r = roots_in_field(poly(Q, {q(Q, -1), q(Q, 0), q(Q, 1)}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == q(Q, -1));
    CHECK(r.roots[1] == q(Q, 1));
    CHECK(r.complete);

    auto none = roots_in_field(poly(Q, {q(Q, 1), q(Q, 0), q(Q, 1)}));
    CHECK(none.roots.empty());
    CHECK(none.complete);

    // (2t - 3)^2 (t + 1/2) t
    auto p = poly(Q, {q(Q, -3), q(Q, 2)}) * poly(Q, {q(Q, -3), q(Q, 2)}) * poly(Q, {q(Q, 1, 2), q(Q, 1)}) *
             poly(Q, {q(Q, 0), q(Q, 1)});
    auto rp = roots_in_field(p);
    REQUIRE(rp.roots.size() == 3);
    CHECK(rp.roots[0] == q(Q, -1, 2));
    CHECK(rp.roots[1] == q(Q, 0));
    CHECK(rp.roots[2] == q(Q, 3, 2));
}

TEST_CASE("roots over Q(i)")
{
    auto G = FieldSpec::gaussian();
    auto r = roots_in_field(poly(G, {gi(1, 0), gi(0, 0), gi(1, 0)}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == gi(0, -1));
    CHECK(r.roots[1] == gi(0, 1));

    // roots (3+2i)/2, -i, 5 with a repeated factor
    auto lin = [&](const FieldElement& a) { return Polynomial::linear(a); };
    auto p = lin(gi(3, 2, 2)) * lin(gi(0, -1)) * lin(gi(0, -1)) * lin(gi(5, 0));
    auto rp = roots_in_field(p);
    CHECK(rp.complete);
    REQUIRE(rp.roots.size() == 3);
    for (const auto& x : rp.roots)
        CHECK(p.eval(x).is_zero());
}

TEST_CASE("roots over a quadratic extension")
{
    auto K = FieldSpec::extension({-2, 0, 1});
    auto t = FieldElement::generator(K);
    auto r = roots_in_field(Polynomial(K, {FieldElement(K, -2), FieldElement(K), FieldElement(K, 1)}));
    CHECK(r.complete);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == -t);
    CHECK(r.roots[1] == t);

    // t^2 + 1 has no root in Q(sqrt 2), and that is decidable
    auto none = roots_in_field(Polynomial(K, {FieldElement(K, 1), FieldElement(K), FieldElement(K, 1)}));
    CHECK(none.roots.empty());
    CHECK(none.complete);
}

TEST_CASE("returned roots are roots, and split inputs are found completely")
{
    Lcg rng(5);
    for (auto f : {FieldSpec::rationals(), FieldSpec::gaussian()}) {
        for (int trial = 0; trial < 15; ++trial) {
            Polynomial p(f, {FieldElement(f, 1)});
            std::vector<FieldElement> chosen;
            std::size_t deg = static_cast<std::size_t>(rng.next(1, 4));
            for (std::size_t k = 0; k < deg; ++k) {
                std::vector<Rational> c;
                for (std::size_t j = 0; j < f->degree(); ++j)
                    c.emplace_back(rng.next(-4, 4), rng.next(1, 2));
                for (auto& x : c)
                    x.canonicalize();
                FieldElement root(f, c);
                chosen.push_back(root);
                p = p * Polynomial::linear(root);
            }
            auto r = roots_in_field(p);
            CHECK(r.complete);
            for (const auto& x : r.roots)
                CHECK(p.eval(x).is_zero());
            for (const auto& x : chosen)
                CHECK(std::find(r.roots.begin(), r.roots.end(), x) != r.roots.end());
        }
    }
}

TEST_CASE("sqrt in field")
{
    auto G = FieldSpec::gaussian();
    auto s = sqrt_in_field(gi(0, 2));  // (1+i)^2 = 2i
    REQUIRE(s.root);
    CHECK(*s.root * *s.root == gi(0, 2));
    CHECK_FALSE(sqrt_in_field(gi(0, 1)).root);  // sqrt(i) is not in Q(i)
    auto Q = FieldSpec::rationals();
    CHECK_FALSE(sqrt_in_field(q(Q, 2)).root);
    CHECK(*sqrt_in_field(q(Q, 9, 4)).root == q(Q, 3, 2));
}
