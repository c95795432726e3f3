#pragma once

// Shared fixtures for the test binaries: the conic example and the two binary-form controls.

#include "quadric/quadratic.hpp"

#include <cstdint>
#include <tuple>
#include <vector>

namespace quadric::testing {

inline FieldElement q(const Field& f, long num, long den = 1)
{
    return FieldElement(f, Rational(num, den));
}

inline FieldElement gi(long re, long im, long den = 1)
{
    return FieldElement(FieldSpec::gaussian(), {Rational(re, den), Rational(im, den)});
}

using Term = std::tuple<std::size_t, std::size_t, FieldElement>;

inline Vector t2(const Field& f, std::size_t g, const std::vector<Term>& terms)
{
    Vector w = zero_vector(f, g * g);
    for (const auto& [a, b, c] : terms)
        w[a * g + b] += c;
    return w;
}

constexpr std::size_t X = 0, Y = 1, Z = 2;

/// S = k<x,y,z>/(xz+zx, yz+zy, x^2+y^2)
inline QuadraticPresentation conic_S(const Field& f)
{
    auto one = q(f, 1);
    std::vector<Vector> rels{
        t2(f, 3, {{X, Z, one}, {Z, X, one}}),
        t2(f, 3, {{Y, Z, one}, {Z, Y, one}}),
        t2(f, 3, {{X, X, one}, {Y, Y, one}}),
    };
    return QuadraticPresentation(f, {"x", "y", "z"}, Subspace::span(f, 9, rels));
}

/// w = x^2 + z^2
inline Vector conic_w(const Field& f)
{
    return t2(f, 3, {{X, X, q(f, 1)}, {Z, Z, q(f, 1)}});
}

/// The hand-picked basis m1..m4 of R_A: xz+zx, yz+zy, xx+yy, xx+zz.
inline std::vector<Vector> conic_RA_basis(const Field& f)
{
    auto one = q(f, 1);
    return {
        t2(f, 3, {{X, Z, one}, {Z, X, one}}),
        t2(f, 3, {{Y, Z, one}, {Z, Y, one}}),
        t2(f, 3, {{X, X, one}, {Y, Y, one}}),
        t2(f, 3, {{X, X, one}, {Z, Z, one}}),
    };
}

/// Polynomial ring on g commuting variables.
inline QuadraticPresentation polynomial_ring(const Field& f, std::size_t g)
{
    std::vector<Vector> rels;
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = a + 1; b < g; ++b)
            rels.push_back(t2(f, g, {{a, b, q(f, 1)}, {b, a, q(f, -1)}}));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < g; ++a)
        names.push_back(std::string(1, static_cast<char>('a' + a)));
    if (g <= 3) {
        const char* xyz[] = {"x", "y", "z"};
        for (std::size_t a = 0; a < g; ++a)
            names[a] = xyz[a];
    }
    return QuadraticPresentation(f, names, Subspace::span(f, g * g, rels));
}

/// k[x,y] with a chosen quadratic form as the hypersurface equation.
inline Vector binary_form(const Field& f, long xx, long xy, long yy)
{
    return t2(f, 2, {{X, X, q(f, xx)}, {X, Y, q(f, xy)}, {Y, X, q(f, xy)}, {Y, Y, q(f, yy)}});
}

/// Small deterministic generator for property tests.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed * 2862933555777941757ULL + 3037000493ULL) {}
    long next(long lo, long hi)
    {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>((state_ >> 33) % span);
    }

private:
    std::uint64_t state_;
};

inline FieldElement random_element(Lcg& rng, const Field& f, long bound = 3)
{
    std::vector<Rational> c;
    for (std::size_t k = 0; k < f->degree(); ++k)
        c.emplace_back(rng.next(-bound, bound), rng.next(1, 3));
    for (auto& x : c)
        x.canonicalize();
    return FieldElement(f, c);
}

}  // namespace quadric::testing
