#pragma once

#include "quadric/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadric {

/// Univariate polynomial over a FieldSpec, lowest degree first, no trailing zeros.
class Polynomial {
public:
    explicit Polynomial(Field field) : field_(std::move(field)) {}
    Polynomial(Field field, std::vector<FieldElement> coeffs);

    /// t - a
    static Polynomial linear(const FieldElement& a);

    const Field& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const FieldElement& leading() const { return coeffs_.back(); }

    FieldElement eval(const FieldElement& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::pair<Polynomial, Polynomial> divmod(const Polynomial& b) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();

    Field field_;
    std::vector<FieldElement> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

struct RootSearch {
    std::vector<FieldElement> roots;
    /// True when every root of p lying in the base field is known to be listed.
    bool complete = true;
};

/// Roots of p in its base field, each once. Exhaustive over Q and Q(i); best effort over
/// other extensions, with `complete` cleared when the search could not be finished.
RootSearch roots_in_field(const Polynomial& p);

struct SqrtSearch {
    std::optional<FieldElement> root;
    bool decided = true;
};

/// A square root of a in the base field, if one exists. `decided` is false when the
/// search cannot rule out a root (extensions of degree > 2 with non-rational input).
SqrtSearch sqrt_in_field(const FieldElement& a);

}  // namespace quadric
