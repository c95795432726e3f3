#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace quadric {

using Rational = mpq_class;
using Integer = mpz_class;

enum class FieldKind { rationals, gaussian, extension };

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// The base field: Q, Q(i), or Q[t]/(m(t)) for a monic integer polynomial m.
class FieldSpec {
public:
    static Field rationals();
    static Field gaussian();
    /// `modulus` holds the coefficients of m, lowest degree first; it must be monic of degree >= 2.
    /// Irreducibility is certified for degree <= 3 (no rational roots) and taken on trust above.
    static Field extension(const std::vector<Integer>& modulus, std::string variable = "t");

    FieldKind kind() const { return kind_; }
    /// Degree over Q.
    std::size_t degree() const { return modulus_.empty() ? 1 : modulus_.size() - 1; }
    /// Monic modulus, lowest degree first (empty for Q).
    const std::vector<Rational>& modulus() const { return modulus_; }
    /// Printed name of the adjoined element ("i" or the extension variable).
    const std::string& variable() const { return variable_; }
    bool irreducibility_certified() const { return certified_; }
    std::string describe() const;

    bool same_as(const FieldSpec& other) const;

private:
    FieldSpec(FieldKind kind, std::vector<Rational> modulus, std::string variable, bool certified)
        : kind_(kind), modulus_(std::move(modulus)), variable_(std::move(variable)), certified_(certified) {}

    FieldKind kind_;
    std::vector<Rational> modulus_;
    std::string variable_;
    bool certified_;
};

bool same_field(const Field& a, const Field& b);

/// An exact element of a FieldSpec, stored in the power basis 1, t, ..., t^(deg-1).
class FieldElement {
public:
    FieldElement() : FieldElement(FieldSpec::rationals()) {}
    explicit FieldElement(Field field);
    FieldElement(Field field, const Rational& value);
    FieldElement(Field field, long value) : FieldElement(std::move(field), Rational(value)) {}
    FieldElement(Field field, std::vector<Rational> coords);

    /// The adjoined element i or t; over Q this throws invalid_field.
    static FieldElement generator(Field field);

    const Field& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Coordinate at the constant term.
    const Rational& rational_part() const { return coords_[0]; }

    FieldElement inverse() const;
    FieldElement conjugate() const;  // complex conjugation; only meaningful over Q(i)

    FieldElement& operator+=(const FieldElement& b);
    FieldElement& operator-=(const FieldElement& b);
    FieldElement& operator*=(const FieldElement& b);
    FieldElement& operator/=(const FieldElement& b);
    /// *this -= a * b without a temporary for the common case of Q.
    void sub_mul(const FieldElement& a, const FieldElement& b);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Exact text form: "3/2", "1/2*i", "1 - 2*t^2".
    std::string str() const;

private:
    void check_same(const FieldElement& b) const;

    Field field_;
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

namespace qpoly {

// Dense polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
Rational eval(const Poly& p, const Rational& x);
/// All rational roots of p (p nonzero), each once.
std::vector<Rational> rational_roots(Poly p);

}  // namespace qpoly

/// Positive divisors of |n| (n != 0), ascending. Trial division.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace quadric
