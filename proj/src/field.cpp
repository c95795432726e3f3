#include "quadric/field.hpp"

#include "quadric/error.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace quadric {

const char* to_string(Errc code)
{
    switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::invalid_field: return "InvalidField";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::containment_violated: return "ContainmentViolated";
    case Errc::unsupported_dimension: return "UnsupportedDimension";
    case Errc::not_central: return "NotCentral";
    case Errc::not_regular_certificate: return "NotRegularCertificate";
    case Errc::not_quantum_polynomial: return "NotQuantumPolynomial";
    case Errc::relation_dependence: return "RelationDependence";
    case Errc::no_stable_central: return "NoStableCentral";
    case Errc::not_semisimple: return "NotSemisimple";
    case Errc::non_split: return "NonSplit";
    case Errc::additivity_violated: return "AdditivityViolated";
    case Errc::not_isolated: return "NotIsolated";
    case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

namespace qpoly {

void trim(Poly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.empty())
        throw Error(Errc::division_by_zero, "polynomial division by zero");
    Poly rem = a;
    trim(rem);
    if (rem.size() < b.size())
        return {{}, rem};
    Poly quot(rem.size() - b.size() + 1, Rational(0));
    while (rem.size() >= b.size()) {
        std::size_t shift = rem.size() - b.size();
        Rational c = rem.back() / b.back();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[i + shift] -= c * b[i];
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

Poly gcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

Rational eval(const Poly& p, const Rational& x)
{
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * x + *it;
    return r;
}

std::vector<Rational> rational_roots(Poly p)
{
    trim(p);
    if (p.empty())
        throw Error(Errc::division_by_zero, "roots of the zero polynomial");
    std::vector<Rational> roots;
    // strip powers of t
    std::size_t low = 0;
    while (sgn(p[low]) == 0)
        ++low;
    if (low > 0) {
        roots.emplace_back(0);
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (p.size() == 1)
        return roots;
    Integer den = 1;
    for (const auto& c : p)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : p) {
        Rational s = c * den;
        ints.push_back(s.get_num());
    }
    auto num_divs = positive_divisors(ints.front());
    auto den_divs = positive_divisors(ints.back());
    std::vector<Rational> found;
    for (const auto& a : num_divs)
        for (const auto& b : den_divs)
            for (int sign : {1, -1}) {
                Rational cand(a * sign, b);
                cand.canonicalize();
                if (std::find(found.begin(), found.end(), cand) != found.end())
                    continue;
                if (sgn(eval(p, cand)) == 0)
                    found.push_back(cand);
            }
    std::sort(found.begin(), found.end());
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

}  // namespace qpoly

std::vector<Integer> positive_divisors(const Integer& n)
{
    Integer m = abs(n);
    if (m == 0)
        throw Error(Errc::division_by_zero, "divisors of zero");
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer p = 2; p * p <= m; ++p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0)
            factors.emplace_back(p, e);
    }
    if (m > 1)
        factors.emplace_back(m, 1);
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t count = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Field FieldSpec::rationals()
{
    static const Field q(new FieldSpec(FieldKind::rationals, {}, "", true));
    return q;
}

Field FieldSpec::gaussian()
{
    static const Field qi(new FieldSpec(FieldKind::gaussian, {Rational(1), Rational(0), Rational(1)}, "i", true));
    return qi;
}

Field FieldSpec::extension(const std::vector<Integer>& modulus, std::string variable)
{
    if (modulus.size() < 3)
        throw Error(Errc::invalid_field, "extension modulus must have degree >= 2");
    if (modulus.back() != 1)
        throw Error(Errc::invalid_field, "extension modulus must be monic");
    qpoly::Poly m;
    for (const auto& c : modulus)
        m.emplace_back(c);
    std::size_t degree = m.size() - 1;
    if (!qpoly::rational_roots(m).empty())
        throw Error(Errc::invalid_field, "modulus has a rational root, so it is reducible");
    bool certified = degree <= 3;
    return Field(new FieldSpec(FieldKind::extension, std::move(m), std::move(variable), certified));
}

std::string FieldSpec::describe() const
{
    switch (kind_) {
    case FieldKind::rationals: return "Q";
    case FieldKind::gaussian: return "Q(i)";
    case FieldKind::extension: break;
    }
    std::ostringstream os;
    os << "Q[" << variable_ << "]/(";
    bool first = true;
    for (std::size_t k = modulus_.size(); k-- > 0;) {
        const Rational& c = modulus_[k];
        if (sgn(c) == 0)
            continue;
        Rational mag = abs(c);
        if (!first)
            os << (sgn(c) < 0 ? "-" : "+");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        if (k == 0 || mag != 1)
            os << mag.get_str();
        if (k > 0) {
            if (mag != 1)
                os << "*";
            os << variable_;
            if (k > 1)
                os << "^" << k;
        }
    }
    os << ")";
    return os.str();
}

bool FieldSpec::same_as(const FieldSpec& other) const
{
    return kind_ == other.kind_ && modulus_ == other.modulus_;
}

bool same_field(const Field& a, const Field& b)
{
    return a == b || a->same_as(*b);
}

FieldElement::FieldElement(Field field) : field_(std::move(field)), coords_(field_->degree(), Rational(0)) {}

FieldElement::FieldElement(Field field, const Rational& value) : FieldElement(std::move(field))
{
    coords_[0] = value;
    coords_[0].canonicalize();
}

FieldElement::FieldElement(Field field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords))
{
    if (coords_.size() != field_->degree())
        throw Error(Errc::dimension_mismatch, "coordinate count does not match the field degree");
    for (auto& c : coords_)
        c.canonicalize();
}

FieldElement FieldElement::generator(Field field)
{
    if (field->degree() < 2)
        throw Error(Errc::invalid_field, "Q has no adjoined generator");
    FieldElement g(std::move(field));
    g.coords_[1] = 1;
    return g;
}

bool FieldElement::is_zero() const
{
    for (const auto& c : coords_)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool FieldElement::is_one() const
{
    if (coords_[0] != 1)
        return false;
    for (std::size_t k = 1; k < coords_.size(); ++k)
        if (sgn(coords_[k]) != 0)
            return false;
    return true;
}

bool FieldElement::is_rational() const
{
    for (std::size_t k = 1; k < coords_.size(); ++k)
        if (sgn(coords_[k]) != 0)
            return false;
    return true;
}

void FieldElement::check_same(const FieldElement& b) const
{
    if (field_ != b.field_ && !field_->same_as(*b.field_))
        throw Error(Errc::field_mismatch, field_->describe() + " vs " + b.field_->describe());
}

FieldElement& FieldElement::operator+=(const FieldElement& b)
{
    check_same(b);
    for (std::size_t k = 0; k < coords_.size(); ++k)
        coords_[k] += b.coords_[k];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b)
{
    check_same(b);
    for (std::size_t k = 0; k < coords_.size(); ++k)
        coords_[k] -= b.coords_[k];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b)
{
    check_same(b);
    switch (field_->kind()) {
    case FieldKind::rationals:
        coords_[0] *= b.coords_[0];
        return *this;
    case FieldKind::gaussian: {
        Rational re = coords_[0] * b.coords_[0] - coords_[1] * b.coords_[1];
        Rational im = coords_[0] * b.coords_[1] + coords_[1] * b.coords_[0];
        coords_[0] = std::move(re);
        coords_[1] = std::move(im);
        return *this;
    }
    case FieldKind::extension: break;
    }
    const auto& m = field_->modulus();
    std::size_t n = coords_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(coords_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            prod[i + j] += coords_[i] * b.coords_[j];
    }
    // reduce with the monic modulus from the top
    for (std::size_t k = prod.size(); k-- > n;) {
        if (sgn(prod[k]) == 0)
            continue;
        Rational c = prod[k];
        for (std::size_t j = 0; j <= n; ++j)
            prod[k - n + j] -= c * m[j];
    }
    prod.resize(n);
    coords_ = std::move(prod);
    return *this;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw Error(Errc::division_by_zero, "inverse of zero");
    switch (field_->kind()) {
    case FieldKind::rationals: return FieldElement(field_, 1 / coords_[0]);
    case FieldKind::gaussian: {
        Rational norm = coords_[0] * coords_[0] + coords_[1] * coords_[1];
        return FieldElement(field_, {coords_[0] / norm, -coords_[1] / norm});
    }
    case FieldKind::extension: break;
    }
    // extended Euclid: s*a + t*m = g
    qpoly::Poly a = coords_;
    qpoly::trim(a);
    qpoly::Poly m = field_->modulus();
    qpoly::Poly s0{Rational(1)}, s1{};
    qpoly::Poly r0 = a, r1 = m;
    while (!r1.empty()) {
        auto [q, r] = qpoly::divmod(r0, r1);
        qpoly::Poly s2 = qpoly::sub(s0, qpoly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw Error(Errc::division_by_zero, "element is a zero divisor; modulus is not irreducible");
    std::vector<Rational> inv(coords_.size(), Rational(0));
    auto reduced = qpoly::divmod(s0, m).second;
    for (std::size_t k = 0; k < reduced.size(); ++k)
        inv[k] = reduced[k] / r0[0];
    return FieldElement(field_, std::move(inv));
}

FieldElement FieldElement::conjugate() const
{
    FieldElement r = *this;
    if (field_->kind() == FieldKind::gaussian)
        r.coords_[1] = -r.coords_[1];
    return r;
}

FieldElement& FieldElement::operator/=(const FieldElement& b)
{
    check_same(b);
    if (b.is_zero())
        throw Error(Errc::division_by_zero, "division by zero");
    if (field_->kind() == FieldKind::rationals) {
        coords_[0] /= b.coords_[0];
        return *this;
    }
    return *this *= b.inverse();
}

void FieldElement::sub_mul(const FieldElement& a, const FieldElement& b)
{
    if (field_->kind() == FieldKind::rationals && a.field_->kind() == FieldKind::rationals &&
        b.field_->kind() == FieldKind::rationals) {
        coords_[0] -= a.coords_[0] * b.coords_[0];
        return;
    }
    *this -= a * b;
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = *this;
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    a.check_same(b);
    return a.coords_ == b.coords_;
}

std::string FieldElement::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const std::string& var = field_->variable();
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const Rational& c = coords_[k];
        if (sgn(c) == 0)
            continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0)
                os << "-";
        }
        else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << var;
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a)
{
    return os << a.str();
}

Vector zero_vector(const Field& field, std::size_t n)
{
    return Vector(n, FieldElement(field));
}

Vector unit_vector(const Field& field, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(field, n);
    v.at(i) = FieldElement(field, 1);
    return v;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const FieldElement& a) { return a.is_zero(); });
}

}  // namespace quadric
