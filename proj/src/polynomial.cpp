#include "quadric/polynomial.hpp"

#include "quadric/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quadric {

Polynomial::Polynomial(Field field, std::vector<FieldElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    for (const auto& c : coeffs_)
        if (!same_field(c.field(), field_))
            throw Error(Errc::field_mismatch, "polynomial coefficient over a different field");
    trim();
}

Polynomial Polynomial::linear(const FieldElement& a)
{
    return Polynomial(a.field(), {-a, FieldElement(a.field(), 1)});
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

FieldElement Polynomial::eval(const FieldElement& x) const
{
    FieldElement r(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

Polynomial Polynomial::derivative() const
{
    std::vector<FieldElement> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d.push_back(coeffs_[k] * FieldElement(field_, static_cast<long>(k)));
    return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    FieldElement inv = leading().inverse();
    std::vector<FieldElement> c = coeffs_;
    for (auto& x : c)
        x *= inv;
    return Polynomial(field_, std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<FieldElement> r(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElement(a.field_));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        r[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
        r[k] += b.coeffs_[k];
    return Polynomial(a.field_, std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<FieldElement> r(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElement(a.field_));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        r[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
        r[k] -= b.coeffs_[k];
    return Polynomial(a.field_, std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.field_);
    std::vector<FieldElement> r(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(a.field_, std::move(r));
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.coeffs_ == b.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& b) const
{
    if (b.is_zero())
        throw Error(Errc::division_by_zero, "polynomial division by zero");
    std::vector<FieldElement> rem = coeffs_;
    if (rem.size() < b.coeffs_.size())
        return {Polynomial(field_), *this};
    std::vector<FieldElement> quot(rem.size() - b.coeffs_.size() + 1, FieldElement(field_));
    FieldElement inv = b.leading().inverse();
    std::size_t bn = b.coeffs_.size();
    for (std::size_t shift = rem.size() - bn + 1; shift-- > 0;) {
        std::size_t top = shift + bn - 1;
        if (rem[top].is_zero())
            continue;
        FieldElement c = rem[top] * inv;
        for (std::size_t j = 0; j < bn; ++j)
            rem[shift + j].sub_mul(c, b.coeffs_[j]);
        quot[shift] = std::move(c);
    }
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

std::string Polynomial::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const FieldElement& c = coeffs_[k];
        if (c.is_zero())
            continue;
        std::string text = c.str();
        bool compound = text.find(' ') != std::string::npos;
        bool negative = !compound && text.front() == '-';
        if (negative)
            text.erase(0, 1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit = text == "1";
        if (k == 0 || !unit)
            os << (compound ? "(" + text + ")" : text);
        if (k > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial square_free_part(const Polynomial& p)
{
    if (p.degree() <= 0)
        return p.monic();
    Polynomial g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

namespace {

bool is_rational_square(const Rational& q, Rational* root)
{
    if (sgn(q) < 0)
        return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return false;
    if (root) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        *root = Rational(n, d);
        root->canonicalize();
    }
    return true;
}

// For a field of degree 2 returns (s, D) with s*s = D rational and K = Q(s).
std::pair<FieldElement, Rational> quadratic_generator(const Field& field)
{
    if (field->kind() == FieldKind::gaussian)
        return {FieldElement::generator(field), Rational(-1)};
    const auto& m = field->modulus();  // t^2 + a t + b
    const Rational& b = m[0];
    const Rational& a = m[1];
    FieldElement s = FieldElement::generator(field) * FieldElement(field, 2) + FieldElement(field, a);
    return {s, a * a - 4 * b};
}

struct GaussInt {
    Integer re, im;
};

bool operator<(const GaussInt& x, const GaussInt& y)
{
    return x.re != y.re ? x.re < y.re : x.im < y.im;
}

// All Gaussian integers dividing z (z != 0), every associate included.
std::vector<GaussInt> gaussian_divisors(const GaussInt& z)
{
    Integer norm = z.re * z.re + z.im * z.im;
    std::set<GaussInt> out;
    for (const auto& n : positive_divisors(norm)) {
        for (Integer a = 0; a * a <= n; ++a) {
            Integer b2 = n - a * a;
            if (!mpz_perfect_square_p(b2.get_mpz_t()))
                continue;
            Integer b;
            mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
            for (int sa : {1, -1})
                for (int sb : {1, -1}) {
                    GaussInt d{a * sa, b * sb};
                    // z / d = z * conj(d) / n
                    Integer re = z.re * d.re + z.im * d.im;
                    Integer im = z.im * d.re - z.re * d.im;
                    if (re % n == 0 && im % n == 0)
                        out.insert(d);
                }
        }
    }
    return {out.begin(), out.end()};
}

Polynomial deflate(const Polynomial& q, const std::vector<FieldElement>& roots)
{
    Polynomial r = q;
    for (const auto& x : roots)
        r = r.divmod(Polynomial::linear(x)).first;
    return r;
}

void sort_roots(std::vector<FieldElement>& roots)
{
    std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) {
        return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
    });
}

std::vector<FieldElement> rational_roots_of(const Polynomial& q)
{
    // q = sum_k t^k-coordinate polys; a rational root kills every coordinate polynomial
    std::size_t deg = q.field()->degree();
    qpoly::Poly g;
    for (std::size_t k = 0; k < deg; ++k) {
        qpoly::Poly part;
        for (const auto& c : q.coeffs())
            part.push_back(c.coords()[k]);
        qpoly::trim(part);
        g = g.empty() ? part : qpoly::gcd(g, part);
        if (!g.empty() && g.size() == 1)
            return {};
    }
    std::vector<FieldElement> out;
    for (const auto& r : qpoly::rational_roots(g))
        out.emplace_back(q.field(), r);
    return out;
}

RootSearch gaussian_roots(const Polynomial& q)
{
    const Field& f = q.field();
    RootSearch res;
    Polynomial work = q;
    if (work.coeffs().front().is_zero()) {
        res.roots.emplace_back(f);
        work = work.divmod(Polynomial(f, {FieldElement(f), FieldElement(f, 1)})).first;
    }
    if (work.degree() <= 0)
        return res;
    Integer den = 1;
    for (const auto& c : work.coeffs())
        for (const auto& x : c.coords())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    auto as_gauss = [&](const FieldElement& c) {
        Rational re = c.coords()[0] * den;
        Rational im = c.coords()[1] * den;
        return GaussInt{re.get_num(), im.get_num()};
    };
    GaussInt constant = as_gauss(work.coeffs().front());
    GaussInt lead = as_gauss(work.leading());
    auto numerators = gaussian_divisors(constant);
    std::vector<GaussInt> denominators;
    for (const auto& v : gaussian_divisors(lead))
        if (v.re > 0 && v.im >= 0)  // one associate per class
            denominators.push_back(v);
    std::vector<FieldElement> found;
    for (const auto& v : denominators) {
        FieldElement vinv = FieldElement(f, {Rational(v.re), Rational(v.im)}).inverse();
        for (const auto& u : numerators) {
            FieldElement cand = FieldElement(f, {Rational(u.re), Rational(u.im)}) * vinv;
            if (std::find(found.begin(), found.end(), cand) != found.end())
                continue;
            if (work.eval(cand).is_zero())
                found.push_back(cand);
        }
    }
    res.roots.insert(res.roots.end(), found.begin(), found.end());
    return res;
}

RootSearch extension_roots(const Polynomial& q)
{
    RootSearch res;
    res.roots = rational_roots_of(q);
    Polynomial rest = deflate(q, res.roots);
    if (rest.degree() <= 0)
        return res;
    if (rest.degree() == 1) {
        res.roots.push_back(-rest.coeffs()[0] / rest.coeffs()[1]);
        return res;
    }
    if (rest.degree() == 2) {
        Polynomial m = rest.monic();
        const FieldElement& b = m.coeffs()[1];
        const FieldElement& c = m.coeffs()[0];
        FieldElement disc = b * b - FieldElement(q.field(), 4) * c;
        auto s = sqrt_in_field(disc);
        if (s.root) {
            FieldElement half(q.field(), Rational(1, 2));
            res.roots.push_back((-b + *s.root) * half);
            res.roots.push_back((-b - *s.root) * half);
        }
        res.complete = s.decided;
        return res;
    }
    res.complete = false;
    return res;
}

}  // namespace

SqrtSearch sqrt_in_field(const FieldElement& a)
{
    const Field& f = a.field();
    SqrtSearch out;
    if (a.is_zero()) {
        out.root = a;
        return out;
    }
    Rational r;
    if (f->degree() == 1) {
        if (is_rational_square(a.rational_part(), &r))
            out.root = FieldElement(f, r);
        return out;
    }
    if (f->degree() > 2) {
        if (a.is_rational() && is_rational_square(a.rational_part(), &r))
            out.root = FieldElement(f, r);
        else
            out.decided = false;
        return out;
    }
    auto [s, disc] = quadratic_generator(f);
    // a = u + v s
    Rational u, v;
    if (f->kind() == FieldKind::gaussian) {
        u = a.coords()[0];
        v = a.coords()[1];
    }
    else {
        const Rational& lin = f->modulus()[1];
        u = a.coords()[0] - lin * a.coords()[1] / 2;
        v = a.coords()[1] / 2;
    }
    if (sgn(v) == 0) {
        if (is_rational_square(u, &r))
            out.root = FieldElement(f, r);
        else if (is_rational_square(u / disc, &r))
            out.root = s * FieldElement(f, r);
        return out;
    }
    // (x + y s)^2 = u + v s  =>  x^2 = (u +- sqrt(u^2 - D v^2)) / 2, y = v / (2x)
    Rational n;
    if (!is_rational_square(u * u - disc * v * v, &n))
        return out;
    for (const Rational& x2 : std::vector<Rational>{Rational((u + n) / 2), Rational((u - n) / 2)}) {
        Rational x;
        if (sgn(x2) == 0 || !is_rational_square(x2, &x))
            continue;
        Rational y = v / (2 * x);
        FieldElement cand = FieldElement(f, x) + s * FieldElement(f, y);
        if (cand * cand == a) {
            out.root = cand;
            return out;
        }
    }
    return out;
}

RootSearch roots_in_field(const Polynomial& p)
{
    if (p.is_zero())
        throw Error(Errc::division_by_zero, "roots of the zero polynomial");
    Polynomial q = square_free_part(p);
    RootSearch res;
    switch (q.field()->kind()) {
    case FieldKind::rationals: {
        qpoly::Poly qq;
        for (const auto& c : q.coeffs())
            qq.push_back(c.rational_part());
        for (const auto& r : qpoly::rational_roots(qq))
            res.roots.emplace_back(q.field(), r);
        break;
    }
    case FieldKind::gaussian: res = gaussian_roots(q); break;
    case FieldKind::extension: res = extension_roots(q); break;
    }
    sort_roots(res.roots);
    return res;
}

}  // namespace quadric
