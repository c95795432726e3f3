#include "quadric/quadratic.hpp"

#include "quadric/error.hpp"

#include <set>
#include <sstream>

namespace quadric {

QuadraticPresentation::QuadraticPresentation(Field f, std::vector<std::string> names, Subspace rels)
    : field(std::move(f)), generators(std::move(names)), relations(std::move(rels))
{
    std::set<std::string> seen;
    for (const auto& g : generators)
        if (!seen.insert(g).second)
            throw Error(Errc::dimension_mismatch, "duplicate generator name '" + g + "'");
    if (relations.ambient_dim() != generators.size() * generators.size())
        throw Error(Errc::ambient_mismatch, "relations must live in V (x) V");
}

QuadraticPresentation with_relation(const QuadraticPresentation& p, const Vector& w)
{
    auto vecs = p.relations.basis_vectors();
    vecs.push_back(w);
    return QuadraticPresentation(p.field, p.generators,
                                 Subspace::span(p.field, p.relations.ambient_dim(), vecs));
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& p)
{
    std::vector<std::string> names;
    for (const auto& g : p.generators)
        names.push_back(!g.empty() && g.back() == '\'' ? g.substr(0, g.size() - 1) : g + "'");
    return QuadraticPresentation(p.field, std::move(names), p.relations.annihilator());
}

QuadraticAlgebra::QuadraticAlgebra(QuadraticPresentation p) : pres_(std::move(p))
{
    GradedComponent c0;
    c0.degree = 0;
    c0.words.push_back({});
    components_.push_back(std::move(c0));

    std::size_t g = num_gens();
    GradedComponent c1;
    c1.degree = 1;
    for (std::size_t v = 0; v < g; ++v) {
        c1.words.push_back({v});
        c1.right_mult.push_back(unit_vector(field(), g, v));
    }
    components_.push_back(std::move(c1));
}

const GradedComponent& QuadraticAlgebra::component(std::size_t n) const
{
    std::lock_guard lock(mutex_);
    if (components_.size() <= n)
        extend_locked(n);
    return components_[n];
}

void QuadraticAlgebra::extend_locked(std::size_t target) const
{
    const Field& f = field();
    std::size_t g = num_gens();
    const Subspace& rels = pres_.relations;
    while (components_.size() <= target) {
        std::size_t n = components_.size();
        const GradedComponent& prev = components_[n - 1];
        const GradedComponent& prev2 = components_[n - 2];
        std::size_t span_dim = prev.words.size() * g;

        // A_n = (A_{n-1} (x) V) / image of A_{n-2} (x) R
        std::vector<Vector> images;
        for (std::size_t a = 0; a < prev2.words.size(); ++a)
            for (std::size_t r = 0; r < rels.dim(); ++r) {
                Vector img = zero_vector(f, span_dim);
                for (std::size_t pq = 0; pq < g * g; ++pq) {
                    const FieldElement& c = rels.basis()(r, pq);
                    if (c.is_zero())
                        continue;
                    std::size_t p = pq / g, q = pq % g;
                    const Vector& up = prev.right_mult[a * g + p];
                    for (std::size_t j = 0; j < up.size(); ++j)
                        if (!up[j].is_zero())
                            img[j * g + q] += c * up[j];
                }
                images.push_back(std::move(img));
            }
        Subspace ideal = Subspace::span(f, span_dim, images);

        std::vector<long> position(span_dim, -1);
        std::vector<bool> is_pivot(span_dim, false);
        for (std::size_t p : ideal.pivots())
            is_pivot[p] = true;
        GradedComponent comp;
        comp.degree = n;
        for (std::size_t idx = 0; idx < span_dim; ++idx) {
            if (is_pivot[idx])
                continue;
            position[idx] = static_cast<long>(comp.words.size());
            Word w = prev.words[idx / g];
            w.push_back(idx % g);
            comp.words.push_back(std::move(w));
        }
        std::size_t dim = comp.words.size();
        comp.right_mult.assign(span_dim, zero_vector(f, dim));
        for (std::size_t idx = 0; idx < span_dim; ++idx)
            if (!is_pivot[idx])
                comp.right_mult[idx][static_cast<std::size_t>(position[idx])] = FieldElement(f, 1);
        // a pivot word equals minus the rest of its echelon row, all of which is normal
        for (std::size_t i = 0; i < ideal.dim(); ++i) {
            Vector& out = comp.right_mult[ideal.pivots()[i]];
            for (std::size_t j = 0; j < span_dim; ++j)
                if (!is_pivot[j] && !ideal.basis()(i, j).is_zero())
                    out[static_cast<std::size_t>(position[j])] = -ideal.basis()(i, j);
        }
        components_.push_back(std::move(comp));
    }
}

std::vector<std::size_t> QuadraticAlgebra::hilbert(std::size_t max_degree) const
{
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= max_degree; ++n)
        out.push_back(dim(n));
    return out;
}

Vector QuadraticAlgebra::one() const
{
    return unit_vector(field(), 1, 0);
}

Vector QuadraticAlgebra::generator(std::size_t v) const
{
    return unit_vector(field(), num_gens(), v);
}

Vector QuadraticAlgebra::times_generator(const Vector& a, std::size_t m, std::size_t v) const
{
    const GradedComponent& next = component(m + 1);
    std::size_t g = num_gens();
    Vector out = zero_vector(field(), next.words.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].is_zero())
            continue;
        const Vector& img = next.right_mult[j * g + v];
        for (std::size_t k = 0; k < img.size(); ++k)
            if (!img[k].is_zero())
                out[k] += a[j] * img[k];
    }
    return out;
}

Vector QuadraticAlgebra::multiply(const Vector& a, std::size_t m, const Vector& b, std::size_t n) const
{
    const GradedComponent& cb = component(n);
    if (a.size() != dim(m) || b.size() != cb.words.size())
        throw Error(Errc::dimension_mismatch, "multiply: coordinates do not match the degrees");
    Vector out = zero_vector(field(), dim(m + n));
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k].is_zero())
            continue;
        Vector t = a;
        std::size_t deg = m;
        for (std::size_t letter : cb.words[k])
            t = times_generator(t, deg++, letter);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!t[i].is_zero())
                out[i] += b[k] * t[i];
    }
    return out;
}

Vector QuadraticAlgebra::normal_form(const Word& w) const
{
    Vector t = one();
    std::size_t deg = 0;
    for (std::size_t letter : w)
        t = times_generator(t, deg++, letter);
    return t;
}

Vector QuadraticAlgebra::project(const Vector& tensor, std::size_t n) const
{
    if (tensor.size() != ipow(num_gens(), n))
        throw Error(Errc::dimension_mismatch, "project: tensor length");
    Vector out = zero_vector(field(), dim(n));
    for (std::size_t flat = 0; flat < tensor.size(); ++flat) {
        if (tensor[flat].is_zero())
            continue;
        Vector nf = normal_form(word_at(flat, n, num_gens()));
        for (std::size_t i = 0; i < nf.size(); ++i)
            if (!nf[i].is_zero())
                out[i] += tensor[flat] * nf[i];
    }
    return out;
}

Matrix QuadraticAlgebra::left_mult_matrix(const Vector& a, std::size_t m, std::size_t n) const
{
    std::size_t dn = dim(n);
    Matrix out(field(), dim(m + n), dn);
    for (std::size_t k = 0; k < dn; ++k) {
        Vector col = multiply(a, m, unit_vector(field(), dn, k), n);
        for (std::size_t i = 0; i < col.size(); ++i)
            out(i, k) = col[i];
    }
    return out;
}

std::string QuadraticAlgebra::format(const Vector& a, std::size_t n) const
{
    const GradedComponent& c = component(n);
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero())
            continue;
        std::string coeff = a[k].str();
        bool compound = coeff.find(' ') != std::string::npos;
        bool negative = !compound && coeff.front() == '-';
        if (!first)
            os << (negative ? " - " : " + ");
        else if (negative)
            os << "-";
        first = false;
        if (negative)
            coeff = coeff.substr(1);
        std::string word;
        for (std::size_t i = 0; i < c.words[k].size(); ++i)
            word += (i ? "*" : "") + pres_.generators[c.words[k][i]];
        if (word.empty())
            os << coeff;
        else if (coeff == "1")
            os << word;
        else
            os << (compound ? "(" + coeff + ")" : coeff) << "*" << word;
    }
    return first ? "0" : os.str();
}

bool Certificate::passed() const
{
    for (const auto& c : checks)
        if (!c.ok())
            return false;
    return true;
}

std::optional<std::size_t> Certificate::first_failure() const
{
    for (const auto& c : checks)
        if (!c.ok())
            return c.degree;
    return std::nullopt;
}

bool is_central_deg2(const QuadraticAlgebra& algebra, const Vector& w)
{
    std::size_t g = algebra.num_gens();
    if (w.size() != g * g)
        throw Error(Errc::dimension_mismatch, "central candidate must be a degree-2 tensor");
    for (std::size_t v = 0; v < g; ++v) {
        Vector e = unit_vector(algebra.field(), g, v);
        Vector comm = tensor(w, e);
        Vector other = tensor(e, w);
        for (std::size_t k = 0; k < comm.size(); ++k)
            comm[k] -= other[k];
        if (!is_zero(algebra.project(comm, 3)))
            return false;
    }
    return true;
}

Certificate is_regular_deg2(const QuadraticAlgebra& algebra, const Vector& w, std::size_t max_degree)
{
    QuadraticAlgebra quotient(with_relation(algebra.presentation(), w));
    Certificate cert;
    cert.name = "regularity of the central element";
    cert.max_degree = max_degree;
    for (std::size_t n = 2; n <= max_degree; ++n) {
        long long expected = static_cast<long long>(algebra.dim(n)) - static_cast<long long>(algebra.dim(n - 2));
        cert.checks.push_back({n, expected, static_cast<long long>(quotient.dim(n))});
    }
    return cert;
}

Certificate koszul_numeric_check(const QuadraticAlgebra& algebra, std::size_t max_degree)
{
    QuadraticAlgebra dual(quadratic_dual(algebra.presentation()));
    auto ha = algebra.hilbert(max_degree);
    auto hd = dual.hilbert(max_degree);
    Certificate cert;
    cert.name = "H_A(t) * H_A!(-t) = 1";
    cert.max_degree = max_degree;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        long long c = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            long long term = static_cast<long long>(ha[k]) * static_cast<long long>(hd[n - k]);
            c += ((n - k) % 2 == 0) ? term : -term;
        }
        cert.checks.push_back({n, n == 0 ? 1 : 0, c});
    }
    return cert;
}

namespace {

long long binomial(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Certificate quantum_polynomial_check(const QuadraticAlgebra& algebra, std::size_t max_degree)
{
    auto g = static_cast<long long>(algebra.num_gens());
    Certificate cert;
    cert.name = "quantum polynomial Hilbert data";
    cert.max_degree = max_degree;
    for (std::size_t n = 0; n <= max_degree; ++n)
        cert.checks.push_back({n, binomial(g + static_cast<long long>(n) - 1, static_cast<long long>(n)),
                               static_cast<long long>(algebra.dim(n))});
    QuadraticAlgebra dual(quadratic_dual(algebra.presentation()));
    long long total = 0;
    for (std::size_t n = 0; n <= static_cast<std::size_t>(g) + 1; ++n) {
        auto d = static_cast<long long>(dual.dim(n));
        total += d;
        if (d != binomial(g, static_cast<long long>(n)))
            cert.checks.push_back({n, binomial(g, static_cast<long long>(n)), d});
    }
    cert.notes.push_back("dual total dimension " + std::to_string(total));
    auto koszul = koszul_numeric_check(algebra, max_degree);
    for (const auto& c : koszul.checks)
        if (!c.ok())
            cert.checks.push_back(c);
    cert.notes.push_back(std::string("Koszul numeric identity ") + (koszul.passed() ? "holds" : "fails") +
                         " to degree " + std::to_string(max_degree));
    return cert;
}

Vector quadratic_tensor(const Field& field, std::size_t num_gens,
                        const std::vector<std::pair<std::pair<std::size_t, std::size_t>, FieldElement>>& terms)
{
    Vector w = zero_vector(field, num_gens * num_gens);
    for (const auto& [ab, c] : terms)
        w.at(ab.first * num_gens + ab.second) += c;
    return w;
}

}  // namespace quadric
