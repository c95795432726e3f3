#include "quadric/findim.hpp"

#include "quadric/error.hpp"

#include <algorithm>
#include <random>

namespace quadric {

namespace {

void axpy(Vector& y, const FieldElement& s, const Vector& x)
{
    for (std::size_t k = 0; k < y.size(); ++k)
        if (!x[k].is_zero())
            y[k] += s * x[k];
}

Vector scaled(const FieldElement& s, Vector x)
{
    for (auto& v : x)
        v *= s;
    return x;
}

Vector difference(Vector a, const Vector& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] -= b[k];
    return a;
}

// Small integers in [-3, 3] from a standard linear congruential engine.
class Generic {
public:
    explicit Generic(std::uint64_t seed) : engine_(static_cast<std::minstd_rand::result_type>(seed % 2147483646u + 1)) {}
    long next() { return static_cast<long>(engine_() % 7) - 3; }

private:
    std::minstd_rand engine_;
};

Vector random_combination(Generic& gen, const Field& f, const std::vector<Vector>& basis, std::size_t dim)
{
    Vector out = zero_vector(f, dim);
    for (const auto& b : basis)
        axpy(out, FieldElement(f, gen.next()), b);
    return out;
}

// Minimal polynomial of a with `unit` playing the role of 1 (a lies in the corner of unit).
Polynomial min_poly_with_unit(const FiniteDimAlgebra& F, const Vector& a, const Vector& unit)
{
    const Field& f = F.field();
    std::vector<Vector> powers{unit};
    while (true) {
        Vector next = F.multiply(a, powers.back());
        Matrix m(f, F.dim(), powers.size());
        for (std::size_t c = 0; c < powers.size(); ++c)
            for (std::size_t r = 0; r < F.dim(); ++r)
                m(r, c) = powers[c][r];
        if (auto x = solve(m, next)) {
            std::vector<FieldElement> coeffs;
            for (const auto& v : *x)
                coeffs.push_back(-v);
            coeffs.emplace_back(f, 1);
            return Polynomial(f, std::move(coeffs));
        }
        powers.push_back(std::move(next));
    }
}

// Idempotents are built by evaluating polynomials in a generic element.
Vector evaluate(const FiniteDimAlgebra& F, const Polynomial& p, const Vector& a, const Vector& unit)
{
    Vector acc = zero_vector(F.field(), F.dim());
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc = F.multiply(a, acc);
        axpy(acc, p.coeffs()[k], unit);
    }
    return acc;
}

std::vector<Vector> corner_basis(const FiniteDimAlgebra& F, const Vector& u)
{
    std::vector<Vector> out;
    for (std::size_t j = 0; j < F.dim(); ++j)
        out.push_back(F.multiply(F.multiply(u, F.basis_element(j)), u));
    return Subspace::span(F.field(), F.dim(), out).basis_vectors();
}

void split(const FiniteDimAlgebra& F, const Vector& u, Generic& gen, std::vector<Vector>& out)
{
    const Field& f = F.field();
    auto corner = corner_basis(F, u);
    if (corner.size() <= 1) {
        out.push_back(u);
        return;
    }
    auto line = Subspace::span(f, F.dim(), {u});

    // deterministic candidates first, then seeded combinations
    constexpr int max_tries = 32;
    std::string last_poly;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Vector a = attempt < static_cast<int>(corner.size()) ? corner[static_cast<std::size_t>(attempt)]
                                                             : random_combination(gen, f, corner, F.dim());
        if (line.contains(a))
            continue;
        auto mp = min_poly_with_unit(F, a, u);
        auto roots = roots_in_field(mp);
        if (roots.roots.empty()) {
            last_poly = mp.str();
            continue;
        }
        Vector z = difference(a, scaled(roots.roots.front(), u));
        std::vector<Vector> ideal;
        for (const auto& c : corner)
            ideal.push_back(F.multiply(c, z));
        auto L = Subspace::span(f, F.dim(), ideal).basis_vectors();

        // e = sum x_k l_k with l_j e = l_j for every j
        std::size_t n = L.size();
        Matrix sys(f, n * F.dim(), n);
        Vector rhs;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                auto prod = F.multiply(L[j], L[k]);
                for (std::size_t r = 0; r < F.dim(); ++r)
                    sys(j * F.dim() + r, k) = prod[r];
            }
            rhs.insert(rhs.end(), L[j].begin(), L[j].end());
        }
        auto x = solve(sys, rhs);
        if (!x)
            throw Error(Errc::not_semisimple, "left ideal without a right identity");
        Vector e = zero_vector(f, F.dim());
        for (std::size_t k = 0; k < n; ++k)
            axpy(e, (*x)[k], L[k]);
        split(F, e, gen, out);
        split(F, difference(u, e), gen, out);
        return;
    }
    throw Error(Errc::non_split, "no eigenvalue found inside a block" +
                                     (last_poly.empty() ? std::string() : "; min-poly " + last_poly));
}

}  // namespace

FiniteDimAlgebra::FiniteDimAlgebra(Field field, std::vector<std::string> labels, std::vector<Vector> constants,
                                   Vector unit)
    : field_(std::move(field)), labels_(std::move(labels)), constants_(std::move(constants)), unit_(std::move(unit))
{
    std::size_t n = dim();
    if (constants_.size() != n * n || unit_.size() != n)
        throw Error(Errc::dimension_mismatch, "structure constants do not match the basis size");
    for (const auto& c : constants_)
        if (c.size() != n)
            throw Error(Errc::dimension_mismatch, "structure constant vector of wrong length");
    for (std::size_t i = 0; i < n; ++i) {
        auto b = basis_element(i);
        if (multiply(unit_, b) != b || multiply(b, unit_) != b)
            throw Error(Errc::dimension_mismatch, "unit is not two-sided on " + labels_[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (multiply(product(i, j), basis_element(k)) != multiply(basis_element(i), product(j, k)))
                    throw Error(Errc::dimension_mismatch,
                                "not associative on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
}

Vector FiniteDimAlgebra::multiply(const Vector& a, const Vector& b) const
{
    Vector out = zero_vector(field_, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!b[j].is_zero())
                axpy(out, a[i] * b[j], product(i, j));
    }
    return out;
}

Matrix FiniteDimAlgebra::left_regular(const Vector& a) const
{
    Matrix m(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        auto col = multiply(a, basis_element(j));
        for (std::size_t r = 0; r < dim(); ++r)
            m(r, j) = col[r];
    }
    return m;
}

FiniteDimAlgebra algebra_from_matrices(const Field& field, const std::vector<Matrix>& basis,
                                       std::vector<std::string> labels)
{
    if (basis.empty())
        throw Error(Errc::dimension_mismatch, "empty basis");
    std::size_t size = basis[0].rows() * basis[0].cols();
    std::vector<Vector> flat;
    for (const auto& m : basis)
        flat.push_back(m.entries());
    Basis coords(field, size, flat);
    if (labels.empty())
        for (std::size_t i = 0; i < basis.size(); ++i)
            labels.push_back("b" + std::to_string(i + 1));

    std::vector<Vector> constants;
    for (const auto& a : basis)
        for (const auto& b : basis) {
            auto c = coords.coordinates((a * b).entries());
            if (!c)
                throw Error(Errc::containment_violated, "matrix span is not closed under multiplication");
            constants.push_back(std::move(*c));
        }
    auto unit = coords.coordinates(Matrix::identity(field, basis[0].rows()).entries());
    if (!unit)
        throw Error(Errc::containment_violated, "matrix span does not contain the identity");
    return FiniteDimAlgebra(field, std::move(labels), std::move(constants), std::move(*unit));
}

Subspace radical(const FiniteDimAlgebra& F)
{
    std::size_t n = F.dim();
    // tr(L_x L_y) = tr(L_{xy}), and tr(L_{b_k}) = sum_j c[k][j][j]
    Vector traces = zero_vector(F.field(), n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            traces[k] += F.product(k, j)[j];
    Matrix form(F.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!traces[k].is_zero())
                    form(i, j) += F.product(i, j)[k] * traces[k];
    return kernel(form);
}

bool is_semisimple(const FiniteDimAlgebra& F)
{
    return radical(F).dim() == 0;
}

Subspace center(const FiniteDimAlgebra& F)
{
    std::size_t n = F.dim();
    Matrix m(F.field(), n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t r = 0; r < n; ++r)
                m(i * n + r, k) = F.product(k, i)[r] - F.product(i, k)[r];
    return kernel(m);
}

Polynomial min_poly(const FiniteDimAlgebra& F, const Vector& a)
{
    return min_poly_with_unit(F, a, F.unit());
}

FiniteDimAlgebra semisimple_quotient(const FiniteDimAlgebra& F)
{
    auto rad = radical(F);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0, p = 0; j < F.dim(); ++j) {
        if (p < rad.pivots().size() && rad.pivots()[p] == j)
            ++p;
        else
            keep.push_back(j);
    }
    auto project = [&](const Vector& v) {
        auto r = rad.reduce(v);
        Vector out;
        for (auto j : keep)
            out.push_back(r[j]);
        return out;
    };
    std::vector<std::string> labels;
    std::vector<Vector> constants;
    for (auto i : keep)
        labels.push_back(F.labels()[i]);
    for (auto i : keep)
        for (auto j : keep)
            constants.push_back(project(F.product(i, j)));
    return FiniteDimAlgebra(F.field(), std::move(labels), std::move(constants), project(F.unit()));
}

IdempotentSet central_idempotents(const FiniteDimAlgebra& F, std::uint64_t seed)
{
    if (!is_semisimple(F))
        throw Error(Errc::not_semisimple, "radical has dimension " + std::to_string(radical(F).dim()));
    IdempotentSet result;
    result.kind = IdempotentSet::Kind::central_primitive;
    auto z = center(F).basis_vectors();
    if (z.size() == 1) {
        result.idempotents.push_back(F.unit());
        return result;
    }

    Generic gen(seed);
    constexpr int max_tries = 32;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Vector g = random_combination(gen, F.field(), z, F.dim());
        auto mp = min_poly(F, g);
        // a semisimple commutative center is a product of fields; a generic element
        // has min-poly of full degree
        if (static_cast<std::size_t>(mp.degree()) < z.size())
            continue;
        auto roots = roots_in_field(mp);
        if (roots.roots.size() < z.size())
            throw Error(Errc::non_split, "central min-poly " + mp.str() + " does not split over " +
                                             F.field()->describe());
        for (std::size_t i = 0; i < roots.roots.size(); ++i) {
            Polynomial lagrange(F.field(), {FieldElement(F.field(), 1)});
            for (std::size_t j = 0; j < roots.roots.size(); ++j)
                if (j != i)
                    lagrange = lagrange * Polynomial(F.field(), {-roots.roots[j] / (roots.roots[i] - roots.roots[j]),
                                                                 (roots.roots[i] - roots.roots[j]).inverse()});
            result.idempotents.push_back(evaluate(F, lagrange, g, F.unit()));
        }
        return result;
    }
    throw Error(Errc::non_split, "no generic central element found after 32 tries");
}

IdempotentSet primitive_idempotents(const FiniteDimAlgebra& F, std::uint64_t seed)
{
    auto central = central_idempotents(F, seed);
    IdempotentSet result;
    result.kind = IdempotentSet::Kind::primitive;
    Generic gen(seed + 1);
    for (const auto& u : central.idempotents)
        split(F, u, gen, result.idempotents);
    return result;
}

std::vector<std::size_t> block_structure(const FiniteDimAlgebra& F, std::uint64_t seed)
{
    std::vector<std::size_t> dims;
    for (const auto& e : central_idempotents(F, seed).idempotents)
        dims.push_back(corner_dim(F, e, e));
    std::sort(dims.begin(), dims.end());
    return dims;
}

std::size_t corner_dim(const FiniteDimAlgebra& F, const Vector& a, const Vector& c)
{
    std::vector<Vector> out;
    for (std::size_t j = 0; j < F.dim(); ++j)
        out.push_back(F.multiply(F.multiply(a, F.basis_element(j)), c));
    return Subspace::span(F.field(), F.dim(), out).dim();
}

}  // namespace quadric
