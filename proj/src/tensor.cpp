#include "quadric/tensor.hpp"

#include "quadric/error.hpp"

namespace quadric {

std::size_t ipow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

std::size_t flat_index(const Word& w, std::size_t num_gens)
{
    std::size_t idx = 0;
    for (std::size_t letter : w) {
        if (letter >= num_gens)
            throw Error(Errc::index_out_of_range, "letter outside the generator range");
        idx = idx * num_gens + letter;
    }
    return idx;
}

Word word_at(std::size_t flat, std::size_t length, std::size_t num_gens)
{
    Word w(length);
    for (std::size_t k = length; k-- > 0;) {
        w[k] = flat % num_gens;
        flat /= num_gens;
    }
    return w;
}

Vector tensor(const Vector& a, const Vector& b)
{
    if (a.empty() || b.empty())
        return {};
    const Field& f = a.front().field();
    Vector out = zero_vector(f, a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

Subspace place(const Subspace& w, std::size_t num_gens, std::size_t i, std::size_t n)
{
    std::size_t g2 = num_gens * num_gens;
    if (w.ambient_dim() != g2)
        throw Error(Errc::ambient_mismatch, "placed subspace must live in V (x) V");
    if (n < 2 || i > n - 2)
        throw Error(Errc::index_out_of_range, "placement position outside 0..n-2");
    std::size_t prefixes = ipow(num_gens, i);
    std::size_t suffixes = ipow(num_gens, n - i - 2);
    std::size_t ambient = ipow(num_gens, n);
    const Field& f = w.field();
    std::vector<Vector> vecs;
    vecs.reserve(prefixes * suffixes * w.dim());
    for (std::size_t p = 0; p < prefixes; ++p)
        for (std::size_t r = 0; r < w.dim(); ++r)
            for (std::size_t s = 0; s < suffixes; ++s) {
                Vector v = zero_vector(f, ambient);
                for (std::size_t ab = 0; ab < g2; ++ab) {
                    const FieldElement& c = w.basis()(r, ab);
                    if (!c.is_zero())
                        v[(p * g2 + ab) * suffixes + s] = c;
                }
                vecs.push_back(std::move(v));
            }
    return Subspace::span(f, ambient, vecs);
}

Subspace ideal_component(const Subspace& relations, std::size_t num_gens, std::size_t n)
{
    const Field& f = relations.field();
    if (n < 2)
        return Subspace(f, ipow(num_gens, n));
    Subspace sum(f, ipow(num_gens, n));
    for (std::size_t i = 0; i + 2 <= n; ++i)
        sum = subspace_sum(sum, place(relations, num_gens, i, n));
    return sum;
}

namespace {

// (C_{n-1} (x) V) cap (V^{(x)(n-2)} (x) R)
Subspace next_koszul(const Subspace& prev, const Subspace& annihilator_of_r, std::size_t num_gens, std::size_t n)
{
    const Field& f = prev.field();
    std::size_t ambient = ipow(num_gens, n);
    std::size_t unknowns = prev.dim() * num_gens;
    if (unknowns == 0)
        return Subspace(f, ambient);
    // candidate x = sum_{k,l} lambda_{kl} c_k (x) v_l; constraint: for every prefix u of
    // length n-2 the two-letter tail of x lies in R, i.e. is killed by each row of R^perp.
    std::size_t prefixes = ipow(num_gens, n - 2);
    Matrix constraints(f, prefixes * annihilator_of_r.dim(), unknowns);
    for (std::size_t k = 0; k < prev.dim(); ++k)
        for (std::size_t l = 0; l < num_gens; ++l) {
            std::size_t col = k * num_gens + l;
            for (std::size_t j = 0; j < prev.ambient_dim(); ++j) {
                const FieldElement& c = prev.basis()(k, j);
                if (c.is_zero())
                    continue;
                // word j*g + l = prefix (j / g) followed by (j % g, l)
                std::size_t prefix = j / num_gens;
                std::size_t ab = (j % num_gens) * num_gens + l;
                for (std::size_t q = 0; q < annihilator_of_r.dim(); ++q) {
                    const FieldElement& phi = annihilator_of_r.basis()(q, ab);
                    if (!phi.is_zero())
                        constraints(prefix * annihilator_of_r.dim() + q, col) += c * phi;
                }
            }
        }
    Subspace lambdas = kernel(constraints);
    std::vector<Vector> vecs;
    for (std::size_t s = 0; s < lambdas.dim(); ++s) {
        Vector x = zero_vector(f, ambient);
        for (std::size_t k = 0; k < prev.dim(); ++k)
            for (std::size_t l = 0; l < num_gens; ++l) {
                const FieldElement& lam = lambdas.basis()(s, k * num_gens + l);
                if (lam.is_zero())
                    continue;
                for (std::size_t j = 0; j < prev.ambient_dim(); ++j)
                    if (!prev.basis()(k, j).is_zero())
                        x[j * num_gens + l] += lam * prev.basis()(k, j);
            }
        vecs.push_back(std::move(x));
    }
    return Subspace::span(f, ambient, vecs);
}

}  // namespace

std::vector<Subspace> koszul_spaces(const Subspace& relations, std::size_t num_gens, std::size_t max_degree)
{
    if (relations.ambient_dim() != num_gens * num_gens)
        throw Error(Errc::ambient_mismatch, "relations must live in V (x) V");
    const Field& f = relations.field();
    std::vector<Subspace> out;
    out.push_back(Subspace::full(f, 1));
    if (max_degree >= 1)
        out.push_back(Subspace::full(f, num_gens));
    if (max_degree >= 2)
        out.push_back(relations);
    if (max_degree >= 3) {
        Subspace ann = relations.annihilator();
        for (std::size_t n = 3; n <= max_degree; ++n)
            out.push_back(next_koszul(out.back(), ann, num_gens, n));
    }
    return out;
}

Subspace koszul_space(const Subspace& relations, std::size_t num_gens, std::size_t n)
{
    return koszul_spaces(relations, num_gens, n).back();
}

Matrix express_in_CdV(const Subspace& lower, const Subspace& upper, std::size_t num_gens)
{
    const Field& f = lower.field();
    if (upper.ambient_dim() != lower.ambient_dim() * num_gens)
        throw Error(Errc::ambient_mismatch, "C_{d+1} must live in C_d (x) V's ambient space");
    std::size_t cols = lower.dim() * num_gens;
    Matrix out(f, upper.dim(), cols);
    for (std::size_t r = 0; r < upper.dim(); ++r) {
        // since c_k is 1 at its pivot and the other c's vanish there, the coefficient of
        // c_k (x) v_l is the entry of x at word (pivot_k, l)
        for (std::size_t k = 0; k < lower.dim(); ++k)
            for (std::size_t l = 0; l < num_gens; ++l)
                out(r, k * num_gens + l) = upper.basis()(r, lower.pivots()[k] * num_gens + l);
        Vector rebuilt = zero_vector(f, upper.ambient_dim());
        for (std::size_t k = 0; k < lower.dim(); ++k)
            for (std::size_t l = 0; l < num_gens; ++l) {
                const FieldElement& c = out(r, k * num_gens + l);
                if (c.is_zero())
                    continue;
                for (std::size_t j = 0; j < lower.ambient_dim(); ++j)
                    if (!lower.basis()(k, j).is_zero())
                        rebuilt[j * num_gens + l] += c * lower.basis()(k, j);
            }
        if (rebuilt != upper.basis_vector(r))
            throw Error(Errc::containment_violated, "C_{d+1} basis vector not in C_d (x) V");
    }
    return out;
}

Matrix express_in_CdV(const Subspace& relations, std::size_t num_gens, std::size_t d)
{
    auto spaces = koszul_spaces(relations, num_gens, d + 1);
    return express_in_CdV(spaces[d], spaces[d + 1], num_gens);
}

}  // namespace quadric
