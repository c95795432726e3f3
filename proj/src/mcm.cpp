#include "quadric/mcm.hpp"

#include "quadric/error.hpp"

#include <algorithm>
#include <set>

namespace quadric {

namespace {

void require_degree_zero_generators(const ModulePresentation& P)
{
    for (int d : P.generator_degrees)
        if (d != 0)
            throw Error(Errc::dimension_mismatch, "module must be generated in degree 0");
}

// Columns: u_j * b for each generator image u_j and basis element b of A_n, followed by a
// basis of K_n. The kernel, cut down to the first block, is the degree-n relation space of
// the submodule generated by the u_j.
Subspace relations_of_image(const ModulePresentation& P, const std::vector<Vector>& gens, int n)
{
    const QuadraticAlgebra& A = *P.algebra;
    const Field& f = A.field();
    std::size_t an = A.dim(static_cast<std::size_t>(n));
    auto K = relation_component(P, n);
    std::size_t rows = free_dim(P, n);
    std::size_t free_cols = gens.size() * an;
    Matrix m(f, rows, free_cols + K.dim());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t b = 0; b < an; ++b) {
            auto img = free_times(P, gens[j], 0, unit_vector(f, an, b), static_cast<std::size_t>(n));
            for (std::size_t r = 0; r < rows; ++r)
                m(r, j * an + b) = img[r];
        }
    for (std::size_t k = 0; k < K.dim(); ++k)
        for (std::size_t r = 0; r < rows; ++r)
            m(r, free_cols + k) = K.basis()(k, r);
    std::vector<Vector> cut;
    for (const auto& v : kernel(m).basis_vectors())
        cut.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(free_cols));
    return Subspace::span(f, free_cols, cut);
}

std::string combination(const std::vector<std::string>& labels, const Vector& v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        std::string c = v[k].str();
        bool compound = c.find(' ') != std::string::npos;
        bool negative = !compound && c.front() == '-';
        if (negative)
            c.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (c != "1")
            out += (compound ? "(" + c + ")" : c) + "*";
        out += labels[k];
    }
    return out.empty() ? "0" : out;
}

struct HomSystem {
    Matrix constraints;
    std::vector<std::size_t> block_sizes;
};

HomSystem hom_system(const ModulePresentation& P, const ModulePresentation& Q, int n)
{
    const QuadraticAlgebra& A = *P.algebra;
    const Field& f = A.field();
    HomSystem sys{Matrix(f, 0, 0), {}};
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (int deg : P.generator_degrees) {
        offsets.push_back(total);
        sys.block_sizes.push_back(free_dim(Q, deg + n));
        total += sys.block_sizes.back();
    }

    std::vector<Vector> rows;
    for (const auto& rel : P.relations) {
        int target = rel.degree + n;
        auto ann = relation_component(Q, target).annihilator();
        if (ann.dim() == 0)
            continue;
        // images[u] = image in F^Q_target of the u-th unknown basis vector
        std::vector<Vector> images(total, zero_vector(f, free_dim(Q, target)));
        for (std::size_t j = 0; j < P.num_generators(); ++j) {
            int k = rel.degree - P.generator_degrees[j];
            if (k < 0 || sys.block_sizes[j] == 0)
                continue;
            std::size_t ak = A.dim(static_cast<std::size_t>(k));
            std::size_t off = free_offset(P, j, rel.degree);
            Vector a(rel.coords.begin() + static_cast<std::ptrdiff_t>(off),
                     rel.coords.begin() + static_cast<std::ptrdiff_t>(off + ak));
            if (is_zero(a))
                continue;
            int src = P.generator_degrees[j] + n;
            for (std::size_t e = 0; e < sys.block_sizes[j]; ++e)
                images[offsets[j] + e] = free_times(Q, unit_vector(f, sys.block_sizes[j], e), src, a,
                                                    static_cast<std::size_t>(k));
        }
        for (std::size_t h = 0; h < ann.dim(); ++h) {
            Vector row = zero_vector(f, total);
            for (std::size_t u = 0; u < total; ++u)
                for (std::size_t r = 0; r < images[u].size(); ++r)
                    if (!images[u][r].is_zero())
                        row[u] += ann.basis()(h, r) * images[u][r];
            rows.push_back(std::move(row));
        }
    }
    sys.constraints = rows.empty() ? Matrix(f, 0, total) : Matrix::from_rows(f, rows, total);
    return sys;
}

}  // namespace

Matrix end_element(const EndAlgebraResult& end, const Vector& coords)
{
    Matrix out(end.algebra.field(), end.basis.front().rows(), end.basis.front().cols());
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero())
            out = out + coords[k] * end.basis[k];
    return out;
}

std::size_t submodule_dim(const ModulePresentation& P, const std::vector<Vector>& generators, int n)
{
    if (n < 0)
        return 0;
    const QuadraticAlgebra& A = *P.algebra;
    std::size_t an = A.dim(static_cast<std::size_t>(n));
    auto K = relation_component(P, n);
    auto vecs = K.basis_vectors();
    for (const auto& u : generators)
        for (std::size_t b = 0; b < an; ++b)
            vecs.push_back(free_times(P, u, 0, unit_vector(A.field(), an, b), static_cast<std::size_t>(n)));
    return Subspace::span(A.field(), free_dim(P, n), vecs).dim() - K.dim();
}

ModulePresentation idempotent_summand(const ModulePresentation& P, const Matrix& e, int check_to)
{
    require_degree_zero_generators(P);
    const Field& f = P.algebra->field();
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < e.cols(); ++c)
        cols.push_back(e.column_vector(c));
    auto gens = Subspace::span(f, P.num_generators(), cols).basis_vectors();

    ModulePresentation S;
    S.algebra = P.algebra;
    S.generator_degrees.assign(gens.size(), 0);
    for (const auto& u : gens)
        S.generator_labels.push_back(combination(P.generator_labels, u));
    if (gens.empty())
        return S;

    for (const auto& r : relations_of_image(P, gens, 1).basis_vectors())
        S.relations.push_back({1, r});
    // anything in degree 2 not generated by the linear relations
    auto generated = relation_component(S, 2);
    for (const auto& r : relations_of_image(P, gens, 2).basis_vectors()) {
        if (generated.contains(r))
            continue;
        S.relations.push_back({2, r});
        generated = relation_component(S, 2);
    }

    for (int n = 0; n <= check_to; ++n) {
        auto presented = module_graded_dim(S, n);
        auto direct = submodule_dim(P, gens, n);
        if (presented != direct)
            throw Error(Errc::additivity_violated, "summand presentation gives dim " + std::to_string(presented) +
                                                       " in degree " + std::to_string(n) + ", image has dim " +
                                                       std::to_string(direct));
    }
    return S;
}

CyclicIdentification identify_cyclic_quotient(const ModulePresentation& summand, std::size_t max_degree)
{
    CyclicIdentification id;
    if (summand.num_generators() != 1 || summand.generator_degrees[0] != 0) {
        id.diagnostics = "non-cyclic: " + std::to_string(summand.num_generators()) + " generators";
        return id;
    }
    auto ann = relation_component(summand, 1);
    id.annihilator_dim = ann.dim();
    if (ann.dim() != 1) {
        id.diagnostics = "degree-1 annihilator has dimension " + std::to_string(ann.dim());
        return id;
    }
    id.x = ann.basis_vector(0);
    auto quotient = cyclic_quotient(summand.algebra, *id.x);
    id.hilbert_match = true;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        auto a = module_graded_dim(quotient, static_cast<int>(n));
        auto b = module_graded_dim(summand, static_cast<int>(n));
        if (a != b) {
            id.hilbert_match = false;
            id.diagnostics = "dim (A/xA)_" + std::to_string(n) + " = " + std::to_string(a) + " but summand has " +
                             std::to_string(b);
            break;
        }
    }
    return id;
}

McmClassification classify_mcm(const HypersurfaceContext& ctx, const EndAlgebraResult& end,
                               const std::vector<Vector>& idempotents, std::size_t max_degree)
{
    McmClassification out;
    out.max_degree = max_degree;
    auto M = syzygy_presentation(ctx);
    int top = static_cast<int>(max_degree);
    out.hilbert_M = module_hilbert(M, 0, top);
    std::vector<std::size_t> sum(out.hilbert_M.size(), 0);
    for (const auto& coords : idempotents) {
        auto E = end_element(end, coords);
        auto pres = idempotent_summand(M, E, top);
        std::vector<Vector> gens;
        std::vector<Vector> cols;
        for (std::size_t c = 0; c < E.cols(); ++c)
            cols.push_back(E.column_vector(c));
        gens = Subspace::span(ctx.field(), E.rows(), cols).basis_vectors();
        auto cyclic = identify_cyclic_quotient(pres, max_degree);
        auto hilb = module_hilbert(pres, 0, top);
        for (std::size_t n = 0; n < hilb.size(); ++n)
            sum[n] += hilb[n];
        out.summands.push_back({E, std::move(gens), std::move(pres), std::move(cyclic), std::move(hilb)});
    }
    out.additive = sum == out.hilbert_M;
    if (!out.additive)
        throw Error(Errc::additivity_violated, "summand Hilbert functions do not add up to that of M");
    return out;
}

ShiftEvidence syzygy_shift_evidence(const HypersurfaceContext& ctx, const EndAlgebraResult& end,
                                    const McmClassification& classes, std::size_t max_degree)
{
    if (!is_semisimple(end.algebra))
        throw Error(Errc::not_isolated, "End(M) has a radical; the shift evidence applies to isolated singularities");
    ShiftEvidence ev;
    ev.dims.name = "dim Omega(M)_n = dim M_{n-1}";
    ev.dims.max_degree = max_degree;
    auto M = syzygy_presentation(ctx);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        auto omega = relation_component(M, static_cast<int>(n)).dim();
        auto shifted = module_graded_dim(M, static_cast<int>(n) - 1);
        ev.dims.checks.push_back({n, static_cast<long long>(shifted), static_cast<long long>(omega)});
    }

    const QuadraticAlgebra& A = *ctx.A;
    std::set<std::size_t> used;
    ev.permutation = !classes.summands.empty();
    for (const auto& s : classes.summands) {
        std::optional<std::size_t> match;
        if (s.cyclic.x) {
            auto ann = kernel(A.left_mult_matrix(*s.cyclic.x, 1, 1));
            if (ann.dim() == 1)
                for (std::size_t j = 0; j < classes.summands.size(); ++j) {
                    const auto& other = classes.summands[j].cyclic.x;
                    if (other && Subspace::span(A.field(), A.dim(1), {*other}) == ann) {
                        match = j;
                        break;
                    }
                }
        }
        ev.matching.push_back(match);
        if (!match || !used.insert(*match).second)
            ev.permutation = false;
    }
    return ev;
}

std::size_t hom_graded(const ModulePresentation& P, const ModulePresentation& Q, int n)
{
    auto sys = hom_system(P, Q, n);
    std::size_t total = 0, vanishing = 0;
    for (std::size_t j = 0; j < P.num_generators(); ++j) {
        total += sys.block_sizes[j];
        vanishing += relation_component(Q, P.generator_degrees[j] + n).dim();
    }
    return total - rank(sys.constraints) - vanishing;
}

std::vector<Matrix> degree_zero_endomorphisms(const ModulePresentation& P)
{
    require_degree_zero_generators(P);
    for (const auto& r : P.relations)
        if (r.degree < 1)
            throw Error(Errc::dimension_mismatch, "relations must lie in positive degree");
    auto sys = hom_system(P, P, 0);
    std::size_t n = P.num_generators();
    std::vector<Matrix> out;
    for (const auto& v : kernel(sys.constraints).basis_vectors()) {
        Matrix m(P.algebra->field(), n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                m(i, j) = v[j * n + i];
        out.push_back(std::move(m));
    }
    return out;
}

ModulePresentation direct_sum(const ModulePresentation& P, const ModulePresentation& Q)
{
    ModulePresentation S;
    S.algebra = P.algebra;
    S.generator_degrees = P.generator_degrees;
    S.generator_degrees.insert(S.generator_degrees.end(), Q.generator_degrees.begin(), Q.generator_degrees.end());
    S.generator_labels = P.generator_labels;
    S.generator_labels.insert(S.generator_labels.end(), Q.generator_labels.begin(), Q.generator_labels.end());
    const Field& f = P.algebra->field();
    for (const auto& r : P.relations) {
        Vector v = r.coords;
        auto pad = zero_vector(f, free_dim(Q, r.degree));
        v.insert(v.end(), pad.begin(), pad.end());
        S.relations.push_back({r.degree, std::move(v)});
    }
    for (const auto& r : Q.relations) {
        Vector v = zero_vector(f, free_dim(P, r.degree));
        v.insert(v.end(), r.coords.begin(), r.coords.end());
        S.relations.push_back({r.degree, std::move(v)});
    }
    return S;
}

PreresolutionTable preresolution_table(const HypersurfaceContext& ctx, const EndAlgebraResult& end,
                                       const McmClassification& classes, int max_degree, int min_degree)
{
    if (!is_semisimple(end.algebra))
        throw Error(Errc::not_isolated, "End(M) is not semisimple");
    PreresolutionTable t;
    t.min_degree = min_degree;
    t.max_degree = max_degree;

    std::vector<ModulePresentation> objects;
    for (std::size_t i = 0; i < classes.summands.size(); ++i) {
        objects.push_back(classes.summands[i].presentation);
        t.labels.push_back("M^" + std::to_string(i + 1));
    }
    objects.push_back(free_module(ctx.A));
    t.labels.push_back("A");

    t.nonnegative = true;
    t.dims.assign(objects.size(), std::vector<std::vector<std::size_t>>(objects.size()));
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j)
            for (int n = min_degree; n <= max_degree; ++n) {
                auto dim = hom_graded(objects[i], objects[j], n);
                t.dims[i][j].push_back(dim);
                if (n < 0 && dim != 0)
                    t.nonnegative = false;
            }

    std::size_t s = classes.summands.size();
    std::size_t a = s;
    t.corner_zero = true;
    t.column_is_M0 = true;
    for (std::size_t i = 0; i < s; ++i) {
        if (t.at(i, a, 0) != 0)
            t.corner_zero = false;
        if (t.at(a, i, 0) != module_graded_dim(objects[i], 0))
            t.column_is_M0 = false;
    }

    auto M = syzygy_presentation(ctx);
    auto sum = direct_sum(M, free_module(ctx.A));
    auto mats = degree_zero_endomorphisms(sum);
    t.b0_dim = mats.size();
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < mats.size(); ++k)
        labels.push_back("b" + std::to_string(k + 1));
    t.b0 = algebra_from_matrices(ctx.field(), mats, labels);

    std::size_t n = M.num_generators();
    std::vector<Vector> corner;
    for (const auto& m : mats) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                v.push_back(m(i, j));
        corner.push_back(std::move(v));
    }
    t.diagonal_is_end = Subspace::span(ctx.field(), n * n, corner) == end.solution_space;
    t.diagonal_semisimple = is_semisimple(end.algebra);
    return t;
}

std::size_t koszul_syzygy_dim(const HypersurfaceContext& ctx, std::size_t n)
{
    const QuadraticAlgebra& A = *ctx.A;
    const Field& f = A.field();
    std::size_t g = ctx.num_gens(), d = ctx.d;
    auto coeff = express_in_CdV(ctx.koszul[d - 1], ctx.koszul[d], g);
    std::size_t lower = ctx.koszul[d - 1].dim(), upper = ctx.koszul[d].dim();
    std::size_t an = A.dim(n), an1 = A.dim(n + 1);
    Matrix m(f, lower * an1, upper * an);
    for (std::size_t k = 0; k < upper; ++k)
        for (std::size_t b = 0; b < an; ++b) {
            auto basis = unit_vector(f, an, b);
            for (std::size_t j = 0; j < lower; ++j)
                for (std::size_t l = 0; l < g; ++l) {
                    const auto& c = coeff(k, j * g + l);
                    if (c.is_zero())
                        continue;
                    auto prod = A.multiply(A.generator(l), 1, basis, n);
                    for (std::size_t t = 0; t < an1; ++t)
                        m(j * an1 + t, k * an + b) += c * prod[t];
                }
        }
    return rank(m);
}

}  // namespace quadric
