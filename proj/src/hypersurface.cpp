#include "quadric/hypersurface.hpp"

#include "quadric/error.hpp"

#include <algorithm>

namespace quadric {

HypersurfaceContext build_context(const QuadraticPresentation& S, const Vector& w, const ContextOptions& options)
{
    std::size_t g = S.num_gens();
    if (g < 2)
        throw Error(Errc::unsupported_dimension, "need at least two generators, got " + std::to_string(g));
    if (w.size() != g * g)
        throw Error(Errc::dimension_mismatch, "central element must lie in V (x) V");
    if (S.relations.contains(w))
        throw Error(Errc::relation_dependence, "w lies in the relation space of S");

    HypersurfaceContext ctx;
    auto s_alg = std::make_shared<QuadraticAlgebra>(S);
    ctx.S = s_alg;
    ctx.w = w;

    ctx.quantum_polynomial = quantum_polynomial_check(*s_alg, options.max_degree);
    if (!ctx.quantum_polynomial.passed()) {
        std::string msg = "Hilbert-level quantum polynomial certificate fails at degree " +
                          std::to_string(*ctx.quantum_polynomial.first_failure());
        if (options.require_quantum_polynomial)
            throw Error(Errc::not_quantum_polynomial, msg);
        ctx.warnings.push_back(msg + "; continuing because the check was skipped");
    }

    if (!is_central_deg2(*s_alg, w))
        throw Error(Errc::not_central, "w does not commute with every generator of S");

    ctx.regular = is_regular_deg2(*s_alg, w, options.max_degree);
    if (!ctx.regular.passed())
        throw Error(Errc::not_regular_certificate,
                    "dim (S/wS)_n != dim S_n - dim S_{n-2} at n = " + std::to_string(*ctx.regular.first_failure()));

    ctx.A = std::make_shared<QuadraticAlgebra>(with_relation(S, w));
    ctx.d = g - 1;
    ctx.gorenstein_parameter = static_cast<long>(ctx.d) - 1;
    ctx.koszul = koszul_spaces(ctx.A->presentation().relations, g, ctx.d + 3);
    ctx.syzygy_relations = express_in_CdV(ctx.koszul[ctx.d], ctx.koszul[ctx.d + 1], g);
    return ctx;
}

ModulePresentation syzygy_presentation(const HypersurfaceContext& ctx)
{
    ModulePresentation P;
    P.algebra = ctx.A;
    std::size_t n = ctx.koszul[ctx.d].dim();
    P.generator_degrees.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k)
        P.generator_labels.push_back("c" + std::to_string(k + 1));
    // coefficient of c_k (x) v_l sits at k * g + l, which is already the layout of the
    // degree-1 free component
    for (std::size_t r = 0; r < ctx.syzygy_relations.rows(); ++r)
        P.relations.push_back({1, ctx.syzygy_relations.row_vector(r)});
    return P;
}

EndAlgebraResult end_M(const HypersurfaceContext& ctx)
{
    const Field& f = ctx.field();
    std::size_t g = ctx.num_gens();
    std::size_t n = ctx.koszul[ctx.d].dim();
    const Matrix& rel = ctx.syzygy_relations;
    auto ann = Subspace::row_space(rel).annihilator();

    // (F a)(i, l) = sum_k F_ik a(k, l) must be killed by every annihilator vector h
    Matrix constraints(f, rel.rows() * ann.dim(), n * n);
    for (std::size_t r = 0; r < rel.rows(); ++r)
        for (std::size_t h = 0; h < ann.dim(); ++h) {
            std::size_t row = r * ann.dim() + h;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    FieldElement acc(f);
                    for (std::size_t l = 0; l < g; ++l) {
                        const auto& hv = ann.basis()(h, i * g + l);
                        if (!hv.is_zero())
                            acc += hv * rel(r, k * g + l);
                    }
                    constraints(row, i * n + k) = acc;
                }
        }

    auto sol = kernel(constraints);
    std::vector<Matrix> mats;
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < sol.dim(); ++b) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                m(i, k) = sol.basis()(b, i * n + k);
        mats.push_back(std::move(m));
        labels.push_back("f" + std::to_string(b + 1));
    }
    // closure under composition and the identity are verified here
    auto alg = algebra_from_matrices(f, mats, labels);
    return {std::move(sol), std::move(mats), std::move(alg)};
}

namespace {

bool stable_multiplier(const QuadraticAlgebra& dual, const Vector& varpi, std::size_t from, std::size_t to)
{
    for (std::size_t n = from; n <= to; ++n) {
        if (dual.dim(n) != dual.dim(n + 2))
            return false;
        if (rank(dual.left_mult_matrix(varpi, 2, n)) != dual.dim(n))
            return false;
    }
    return true;
}

}  // namespace

CAlgebraResult c_algebra_via_dual(const HypersurfaceContext& ctx, std::size_t m)
{
    const Field& f = ctx.field();
    auto dual = std::make_shared<QuadraticAlgebra>(quadratic_dual(ctx.A->presentation()));
    if (m == 0)
        m = std::max<std::size_t>(1, (ctx.d + 1) / 2);
    if (2 * m < ctx.d)
        throw Error(Errc::index_out_of_range, "need 2m >= d");
    std::size_t top = std::max(2 * m + 2, 4 * m - 2);

    // central elements of A^!_2: varpi v - v varpi = 0 in A^!_3 for every generator v
    std::size_t g = dual->num_gens();
    std::size_t d2 = dual->dim(2), d3 = dual->dim(3);
    Matrix comm(f, g * d3, d2);
    for (std::size_t b = 0; b < d2; ++b) {
        auto e = unit_vector(f, d2, b);
        for (std::size_t v = 0; v < g; ++v) {
            auto left = dual->multiply(e, 2, dual->generator(v), 1);
            auto right = dual->multiply(dual->generator(v), 1, e, 2);
            for (std::size_t r = 0; r < d3; ++r)
                comm(v * d3 + r, b) = left[r] - right[r];
        }
    }
    auto central = kernel(comm).basis_vectors();

    std::vector<Vector> candidates = central;
    for (std::size_t i = 0; i < central.size(); ++i)
        for (std::size_t j = i + 1; j < central.size(); ++j) {
            Vector s = central[i];
            for (std::size_t k = 0; k < s.size(); ++k)
                s[k] += central[j][k];
            candidates.push_back(std::move(s));
        }
    std::optional<Vector> varpi;
    for (const auto& c : candidates)
        if (stable_multiplier(*dual, c, ctx.d, top)) {
            varpi = c;
            break;
        }
    if (!varpi)
        throw Error(Errc::no_stable_central, std::to_string(central.size()) +
                                                 " central degree-2 dual elements, none regular in degrees " +
                                                 std::to_string(ctx.d) + ".." + std::to_string(top));

    std::size_t deg = 2 * m;
    Vector power = dual->one();
    for (std::size_t k = 0; k < m; ++k)
        power = dual->multiply(power, 2 * k, *varpi, 2);
    Matrix mult = dual->left_mult_matrix(power, deg, deg);

    std::size_t dim = dual->dim(deg);
    std::vector<Vector> constants;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) {
        auto ei = unit_vector(f, dim, i);
        labels.push_back(dual->format(ei, deg));
        for (std::size_t j = 0; j < dim; ++j) {
            auto prod = dual->multiply(ei, deg, unit_vector(f, dim, j), deg);
            auto c = solve(mult, prod);
            if (!c)
                throw Error(Errc::no_stable_central, "varpi^m is not invertible on the stable degree");
            constants.push_back(std::move(*c));
        }
    }
    // varpi^m is the unit
    FiniteDimAlgebra alg(f, std::move(labels), std::move(constants), power);
    return {dual, {*varpi, m, top}, std::move(alg)};
}

bool DimensionReport::passed() const
{
    return !skipped && std::all_of(identities.begin(), identities.end(), [](const Identity& i) { return i.ok(); });
}

DimensionReport dimension_identities(const HypersurfaceContext& ctx, const EndAlgebraResult& end)
{
    DimensionReport rep;
    if (!ctx.quantum_polynomial.passed()) {
        rep.skipped = true;
        rep.reason = "quantum polynomial certificate failed, so dim S^! is not known to be 2^dim V";
        return rep;
    }
    QuadraticAlgebra sdual(quadratic_dual(ctx.S->presentation()));
    for (auto x : sdual.hilbert(ctx.num_gens()))
        rep.dual_total += static_cast<long long>(x);
    long long half = rep.dual_total / 2;
    auto ll = [](std::size_t x) { return static_cast<long long>(x); };
    rep.identities.push_back({"dim End(M) = 1/2 dim S^!", ll(end.algebra.dim()), half});
    for (std::size_t n = ctx.d; n <= ctx.d + 3; ++n)
        rep.identities.push_back({"dim C_" + std::to_string(n) + " = 1/2 dim S^!", ll(ctx.koszul[n].dim()), half});
    rep.identities.push_back({"dim M_0 = dim End(M)", ll(module_graded_dim(syzygy_presentation(ctx), 0)),
                              ll(end.algebra.dim())});
    return rep;
}

}  // namespace quadric
