#include "quadric/cli.hpp"

#include "quadric/hypersurface.hpp"
#include "quadric/mcm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace quadric::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(Errc::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message)
{
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Cursor over one line; `offset` is the column of text[0] minus one.
class Cursor {
public:
    Cursor(std::string text, std::size_t line, std::size_t offset)
        : text_(std::move(text)), line_(line), offset_(offset) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what)
    {
        if (!accept(c))
            fail(std::string("expected ") + what);
    }
    std::size_t column() const { return offset_ + pos_ + 1; }
    std::size_t pos() const { return pos_; }
    /// Position of the next token.
    std::size_t mark()
    {
        skip_ws();
        return pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const
    {
        throw ParseError(line_, offset_ + pos + 1, message);
    }

    std::string ident()
    {
        skip_ws();
        if (pos_ >= text_.size() || !ident_start(text_[pos_]))
            fail("expected a name");
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }
    Integer integer()
    {
        skip_ws();
        if (pos_ >= text_.size() || !digit(text_[pos_]))
            fail("expected a number");
        std::size_t start = pos_;
        while (pos_ < text_.size() && digit(text_[pos_]))
            ++pos_;
        return Integer(text_.substr(start, pos_ - start));
    }
    std::size_t small_exponent()
    {
        std::size_t at = mark();
        Integer k = integer();
        if (k > 64)
            fail_at(at, "exponent too large");
        return k.get_ui();
    }

private:
    std::string text_;
    std::size_t line_, offset_;
    std::size_t pos_ = 0;
};

// Integer polynomial in one variable, e.g. "t^2 - 2"; lowest degree first.
std::vector<Integer> parse_modulus(Cursor& c, const std::string& var)
{
    std::map<std::size_t, Integer> terms;
    bool first = true;
    while (true) {
        Integer sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (!c.accept('+') && !first)
            break;
        first = false;
        Integer coeff = 1;
        std::size_t power = 0;
        if (digit(c.peek())) {
            coeff = c.integer();
            if (!c.accept('*')) {
                terms[0] += sign * coeff;
                continue;
            }
        }
        std::size_t at = c.mark();
        std::string name = c.ident();
        if (name != var)
            c.fail_at(at, "unknown name '" + name + "' in modulus (the variable is '" + var + "')");
        power = 1;
        if (c.accept('^'))
            power = c.small_exponent();
        terms[power] += sign * coeff;
    }
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Integer> out(top + 1, 0);
    for (const auto& [k, v] : terms)
        out[k] = v;
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    return out;
}

Field parse_field(Cursor& c)
{
    std::size_t at = c.mark();
    std::string name = c.ident();
    if (name != "Q")
        c.fail_at(at, "unknown field '" + name + "' (expected Q, Q(i) or Q[t]/(...))");
    if (c.done())
        return FieldSpec::rationals();
    if (c.accept('(')) {
        std::size_t iat = c.mark();
        if (c.ident() != "i")
            c.fail_at(iat, "expected 'i' in Q(i)");
        c.expect(')', "')'");
        if (!c.done())
            c.fail("unexpected text after field");
        return FieldSpec::gaussian();
    }
    c.expect('[', "'(' or '['");
    std::size_t vat = c.mark();
    std::string var = c.ident();
    if (var == "i")
        c.fail_at(vat, "'i' is reserved for Q(i)");
    c.expect(']', "']'");
    c.expect('/', "'/'");
    c.expect('(', "'('");
    std::size_t mat = c.mark();
    auto modulus = parse_modulus(c, var);
    c.expect(')', "')'");
    if (!c.done())
        c.fail("unexpected text after field");
    try {
        return FieldSpec::extension(modulus, var);
    } catch (const Error& e) {
        c.fail_at(mat, e.what());
    }
}

struct Declared {
    Field field;
    std::vector<std::string> vars;
    std::map<std::string, std::size_t> index;
};

// A homogeneous quadratic expression as an element of V (x) V.
Vector parse_quadratic(Cursor& c, const Declared& decl)
{
    const Field& f = decl.field;
    std::size_t g = decl.vars.size();
    Vector out = zero_vector(f, g * g);
    bool first = true;
    if (c.done())
        c.fail("empty expression");
    while (!c.done()) {
        std::size_t term_at = c.mark();
        FieldElement coeff(f, 1);
        if (c.accept('-'))
            coeff = -coeff;
        else if (!c.accept('+') && !first)
            c.fail("expected '+' or '-'");
        first = false;
        c.skip_ws();
        term_at = c.pos();
        std::vector<std::size_t> vars;
        do {
            char p = c.peek();
            std::size_t at = c.mark();
            if (digit(p)) {
                Integer num = c.integer();
                Integer den = 1;
                if (c.accept('/')) {
                    std::size_t dat = c.mark();
                    den = c.integer();
                    if (den == 0)
                        c.fail_at(dat, "zero denominator");
                }
                Rational r(num, den);
                r.canonicalize();
                coeff *= FieldElement(f, r);
                continue;
            }
            if (!ident_start(p))
                c.fail("expected a coefficient or a variable");
            std::string name = c.ident();
            std::size_t power = 1;
            if (c.accept('^'))
                power = c.small_exponent();
            if (name == "i" && f->kind() == FieldKind::gaussian) {
                for (std::size_t k = 0; k < power; ++k)
                    coeff *= FieldElement::generator(f);
                continue;
            }
            if (f->kind() == FieldKind::extension && name == f->variable()) {
                for (std::size_t k = 0; k < power; ++k)
                    coeff *= FieldElement::generator(f);
                continue;
            }
            auto it = decl.index.find(name);
            if (it == decl.index.end()) {
                if (name == "i")
                    c.fail_at(at, "'i' is only a scalar in Q(i) mode");
                c.fail_at(at, "unknown variable '" + name + "'");
            }
            if (power == 0)
                c.fail_at(at, "zero exponent on a variable");
            vars.insert(vars.end(), power, it->second);
        } while (c.accept('*'));
        if (vars.size() != 2)
            c.fail_at(term_at, "monomial of degree " + std::to_string(vars.size()) + ", expected degree 2");
        out[vars[0] * g + vars[1]] += coeff;
    }
    return out;
}

}  // namespace

PresentationFile parse_presentation(const std::string& text)
{
    std::optional<Declared> decl;
    bool have_vars = false;
    std::optional<Vector> central;
    std::vector<Vector> rels;
    std::size_t line_no = 0, last_line = 0;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::string line = raw.substr(0, raw.find('#'));
        if (std::all_of(line.begin(), line.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }))
            continue;
        last_line = line_no;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            auto first = line.find_first_not_of(" \t");
            throw ParseError(line_no, first + 1, "expected 'key = value'");
        }
        Cursor key(line.substr(0, eq), line_no, 0);
        std::string k = key.ident();
        if (!key.done())
            key.fail("unexpected text before '='");
        Cursor value(line.substr(eq + 1), line_no, eq + 1);
        std::size_t key_col = line.find_first_not_of(" \t") + 1;

        if (k == "field") {
            if (decl)
                throw ParseError(line_no, key_col, "field declared twice");
            decl = Declared{parse_field(value), {}, {}};
        } else if (k == "vars") {
            if (!decl)
                throw ParseError(line_no, key_col, "vars before field");
            if (have_vars)
                throw ParseError(line_no, key_col, "vars declared twice");
            do {
                std::size_t at = value.mark();
                std::string name = value.ident();
                if (name == "i" && decl->field->kind() == FieldKind::gaussian)
                    value.fail_at(at, "'i' is reserved in Q(i) mode");
                if (decl->field->kind() == FieldKind::extension && name == decl->field->variable())
                    value.fail_at(at, "'" + name + "' names the field generator");
                if (decl->index.count(name))
                    value.fail_at(at, "duplicate variable '" + name + "'");
                decl->index[name] = decl->vars.size();
                decl->vars.push_back(name);
            } while (value.accept(','));
            if (!value.done())
                value.fail("expected ',' between variables");
            have_vars = true;
        } else if (k == "rel" || k == "central") {
            if (!have_vars)
                throw ParseError(line_no, key_col, k + " before vars");
            if (k == "central" && central)
                throw ParseError(line_no, key_col, "central declared twice");
            auto v = parse_quadratic(value, *decl);
            if (k == "rel")
                rels.push_back(std::move(v));
            else
                central = std::move(v);
        } else {
            throw ParseError(line_no, key_col, "unknown key '" + k + "'");
        }
    }
    std::size_t end_line = last_line + 1;
    if (!decl)
        throw ParseError(end_line, 1, "missing field line");
    if (!have_vars)
        throw ParseError(end_line, 1, "missing vars line");
    if (!central)
        throw ParseError(end_line, 1, "missing central line");

    std::size_t g = decl->vars.size();
    return PresentationFile{
        QuadraticPresentation(decl->field, decl->vars, Subspace::span(decl->field, g * g, rels)),
        std::move(*central), rels.size()};
}

PresentationFile read_presentation(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::parse_error, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_presentation(os.str());
}

std::string format_tensor(const Vector& t, const std::vector<std::string>& names, std::size_t length)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k].is_zero())
            continue;
        std::string coeff = t[k].str();
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
        for (auto letter : word_at(k, length, names.size()))
            word += (word.empty() ? "" : "*") + names[letter];
        if (coeff != "1")
            os << (compound ? "(" + coeff + ")" : coeff) << "*";
        os << word;
    }
    return first ? "0" : os.str();
}

const std::vector<std::string>& stage_names()
{
    static const std::vector<std::string> names{
        "qp",  "central", "regular", "build",         "dual",    "koszul-spaces",  "end",
        "verdict", "idempotents", "mcm", "syzygy", "preresolution", "crosscheck",
    };
    return names;
}

namespace {

std::string certificate_tag(std::size_t n) { return "certificate(" + std::to_string(n) + ")"; }

Json json_certificate(const Certificate& c)
{
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed();
    auto fail = c.first_failure();
    j["first_failure"] = fail ? Json(*fail) : Json(nullptr);
    Json checks = Json::array();
    for (const auto& d : c.checks)
        checks.push_back(Json{{"degree", d.degree}, {"expected", d.expected}, {"actual", d.actual}});
    j["checks"] = checks;
    if (!c.notes.empty())
        j["notes"] = c.notes;
    return j;
}

Json json_matrix(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

/// First nonzero coordinate scaled to 1.
Vector normalized(Vector v)
{
    for (const auto& x : v)
        if (!x.is_zero()) {
            auto inv = x.inverse();
            for (auto& y : v)
                y *= inv;
            break;
        }
    return v;
}

struct StopSignal {};

class Runner {
public:
    Runner(const PipelineOptions& options) : opt_(options)
    {
        body_["settings"] = Json{{"degree", opt_.degree},
                                 {"seed", opt_.seed},
                                 {"skip_qp_check", opt_.skip_qp_check},
                                 {"stop_after", opt_.stop_after ? Json(*opt_.stop_after) : Json(nullptr)}};
    }

    Json& body() { return body_; }

    void stage(const std::string& name, const std::string& claim, Json data)
    {
        Json s;
        s["stage"] = name;
        s["claim"] = claim;
        for (auto& [k, v] : data.items())
            s[k] = v;
        stages_.push_back(std::move(s));
        if (opt_.stop_after && *opt_.stop_after == name)
            throw StopSignal{};
    }

    void skipped(const std::string& name, const std::string& reason)
    {
        stage(name, "none", Json{{"skipped", reason}});
    }

    void warn(std::string w) { warnings_.push_back(std::move(w)); }

    Report finish(const char* status, std::optional<Json> error = std::nullopt)
    {
        body_["stages"] = stages_;
        body_["warnings"] = warnings_;
        body_["status"] = status;
        Report r;
        if (error) {
            body_["error"] = *error;
            r.hard_failure = true;
        }
        r.body = std::move(body_);
        return r;
    }

    std::string current;

private:
    PipelineOptions opt_;
    Json body_;
    Json stages_ = Json::array();
    std::vector<std::string> warnings_;
};

void run_stages(Runner& run, const PresentationFile& input, const PipelineOptions& opt)
{
    const std::size_t N = opt.degree;
    const QuadraticPresentation& Sp = input.S;
    const Field& f = Sp.field;
    const std::size_t g = Sp.num_gens();
    const std::string cert = certificate_tag(N);

    run.current = "qp";
    if (g < 2)
        throw Error(Errc::unsupported_dimension, "need at least two generators, got " + std::to_string(g));
    auto S = std::make_shared<QuadraticAlgebra>(Sp);
    {
        auto c = quantum_polynomial_check(*S, N);
        Json data{{"certificate", json_certificate(c)}};
        if (!c.passed()) {
            if (!opt.skip_qp_check)
                throw Error(Errc::not_quantum_polynomial,
                            "Hilbert-level quantum polynomial certificate fails at degree " +
                                std::to_string(*c.first_failure()));
            run.warn("WARNING: S fails the quantum polynomial certificate; continuing because of --skip-qp-check. "
                     "Later results assume gldim S = dim V and may be meaningless.");
        }
        run.stage("qp", cert, std::move(data));
    }

    run.current = "central";
    if (Sp.relations.contains(input.central))
        throw Error(Errc::relation_dependence, "w lies in the relation space of S");
    bool central = is_central_deg2(*S, input.central);
    if (!central)
        throw Error(Errc::not_central, "w does not commute with every generator of S");
    run.stage("central", "exact", Json{{"central", true}});

    run.current = "regular";
    {
        auto c = is_regular_deg2(*S, input.central, N);
        if (!c.passed())
            throw Error(Errc::not_regular_certificate,
                        "dim (S/wS)_n != dim S_n - dim S_{n-2} at n = " + std::to_string(*c.first_failure()));
        run.stage("regular", cert, Json{{"certificate", json_certificate(c)}});
    }

    run.current = "build";
    ContextOptions copt;
    copt.max_degree = N;
    copt.require_quantum_polynomial = !opt.skip_qp_check;
    auto ctx = build_context(Sp, input.central, copt);
    const QuadraticAlgebra& A = *ctx.A;
    run.stage("build", "exact",
              Json{{"d", ctx.d},
                   {"gorenstein_parameter", ctx.gorenstein_parameter},
                   {"hilbert_S", ctx.S->hilbert(N)},
                   {"hilbert_A", A.hilbert(N)}});

    run.current = "dual";
    {
        QuadraticAlgebra S_dual(quadratic_dual(Sp));
        QuadraticAlgebra A_dual(quadratic_dual(A.presentation()));
        auto hs = S_dual.hilbert(g + 1);
        long long total = 0;
        for (auto x : hs)
            total += static_cast<long long>(x);
        auto koszul_A = koszul_numeric_check(A, N + 2);
        auto koszul_S = koszul_numeric_check(*S, N + 2);
        run.stage("dual", certificate_tag(N + 2),
                  Json{{"hilbert_S_dual", hs},
                       {"dim_S_dual", total},
                       {"S_dual_vanishes_above", hs.back() == 0 ? Json(g) : Json(nullptr)},
                       {"hilbert_A_dual", A_dual.hilbert(N)},
                       {"koszul_numeric_A", json_certificate(koszul_A)},
                       {"koszul_numeric_S", json_certificate(koszul_S)}});
    }

    run.current = "koszul-spaces";
    {
        std::vector<std::size_t> dims;
        for (const auto& c : ctx.koszul)
            dims.push_back(c.dim());
        Json basis = Json::array();
        for (const auto& v : ctx.koszul[ctx.d].basis_vectors())
            basis.push_back(format_tensor(v, Sp.generators, ctx.d));
        run.stage("koszul-spaces", "exact", Json{{"dims", dims}, {"basis_C_d", basis}});
    }

    run.current = "end";
    auto end = end_M(ctx);
    auto rad = radical(end.algebra);
    {
        Json basis = Json::array();
        for (const auto& m : end.basis)
            basis.push_back(json_matrix(m));
        run.stage("end", "exact",
                  Json{{"dim", end.algebra.dim()}, {"radical_dim", rad.dim()}, {"basis", basis}});
    }

    run.current = "verdict";
    bool isolated = rad.dim() == 0;
    run.stage("verdict", "exact",
              Json{{"isolated", isolated}, {"reason", isolated ? "End(M) is semisimple" : "End(M) has a nonzero radical"}});

    run.current = "idempotents";
    std::optional<std::vector<Vector>> idempotents;
    if (!isolated) {
        run.skipped("idempotents", "not an isolated singularity");
    } else {
        try {
            auto set = primitive_idempotents(end.algebra, opt.seed);
            auto blocks = block_structure(end.algebra, opt.seed);
            Json list = Json::array();
            for (const auto& e : set.idempotents)
                list.push_back(json_matrix(end_element(end, e)));
            idempotents = set.idempotents;
            run.stage("idempotents", "exact",
                      Json{{"split", true}, {"count", set.idempotents.size()}, {"blocks", blocks}, {"idempotents", list}});
        } catch (const Error& e) {
            if (e.code() != Errc::non_split)
                throw;
            run.warn(std::string("idempotent stage: ") + e.what() + "; rerun over a larger field");
            run.stage("idempotents", "exact", Json{{"split", false}, {"message", e.what()}});
        }
    }

    const char* no_summands = isolated ? "idempotents not available over this field" : "not an isolated singularity";

    run.current = "mcm";
    std::optional<McmClassification> classes;
    if (!idempotents) {
        run.skipped("mcm", no_summands);
    } else {
        classes = classify_mcm(ctx, end, *idempotents, N);
        Json list = Json::array();
        for (const auto& s : classes->summands) {
            Json gens = Json::array();
            for (const auto& u : s.generators) {
                Vector t = zero_vector(f, ctx.koszul[ctx.d].ambient_dim());
                for (std::size_t k = 0; k < u.size(); ++k)
                    for (std::size_t r = 0; r < t.size(); ++r)
                        t[r] += u[k] * ctx.koszul[ctx.d].basis()(k, r);
                gens.push_back(format_tensor(t, Sp.generators, ctx.d));
            }
            Json item{{"generators", gens}};
            if (s.cyclic.x)
                item["annihilator"] = A.format(normalized(*s.cyclic.x), 1);
            else
                item["annihilator"] = "non-cyclic";
            item["quotient_hilbert_match"] = s.cyclic.hilbert_match;
            if (!s.cyclic.diagnostics.empty())
                item["diagnostics"] = s.cyclic.diagnostics;
            item["hilbert"] = s.hilbert;
            list.push_back(item);
        }
        run.stage("mcm", cert,
                  Json{{"count", classes->summands.size()},
                       {"hilbert_M", classes->hilbert_M},
                       {"additive", classes->additive},
                       {"summands", list}});
    }

    run.current = "syzygy";
    if (!classes) {
        run.skipped("syzygy", no_summands);
    } else {
        auto ev = syzygy_shift_evidence(ctx, end, *classes, N);
        Json matching = Json::array();
        for (const auto& m : ev.matching)
            matching.push_back(m ? Json(*m + 1) : Json(nullptr));
        run.stage("syzygy", cert,
                  Json{{"dims", json_certificate(ev.dims)},
                       {"annihilator_matching", matching},
                       {"permutation", ev.permutation},
                       {"passed", ev.passed()}});
    }

    run.current = "preresolution";
    if (!classes) {
        run.skipped("preresolution", no_summands);
    } else {
        auto t = preresolution_table(ctx, end, *classes, static_cast<int>(N));
        Json table = Json::array();
        for (std::size_t i = 0; i < t.labels.size(); ++i)
            for (std::size_t j = 0; j < t.labels.size(); ++j)
                table.push_back(Json{{"hom", "Hom(" + t.labels[i] + ", " + t.labels[j] + ")"}, {"dims", t.dims[i][j]}});
        bool structural = t.corner_zero && t.column_is_M0 && t.diagonal_is_end && t.diagonal_semisimple;
        run.stage("preresolution", cert,
                  Json{{"objects", t.labels},
                       {"degrees", Json::array({t.min_degree, t.max_degree})},
                       {"table", table},
                       {"nonnegative", t.nonnegative},
                       {"B0", Json{{"claim", "exact"},
                                   {"dim", t.b0_dim},
                                   {"corner_zero", t.corner_zero},
                                   {"column_is_M0", t.column_is_M0},
                                   {"diagonal_is_end", t.diagonal_is_end},
                                   {"diagonal_semisimple", t.diagonal_semisimple},
                                   {"gldim_at_most_1", structural}}}});
    }

    run.current = "crosscheck";
    {
        auto ca = c_algebra_via_dual(ctx);
        auto crad = radical(ca.algebra);
        auto blocks = [&](const FiniteDimAlgebra& F) -> Json {
            try {
                return block_structure(semisimple_quotient(F), opt.seed);
            } catch (const Error& e) {
                if (e.code() != Errc::non_split)
                    throw;
                return nullptr;
            }
        };
        Json end_blocks = blocks(end.algebra), c_blocks = blocks(ca.algebra);
        bool agree = end.algebra.dim() == ca.algebra.dim() && rad.dim() == crad.dim() && end_blocks == c_blocks;
        Json algebra{{"claim", "exact"},
                     {"varpi", ca.dual->format(ca.central.varpi, 2)},
                     {"stable_degree", 2 * ca.central.m},
                     {"dim_C", ca.algebra.dim()},
                     {"dim_End", end.algebra.dim()},
                     {"radical_C", crad.dim()},
                     {"radical_End", rad.dim()},
                     {"blocks_C", c_blocks},
                     {"blocks_End", end_blocks},
                     {"blocks_compared", !end_blocks.is_null() && !c_blocks.is_null()},
                     {"agree", agree}};

        auto report = dimension_identities(ctx, end);
        Json ids{{"claim", "exact"}, {"skipped", report.skipped}};
        if (report.skipped)
            ids["reason"] = report.reason;
        ids["dim_S_dual"] = report.dual_total;
        Json list = Json::array();
        for (const auto& i : report.identities)
            list.push_back(Json{{"identity", i.name}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"ok", i.ok()}});
        ids["identities"] = list;
        ids["passed"] = report.passed();

        Certificate syz;
        syz.name = "dim M_n from the module presentation = rank of the Koszul differential";
        syz.max_degree = N;
        auto M = syzygy_presentation(ctx);
        for (std::size_t n = 0; n <= N; ++n)
            syz.checks.push_back({n, static_cast<long long>(koszul_syzygy_dim(ctx, n)),
                                  static_cast<long long>(module_graded_dim(M, static_cast<int>(n)))});
        Json syzj = json_certificate(syz);
        syzj["claim"] = cert;

        run.stage("crosscheck", "mixed", Json{{"c_algebra", algebra}, {"dimension_identities", ids}, {"syzygy_dims", syzj}});
    }
}

void describe_input(Json& body, const PresentationFile& input)
{
    const auto& S = input.S;
    Json rels = Json::array();
    for (const auto& v : S.relations.basis_vectors())
        rels.push_back(format_tensor(v, S.generators, 2));
    body["input"] = Json{{"field", S.field->describe()},
                         {"vars", S.generators},
                         {"dim_V", S.num_gens()},
                         {"dim_R", S.relations.dim()},
                         {"rel_lines", input.rel_lines},
                         {"relations", rels},
                         {"central", format_tensor(input.central, S.generators, 2)}};
}

}  // namespace

Report run_pipeline(const PresentationFile& input, const PipelineOptions& options)
{
    if (options.stop_after) {
        const auto& names = stage_names();
        if (std::find(names.begin(), names.end(), *options.stop_after) == names.end())
            throw Error(Errc::parse_error, "unknown stage '" + *options.stop_after + "'");
    }
    Runner run(options);
    describe_input(run.body(), input);
    if (input.rel_lines > input.S.relations.dim())
        run.warn("rel lines are linearly dependent; dim R = " + std::to_string(input.S.relations.dim()));
    try {
        run_stages(run, input, options);
    } catch (const StopSignal&) {
        return run.finish("stopped");
    } catch (const Error& e) {
        return run.finish("failed", Json{{"stage", run.current}, {"code", to_string(e.code())}, {"message", e.what()}});
    }
    return run.finish("complete");
}

Report run_pipeline_text(const std::string& text, const PipelineOptions& options)
{
    std::optional<PresentationFile> input;
    try {
        input = parse_presentation(text);
    } catch (const ParseError& e) {
        Report r;
        r.hard_failure = true;
        r.body["settings"] = Json{{"degree", options.degree}, {"seed", options.seed}};
        r.body["stages"] = Json::array();
        r.body["warnings"] = Json::array();
        r.body["status"] = "failed";
        r.body["error"] = Json{{"stage", "parse"},
                               {"code", to_string(e.code())},
                               {"line", e.line()},
                               {"column", e.column()},
                               {"message", e.what()}};
        return r;
    }
    return run_pipeline(*input, options);
}

std::string render_json(const Report& report) { return report.body.dump(2) + "\n"; }

namespace {

bool scalar_array(const Json& j)
{
    return std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "-";
    return j.dump();
}

std::string inline_array(const Json& j)
{
    std::string s;
    for (const auto& x : j)
        s += (s.empty() ? "" : ", ") + scalar(x);
    return "[" + s + "]";
}

void render(std::ostream& os, const Json& j, int indent)
{
    std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : j.items()) {
        if (v.is_primitive()) {
            os << pad << k << ": " << scalar(v) << "\n";
        } else if (v.is_array() && scalar_array(v)) {
            os << pad << k << ": " << inline_array(v) << "\n";
        } else if (v.is_array()) {
            os << pad << k << ":\n";
            for (const auto& x : v) {
                if (x.is_primitive()) {
                    os << pad << "  - " << scalar(x) << "\n";
                } else if (x.is_array() && scalar_array(x)) {
                    os << pad << "  " << inline_array(x) << "\n";
                } else if (x.is_array()) {
                    // a matrix
                    for (const auto& row : x)
                        os << pad << "  " << (row.is_array() ? inline_array(row) : scalar(row)) << "\n";
                    os << pad << "  --\n";
                } else if (std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); })) {
                    std::string line;
                    for (const auto& [xk, xv] : x.items())
                        line += (line.empty() ? "" : ", ") + xk + "=" + scalar(xv);
                    os << pad << "  - " << line << "\n";
                } else {
                    os << pad << "  -\n";
                    render(os, x, indent + 4);
                }
            }
        } else {
            os << pad << k << ":\n";
            render(os, v, indent + 2);
        }
    }
}

}  // namespace

std::string render_text(const Report& report)
{
    const Json& b = report.body;
    std::ostringstream os;
    if (b.contains("input")) {
        os << "== input\n";
        render(os, b["input"], 2);
    }
    os << "== settings\n";
    render(os, b["settings"], 2);
    for (const auto& s : b["stages"]) {
        os << "== " << s["stage"].get<std::string>() << " [" << s["claim"].get<std::string>() << "]\n";
        Json rest = Json::object();
        for (const auto& [k, v] : s.items())
            if (k != "stage" && k != "claim")
                rest[k] = v;
        render(os, rest, 2);
    }
    for (const auto& w : b["warnings"])
        os << "warning: " << w.get<std::string>() << "\n";
    if (b.contains("error")) {
        const Json& e = b["error"];
        os << "error in stage " << e["stage"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
    }
    os << "status: " << b["status"].get<std::string>() << "\n";
    return os.str();
}

}  // namespace quadric::cli
