#include "apostol/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "apostol/bases.hpp"
#include "apostol/family.hpp"
#include "apostol/identities.hpp"

namespace apostol {

using nlohmann::ordered_json;

ordered_json to_json(const Poly& p) {
    ordered_json a = ordered_json::array();
    if (p.is_zero()) a.push_back("0");
    for (const Rational& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

Poly poly_from_json(const ordered_json& j) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(parse_rational(e.get<std::string>()));
    return Poly(std::move(c));
}

namespace {

ordered_json rationals_json(const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const Rational& q : v) a.push_back(to_string(q));
    return a;
}

}  // namespace

ordered_json to_json(const Residual& r) {
    if (std::holds_alternative<ExactZero>(r)) return {{"kind", "exact_zero"}};
    if (const auto* m = std::get_if<FirstMismatch>(&r))
        return {{"kind", "first_mismatch"},
                {"n", m->n},
                {"power", m->power},
                {"lhs", to_string(m->lhs)},
                {"rhs", to_string(m->rhs)}};
    const auto& d = std::get<NumericDiagnostic>(r);
    return {{"kind", "diagnostic"}, {"truncations", d.truncations}, {"residuals", rationals_json(d.residuals)}};
}

ordered_json to_json(const IdentityReport& r) {
    return {{"id", r.id.str()},
            {"equation", equation_text(r.id)},
            {"params", r.params},
            {"sample", r.sample},
            {"verdict", to_string(r.verdict)},
            {"residual", to_json(r.residual)},
            {"notes", r.notes}};
}

namespace {

enum class Format { Table, Csv, Json };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational flag_rational(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("--" + name + ": '" + text + "' is not a rational p/q");
    }
}

std::vector<Rational> flag_rationals(const std::string& name, const std::vector<std::string>& texts) {
    std::vector<Rational> v;
    for (const auto& t : texts) v.push_back(flag_rational(name, t));
    return v;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s;
}

std::vector<std::string> strings_of(const std::vector<Rational>& v) {
    std::vector<std::string> s;
    for (const Rational& q : v) s.push_back(to_string(q));
    return s;
}

std::vector<std::string> poly_cells(const Poly& p) {
    if (p.is_zero()) return {"0"};
    return strings_of(p.coeffs());
}

std::string poly_text(const Poly& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

void emit_rows(std::ostream& out, Format f, const ordered_json& doc, const std::string& key,
               const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& table_rows) {
    switch (f) {
        case Format::Json: {
            ordered_json d = doc;
            ordered_json a = ordered_json::array();
            for (const auto& r : rows) a.push_back(r);
            d[key] = a;
            out << d.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            for (std::size_t n = 0; n < rows.size(); ++n) {
                std::vector<std::string> cells{std::to_string(n)};
                cells.insert(cells.end(), rows[n].begin(), rows[n].end());
                out << csv_line(cells) << "\n";
            }
            break;
        case Format::Table:
            for (std::size_t n = 0; n < table_rows.size(); ++n) out << n << "\t" << table_rows[n] << "\n";
            break;
    }
}

void emit_values(std::ostream& out, Format f, const ordered_json& doc, const std::string& key,
                 const std::vector<Rational>& values) {
    switch (f) {
        case Format::Json: {
            ordered_json d = doc;
            d[key] = rationals_json(values);
            out << d.dump(2) << "\n";
            break;
        }
        case Format::Csv: out << csv_line(strings_of(values)) << "\n"; break;
        case Format::Table:
            for (std::size_t n = 0; n < values.size(); ++n) out << n << "\t" << to_string(values[n]) << "\n";
            break;
    }
}

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw UsageError("unknown format '" + s + "' (expected table, csv or json)");
}

struct GenOpts {
    unsigned k = 1, m = 1;
    std::optional<unsigned> r;
    std::vector<std::string> alphas{"1"};
    std::string log_a = "0", log_b = "1", log_c = "1";
    std::size_t order = 10;
    std::string format = "table";
    bool numbers = false;
    std::optional<std::string> at;
};

struct VerifyOpts {
    std::string suite = "all";
    std::size_t order = 10;
    std::size_t samples = 3;
    std::uint64_t seed = 42;
    unsigned jobs = 1;
    std::string format = "table";
};

struct BasisOpts {
    std::string family = "stirling2";
    std::size_t n = 5;
    std::vector<std::string> nodes, alphas, betas;
    std::string alpha = "0", beta = "0";
    std::string format = "table";
};

struct BbhOpts {
    std::string x = "1", a = "1", b = "2";
    unsigned k = 1, m = 1;
    std::size_t order = 10;
    std::string factorial_mode = to_string(kDefaultFactorialMode);
    std::string format = "table";
};

FamilyParams gen_params(const GenOpts& o) {
    FamilyParams p;
    p.k = o.k;
    p.m = o.m;
    p.alphas = flag_rationals("alphas", o.alphas);
    if (o.r) {
        if (p.alphas.size() == 1 && *o.r != 1) p.alphas.assign(*o.r, p.alphas.front());
        if (p.alphas.size() != *o.r)
            throw UsageError("--r " + std::to_string(*o.r) + " does not match " + std::to_string(p.alphas.size()) +
                             " alphas");
    }
    p.log_a = flag_rational("log-a", o.log_a);
    p.log_b = flag_rational("log-b", o.log_b);
    p.log_c = flag_rational("log-c", o.log_c);
    if (p.m == 0) throw UsageError("--m must be at least 1");
    return p;
}

ordered_json params_json(const FamilyParams& p) {
    return {{"k", p.k},
            {"m", p.m},
            {"r", p.r()},
            {"alphas", rationals_json(p.alphas)},
            {"log_a", to_string(p.log_a)},
            {"log_b", to_string(p.log_b)},
            {"log_c", to_string(p.log_c)}};
}

int cmd_gen(const GenOpts& o, std::ostream& out, std::ostream& err) {
    const Format f = parse_format(o.format);
    const FamilyParams p = gen_params(o);
    for (const auto& w : p.warnings()) err << "warning: " << w << "\n";
    ordered_json doc{{"params", params_json(p)}, {"order", o.order}};

    if (o.numbers) {
        emit_values(out, f, doc, "numbers", family_numbers(p, o.order));
        return kExitOk;
    }
    const PolySequence seq = family_polynomials(p, o.order);
    if (o.at) {
        const Rational at = flag_rational("at", *o.at);
        std::vector<Rational> v;
        for (const Poly& q : seq.polys) v.push_back(q(at));
        doc["at"] = to_string(at);
        emit_values(out, f, doc, "values", v);
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> text;
    for (const Poly& q : seq.polys) {
        rows.push_back(poly_cells(q));
        text.push_back(poly_text(q));
    }
    emit_rows(out, f, doc, "polynomials", rows, text);
    return kExitOk;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
    const Format f = parse_format(o.format);
    SuiteConfig c;
    try {
        c.suite = parse_suite(o.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    c.order = o.order;
    c.samples = o.samples;
    c.seed = o.seed;
    c.jobs = o.jobs;
    const SuiteResult res = run_suite(c);
    const bool failed = std::any_of(res.reports.begin(), res.reports.end(),
                                    [](const IdentityReport& r) { return r.verdict == Verdict::Fail; });

    switch (f) {
        case Format::Json: {
            ordered_json reports = ordered_json::array();
            for (const auto& r : res.reports) reports.push_back(to_json(r));
            ordered_json doc{{"params",
                              {{"suite", to_string(c.suite)}, {"samples", c.samples}, {"seed", c.seed}}},
                             {"order", c.order},
                             {"reports", reports},
                             {"skipped", res.skipped}};
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << "id,sample,verdict,residual,params\n";
            for (const auto& r : res.reports)
                out << r.id.str() << "," << r.sample << "," << to_string(r.verdict) << ",\"" << describe(r.residual)
                    << "\",\"" << r.params << "\"\n";
            break;
        case Format::Table:
            for (const auto& r : res.reports) {
                out << r.id.str() << "\t#" << r.sample << "\t" << to_string(r.verdict) << "\t" << describe(r.residual)
                    << "\t" << r.params << "\n";
                for (const auto& n : r.notes) out << "\t\t" << n << "\n";
            }
            for (const auto& s : res.skipped) out << "skipped: " << s << "\n";
            out << res.reports.size() << " reports, "
                << std::count_if(res.reports.begin(), res.reports.end(),
                                 [](const IdentityReport& r) { return r.verdict == Verdict::Fail; })
                << " failed\n";
            break;
    }
    return failed ? kExitFailedCheck : kExitOk;
}

int cmd_basis(const BasisOpts& o, std::ostream& out) {
    const Format f = parse_format(o.format);
    ordered_json doc{{"params", {{"family", o.family}}}, {"order", o.n}};
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> text;

    const auto triangle = [&](const ConnectionMatrix& M) {
        for (std::size_t n = 0; n < M.rows(); ++n) {
            std::vector<std::string> row;
            for (std::size_t k = 0; k <= std::min(n, M.cols() - 1); ++k) row.push_back(to_string(M.at(n, k)));
            text.push_back(csv_line(row));
            rows.push_back(std::move(row));
        }
        emit_rows(out, f, doc, "rows", rows, text);
    };

    if (o.family == "stirling1" || o.family == "stirling2") {
        triangle(stirling_matrix(o.family == "stirling1" ? StirlingKind::First : StirlingKind::Second, o.n));
    } else if (o.family == "gen-stirling1" || o.family == "gen-stirling2") {
        const auto nodes = flag_rationals("nodes", o.nodes);
        if (nodes.size() < o.n) throw UsageError("--nodes needs at least --n values");
        doc["params"]["nodes"] = rationals_json(nodes);
        triangle(gen_stirling_matrix(o.family == "gen-stirling1" ? StirlingKind::First : StirlingKind::Second, nodes,
                                     o.n));
    } else if (o.family == "lah") {
        const auto a = flag_rationals("alphas", o.alphas);
        const auto b = flag_rationals("betas", o.betas);
        if (a.size() > o.n || b.size() < o.n) throw UsageError("lah needs |alphas| <= n <= |betas|");
        doc["params"]["alphas"] = rationals_json(a);
        doc["params"]["betas"] = rationals_json(b);
        triangle(gen_lah(a, b, o.n));
    } else if (o.family == "hermite" || o.family == "laguerre" || o.family == "jacobi") {
        OrthoFamily fam = OrthoFamily::hermite();
        if (o.family == "laguerre") {
            fam = OrthoFamily::laguerre(flag_rational("alpha", o.alpha));
            doc["params"]["alpha"] = to_string(fam.alpha);
        } else if (o.family == "jacobi") {
            fam = OrthoFamily::jacobi(flag_rational("alpha", o.alpha), flag_rational("beta", o.beta));
            doc["params"]["alpha"] = to_string(fam.alpha);
            doc["params"]["beta"] = to_string(fam.beta);
        }
        for (std::size_t j = 0; j <= o.n; ++j) {
            const Poly p = classical_orthopoly(fam, static_cast<long>(j));
            rows.push_back(poly_cells(p));
            text.push_back(poly_text(p));
        }
        emit_rows(out, f, doc, "polynomials", rows, text);
    } else {
        throw UsageError("unknown family '" + o.family +
                         "' (expected stirling1, stirling2, gen-stirling1, gen-stirling2, lah, hermite, laguerre, "
                         "jacobi)");
    }
    return kExitOk;
}

int cmd_bbh(const BbhOpts& o, std::ostream& out) {
    const Format f = parse_format(o.format);
    FactorialMode mode;
    if (o.factorial_mode == "mk-fact")
        mode = FactorialMode::MkFact;
    else if (o.factorial_mode == "m-times-kfact")
        mode = FactorialMode::MTimesKFact;
    else
        throw UsageError("unknown factorial mode '" + o.factorial_mode + "' (expected mk-fact or m-times-kfact)");
    const Rational x = flag_rational("x", o.x), a = flag_rational("a", o.a), b = flag_rational("b", o.b);
    ordered_json doc{{"params",
                      {{"x", to_string(x)},
                       {"a", to_string(a)},
                       {"b", to_string(b)},
                       {"k", o.k},
                       {"m", o.m},
                       {"factorial_mode", to_string(mode)}}},
                     {"order", o.order}};
    emit_values(out, f, doc, "values", bbh_basis(x, o.k, o.m, a, b, o.order, mode));
    return kExitOk;
}

void add_format(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format,--report", target, "Output format: table, csv or json")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generation and identity checks for the unified Apostol-type polynomial family", "apostol"};
    app.require_subcommand(1);

    GenOpts g;
    auto* gen = app.add_subcommand("gen", "Print M_0..M_N as polynomials in x, or the numbers M_n(0)");
    gen->add_option("--k", g.k, "Power of t per factor")->capture_default_str();
    gen->add_option("--m", g.m, "Truncation of the exponential in each factor (>= 1)")->capture_default_str();
    gen->add_option("--r", g.r, "Number of factors; a single alpha is repeated r times");
    gen->add_option("--alphas", g.alphas, "Comma-separated rationals")->delimiter(',')->capture_default_str();
    gen->add_option("--log-a", g.log_a, "ln a as a rational")->capture_default_str();
    gen->add_option("--log-b", g.log_b, "ln b as a rational")->capture_default_str();
    gen->add_option("--log-c", g.log_c, "ln c as a rational")->capture_default_str();
    gen->add_option("--order", g.order, "Highest index N")->capture_default_str();
    gen->add_flag("--numbers", g.numbers, "Print M_n(0) from the scalar engine");
    gen->add_option("--at", g.at, "Evaluate every polynomial at this rational");
    add_format(gen, g.format);

    VerifyOpts v;
    auto* verify = app.add_subcommand("verify", "Run the identity suite and report residuals");
    verify->add_option("--suite", v.suite, "all, structural, multiplication, connection, table1, lah or bbh")
        ->capture_default_str();
    verify->add_option("--order", v.order, "Truncation order N")->capture_default_str();
    verify->add_option("--samples", v.samples, "Parameter samples per identity")->capture_default_str();
    verify->add_option("--seed", v.seed, "Sampler seed")->capture_default_str();
    verify->add_option("--jobs", v.jobs, "Worker threads (output does not depend on it)")->capture_default_str();
    add_format(verify, v.format);

    BasisOpts bo;
    auto* basis = app.add_subcommand("basis", "Print connection triangles or orthogonal polynomial coefficients");
    basis->add_option("--family", bo.family,
                      "stirling1, stirling2, gen-stirling1, gen-stirling2, lah, hermite, laguerre, jacobi")
        ->capture_default_str();
    basis->add_option("--n", bo.n, "Largest index")->capture_default_str();
    basis->add_option("--nodes", bo.nodes, "Node sequence for gen-stirling*")->delimiter(',');
    basis->add_option("--alphas", bo.alphas, "Source nodes for lah")->delimiter(',');
    basis->add_option("--betas", bo.betas, "Target nodes for lah")->delimiter(',');
    basis->add_option("--alpha", bo.alpha, "Laguerre / Jacobi alpha")->capture_default_str();
    basis->add_option("--beta", bo.beta, "Jacobi beta")->capture_default_str();
    add_format(basis, bo.format);

    BbhOpts bb;
    auto* bbh = app.add_subcommand("bbh", "Print the unified BBH basis values p_0..p_N at x");
    bbh->add_option("--x", bb.x)->capture_default_str();
    bbh->add_option("--a", bb.a)->capture_default_str();
    bbh->add_option("--b", bb.b)->capture_default_str();
    bbh->add_option("--k", bb.k)->capture_default_str();
    bbh->add_option("--m", bb.m)->capture_default_str();
    bbh->add_option("--order", bb.order)->capture_default_str();
    bbh->add_option("--factorial-mode", bb.factorial_mode, "mk-fact or m-times-kfact")->capture_default_str();
    add_format(bbh, bb.format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(g, out, err);
        if (verify->parsed()) return cmd_verify(v, out);
        if (basis->parsed()) return cmd_basis(bo, out);
        return cmd_bbh(bb, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace apostol
