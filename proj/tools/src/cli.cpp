#include "cli.hpp"

#include "output.hpp"

#include <mopoly/construct.hpp>
#include <mopoly/errors.hpp>
#include <mopoly/family.hpp>
#include <mopoly/limits.hpp>
#include <mopoly/quadrature.hpp>
#include <mopoly/recurrence.hpp>
#include <mopoly/spectra.hpp>
#include <mopoly/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mopoly::cli {

namespace {

constexpr const char* kSchema = "mopoly/1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecArgs {
    std::string family;
    std::optional<double> alpha0, a, alpha, beta, gamma;
    std::optional<std::vector<double>> alphas, cs;
    bool canonical = false;
};

struct CommonArgs {
    std::string format = "json";
    std::string out;
    std::optional<std::string> precision;
};

struct Result {
    Json json;
    Table table;
    int exit_code = kOk;
};

void add_spec_options(CLI::App* cmd, SpecArgs& s, bool canonical_flag) {
    cmd->add_option("family", s.family, "family token: jp ml1 ml2 mh ja jl lh")->required();
    cmd->add_option("--alpha0", s.alpha0, "shared exponent (jp: (1-x)^alpha0, ml2: x^alpha0)");
    cmd->add_option("--alphas", s.alphas, "per-weight exponents, comma separated (jp, ml1)")->delimiter(',');
    cmd->add_option("--cs", s.cs, "per-weight rates (ml2) or drifts (mh), comma separated")->delimiter(',');
    cmd->add_option("--a", s.a, "left endpoint a < 0 (ja, jl)");
    cmd->add_option("--alpha", s.alpha, "exponent at a (ja, jl)");
    cmd->add_option("--beta", s.beta, "exponent at 0 (ja, jl, lh)");
    cmd->add_option("--gamma", s.gamma, "exponent at 1 (ja)");
    if (canonical_flag) cmd->add_flag("--canonical", s.canonical, "use the built-in representative parameters");
}

void add_common_options(CLI::App* cmd, CommonArgs& c, bool precision) {
    cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", c.out, "write output to FILE instead of standard output");
    if (precision)
        cmd->add_option("--precision", c.precision, "double, extended or rational (env MOPOLY_PRECISION)");
}

ScalarKind resolve_precision(const CommonArgs& c, ScalarKind fallback) {
    std::string text;
    if (c.precision) text = *c.precision;
    else if (const char* env = std::getenv("MOPOLY_PRECISION"); env && *env) text = env;
    else return fallback;
    try {
        return parse_scalar_kind(text);
    } catch (const Error&) {
        throw UsageError("unknown precision '" + text + "'");
    }
}

FamilySpec build_spec(const SpecArgs& s) {
    FamilyKind kind;
    try {
        kind = parse_family(s.family);
    } catch (const Error&) {
        throw UsageError("unknown family '" + s.family + "'");
    }
    const std::string fam(token(kind));

    struct Flag {
        const char* name;
        bool given;
    };
    const std::vector<Flag> flags{{"alpha0", s.alpha0.has_value()}, {"alphas", s.alphas.has_value()},
                                  {"cs", s.cs.has_value()},         {"a", s.a.has_value()},
                                  {"alpha", s.alpha.has_value()},   {"beta", s.beta.has_value()},
                                  {"gamma", s.gamma.has_value()}};

    if (s.canonical) {
        for (const auto& f : flags)
            if (f.given) throw UsageError(std::string("--canonical cannot be combined with --") + f.name);
        for (const auto& [name, spec] : canonical_specs())
            if (name == fam) return spec;
    }

    std::vector<std::string> needed;
    switch (kind) {
        case FamilyKind::JP: needed = {"alpha0", "alphas"}; break;
        case FamilyKind::ML1: needed = {"alphas"}; break;
        case FamilyKind::ML2: needed = {"alpha0", "cs"}; break;
        case FamilyKind::MH: needed = {"cs"}; break;
        case FamilyKind::JA: needed = {"a", "alpha", "beta", "gamma"}; break;
        case FamilyKind::JL: needed = {"a", "alpha", "beta"}; break;
        case FamilyKind::LH: needed = {"beta"}; break;
    }
    for (const auto& f : flags) {
        const bool wanted = std::find(needed.begin(), needed.end(), f.name) != needed.end();
        if (f.given && !wanted) throw UsageError(std::string("--") + f.name + " is not a parameter of family " + fam);
        if (!f.given && wanted) throw UsageError("family " + fam + " needs --" + f.name);
    }

    FamilySpec spec;
    switch (kind) {
        case FamilyKind::JP: spec = JacobiPineiro{*s.alpha0, *s.alphas}; break;
        case FamilyKind::ML1: spec = MultipleLaguerreFirst{*s.alphas}; break;
        case FamilyKind::ML2: spec = MultipleLaguerreSecond{*s.alpha0, *s.cs}; break;
        case FamilyKind::MH: spec = MultipleHermite{*s.cs}; break;
        case FamilyKind::JA: spec = JacobiAngelesco{*s.a, *s.alpha, *s.beta, *s.gamma}; break;
        case FamilyKind::JL: spec = JacobiLaguerre{*s.a, *s.alpha, *s.beta}; break;
        case FamilyKind::LH: spec = LaguerreHermite{*s.beta}; break;
    }
    return validate(spec);
}

void require_two_weights(const FamilySpec& spec) {
    if (weight_count(spec) != 2)
        raise(ErrorCode::UnsupportedMultiplicity, "this command needs exactly two weights; use `oracle` for other r");
}

Json params_json(const FamilySpec& spec) {
    Json p = Json::object();
    for (const auto& np : parameters(spec)) {
        if (np.name == "alphas" || np.name == "cs") p[np.name] = np.values;
        else p[np.name] = np.values.front();
    }
    return p;
}

Json header(const std::string& command, const FamilySpec& spec) {
    Json j = Json::object();
    j["schema"] = kSchema;
    j["command"] = command;
    j["family"] = std::string(token(kind_of(spec)));
    j["params"] = params_json(spec);
    return j;
}

template <Scalar T>
Json doubles(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_double(x));
    return a;
}

std::string text(double v) { return number_text(v); }

// poly / oracle share one payload.
template <Scalar T>
Result polynomial_result(const std::string& command, const FamilySpec& spec, ScalarKind prec, const std::string& method,
                         const MultiIndex& index, const MonicPolynomial<T>& p) {
    Result r;
    r.json = header(command, spec);
    r.json["precision"] = std::string(to_string(prec));
    r.json["method"] = method;
    r.json["index"] = index.entries();
    r.json["degree"] = p.degree();
    r.json["coeffs"] = doubles(p.coeffs());
    Json exact = Json::array();
    for (const auto& c : p.coeffs()) exact.push_back(format_scalar(c));
    r.json["coeffs_text"] = exact;
    r.table.header = {"k", "coeff"};
    for (int k = 0; k <= p.degree(); ++k) r.table.rows.push_back({std::to_string(k), format_scalar(p.coeffs()[k])});
    return r;
}

Result oracle_result(const std::string& command, const FamilySpec& spec, ScalarKind prec, const MultiIndex& index) {
    if (index.r() != weight_count(spec))
        throw UsageError("index has " + std::to_string(index.r()) + " entries but the family has " +
                         std::to_string(weight_count(spec)) + " weights");
    switch (prec) {
        case ScalarKind::Double:
            return polynomial_result(command, spec, prec, "oracle", index, oracle_polynomial<double>(spec, index));
        case ScalarKind::Extended:
            return polynomial_result(command, spec, prec, "oracle", index, oracle_polynomial_best(spec, index));
        case ScalarKind::Rational:
            if (!has_rational_moments(spec))
                throw UsageError("rational precision needs rational moments (jp, ml1, ml2, mh)");
            return polynomial_result(command, spec, prec, "oracle", index, oracle_polynomial<Rational>(spec, index));
    }
    return {};
}

MultiIndex parse_index(const std::vector<int>& entries) {
    for (int e : entries)
        if (e < 0) throw UsageError("index entries must be nonnegative");
    if (entries.empty()) throw UsageError("index needs at least one entry");
    return MultiIndex(entries);
}

Result cmd_coeffs(const FamilySpec& spec, ScalarKind prec, int N) {
    require_two_weights(spec);
    if (N < 1) throw UsageError("-N must be at least 1");
    Result r;
    r.json = header("coeffs", spec);
    r.json["precision"] = std::string(to_string(prec));
    auto fill = [&](const auto& rec) {
        std::vector<int> n;
        for (int k = 0; k < N; ++k) n.push_back(k);
        r.json["n"] = n;
        r.json["b"] = doubles(rec.b);
        r.json["c"] = doubles(rec.c);
        r.json["d"] = doubles(rec.d);
        r.table.header = {"n", "b", "c", "d"};
        for (int k = 0; k < N; ++k)
            r.table.rows.push_back({std::to_string(k), format_scalar(rec.b[k]), format_scalar(rec.c[k]),
                                    format_scalar(rec.d[k])});
    };
    if (prec == ScalarKind::Double) fill(stepline_recurrence<double>(spec, N));
    else if (prec == ScalarKind::Extended) fill(stepline_recurrence<Extended>(spec, N));
    else throw UsageError("coeffs supports double and extended precision");
    return r;
}

Result cmd_poly(const FamilySpec& spec, ScalarKind prec, std::optional<int> N, const std::optional<std::vector<int>>& idx,
                const std::optional<std::string>& method_text) {
    if (N.has_value() == idx.has_value()) throw UsageError("poly needs exactly one of -N or --index");
    if (idx) {
        if (method_text && *method_text != "oracle")
            throw UsageError("--index is constructed by the oracle; use -N for stepline constructions");
        return oracle_result("poly", spec, prec, parse_index(*idx));
    }
    require_two_weights(spec);
    if (*N < 0) throw UsageError("-N must be nonnegative");
    Method method = Method::Recurrence;
    if (method_text) {
        try {
            method = parse_method(*method_text);
        } catch (const Error&) {
            throw UsageError("unknown method '" + *method_text + "'");
        }
    }
    const MultiIndex index = MultiIndex::stepline(2, *N);
    const std::string mname(to_string(method));
    switch (prec) {
        case ScalarKind::Double:
            return polynomial_result("poly", spec, prec, mname, index, stepline_polynomial<double>(spec, *N, method));
        case ScalarKind::Extended:
            return polynomial_result("poly", spec, prec, mname, index, stepline_polynomial<Extended>(spec, *N, method));
        case ScalarKind::Rational:
            if (method != Method::Oracle) throw UsageError("rational precision is available with --method oracle");
            return oracle_result("poly", spec, prec, index);
    }
    return {};
}

Result cmd_zeros(const FamilySpec& spec, int N) {
    require_two_weights(spec);
    const auto z = zero_location_check(spec, N);
    Result r;
    r.json = header("zeros", spec);
    r.json["N"] = N;
    r.json["zeros"] = z.report.zeros;
    r.json["counts"] = z.report.per_interval_counts;
    r.json["expected"] = z.expected;
    r.json["outside"] = z.report.outside;
    r.json["max_imag"] = z.report.max_imag_discarded;
    r.json["residuals"] = z.report.residuals;
    r.json["boundary_zeros"] = z.report.boundary_zeros;
    r.json["bracketed"] = z.report.bracketed;
    r.json["passed"] = z.passed;
    r.table.header = {"i", "zero", "residual"};
    for (std::size_t i = 0; i < z.report.zeros.size(); ++i)
        r.table.rows.push_back({std::to_string(i), text(z.report.zeros[i]), text(z.report.residuals[i])});
    return r;
}

Result cmd_verify(const FamilySpec& spec, ScalarKind prec, int N) {
    const auto rep = verify(spec, N, prec);
    Result r;
    r.json = header("verify", spec);
    r.json["precision"] = std::string(to_string(prec));
    r.json["max_degree"] = N;
    r.json["passed"] = rep.passed();
    Json checks = Json::array();
    r.table.header = {"check", "worst", "threshold", "passed", "cases", "skipped", "note"};
    for (const auto& c : rep.checks) {
        Json cj = Json::object();
        cj["name"] = c.name;
        cj["worst"] = c.worst;
        cj["threshold"] = c.threshold;
        cj["passed"] = c.passed;
        cj["cases"] = c.cases;
        cj["skipped"] = c.skipped;
        cj["note"] = c.note;
        checks.push_back(cj);
        r.table.rows.push_back({c.name, text(c.worst), text(c.threshold), c.passed ? "true" : "false",
                                std::to_string(c.cases), std::to_string(c.skipped), c.note});
    }
    r.json["checks"] = checks;
    r.exit_code = rep.passed() ? kOk : kVerifyFailed;
    return r;
}

template <Floating T>
Result quad_result(const FamilySpec& spec, ScalarKind prec, const std::string& kind, const std::vector<int>& index,
                   const QuadratureRule<T>& rule) {
    Result r;
    r.json = header("quad", spec);
    r.json["precision"] = std::string(to_string(prec));
    r.json["rule"] = kind;
    r.json["index"] = index;
    r.json["nodes"] = doubles(rule.nodes);
    Json w = Json::array();
    for (const auto& v : rule.weights) w.push_back(doubles(v));
    r.json["weights"] = w;
    r.json["exactness"] = rule.exactness;
    r.table.header = {"node"};
    for (std::size_t j = 0; j < rule.weights.size(); ++j) r.table.header.push_back("w" + std::to_string(j));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        std::vector<std::string> row{format_scalar(rule.nodes[i])};
        for (const auto& v : rule.weights) row.push_back(format_scalar(v[i]));
        r.table.rows.push_back(row);
    }
    return r;
}

Result cmd_quad(const FamilySpec& spec, ScalarKind prec, const std::optional<std::vector<int>>& idx,
                std::optional<int> weight, std::optional<int> N) {
    if (prec == ScalarKind::Rational) throw UsageError("quad supports double and extended precision");
    if (idx.has_value() == weight.has_value()) throw UsageError("quad needs exactly one of --index or --weight");
    if (idx) {
        if (N) throw UsageError("-N is not used with --index");
        const MultiIndex index = parse_index(*idx);
        if (index.r() != weight_count(spec)) throw UsageError("index length does not match the number of weights");
        if (prec == ScalarKind::Double)
            return quad_result(spec, prec, "simultaneous", *idx, simultaneous_rule<double>(spec, index));
        return quad_result(spec, prec, "simultaneous", *idx, simultaneous_rule<Extended>(spec, index));
    }
    if (!N || *N < 1) throw UsageError("--weight needs -N >= 1 nodes");
    const auto ws = family_weights(spec);
    if (*weight < 0 || *weight >= static_cast<int>(ws.size())) throw UsageError("--weight out of range");
    const auto& w = ws[static_cast<std::size_t>(*weight)];
    if (prec == ScalarKind::Double) return quad_result(spec, prec, "gauss", {*N}, gauss_rule<double>(w, *N));
    return quad_result(spec, prec, "gauss", {*N}, gauss_rule<Extended>(w, *N));
}

Result cmd_limits(const std::string& kind_text, const std::vector<double>& scales, int degree) {
    LimitKind kind;
    try {
        kind = parse_limit_kind(kind_text);
    } catch (const Error&) {
        throw UsageError("unknown limit kind '" + kind_text + "'");
    }
    for (double s : scales)
        if (!(s > 0)) throw UsageError("scales must be positive");
    const auto target = default_limit_target(kind);
    const auto rows = limit_table(target, scales, degree);
    Result r;
    r.json = Json::object();
    r.json["schema"] = kSchema;
    r.json["command"] = "limits";
    r.json["kind"] = std::string(to_string(kind));
    r.json["degree"] = degree;
    r.json["rate"] = is_sqrt_route(kind) ? "1/sqrt(scale)" : "1/scale";
    Json t = Json::object();
    const bool classical =
        kind == LimitKind::JacobiToLaguerre || kind == LimitKind::JacobiToHermite || kind == LimitKind::LaguerreToHermite;
    if (classical) {
        t["beta"] = target.beta;
    } else {
        t["family"] = std::string(token(kind_of(target.target)));
        t["params"] = params_json(target.target);
    }
    r.json["target"] = t;
    std::vector<double> s, d;
    r.table.header = {"scale", "deviation"};
    for (const auto& row : rows) {
        s.push_back(row.scale);
        d.push_back(row.deviation);
        r.table.rows.push_back({text(row.scale), text(row.deviation)});
    }
    r.json["scales"] = s;
    r.json["deviations"] = d;
    return r;
}

Result cmd_asymptotics(const FamilySpec& spec, int N) {
    require_two_weights(spec);
    if (N < 10) throw UsageError("-N must be at least 10");
    const auto lim = asymptotic_coeffs(spec);
    const auto rec = stepline_recurrence<double>(spec, N + 2);
    Result r;
    r.json = header("asymptotics", spec);
    Json powers = Json::object();
    powers["b"] = lim.b_power;
    powers["c"] = lim.c_power;
    powers["d"] = lim.d_power;
    r.json["powers"] = powers;
    Json l = Json::object();
    l["b_even"] = lim.b_even;
    l["b_odd"] = lim.b_odd;
    l["c_even"] = lim.c_even;
    l["c_odd"] = lim.c_odd;
    l["d_even"] = lim.d_even;
    l["d_odd"] = lim.d_odd;
    r.json["limits"] = l;
    if (lim.x1) r.json["x1"] = *lim.x1;
    if (lim.x2) r.json["x2"] = *lim.x2;

    std::vector<int> ns;
    for (int base : {10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000})
        if (base <= N) {
            ns.push_back(base);
            ns.push_back(base + 1);
        }
    std::vector<double> b, c, d;
    r.table.header = {"n", "b", "c", "d"};
    for (int n : ns) {
        const double x = n;
        b.push_back(rec.b[n] / std::pow(x, lim.b_power));
        c.push_back(rec.c[n] / std::pow(x, lim.c_power));
        d.push_back(rec.d[n] / std::pow(x, lim.d_power));
        r.table.rows.push_back({std::to_string(n), text(b.back()), text(c.back()), text(d.back())});
    }
    Json t = Json::object();
    t["n"] = ns;
    t["b"] = b;
    t["c"] = c;
    t["d"] = d;
    r.json["table"] = t;
    return r;
}

int exit_for(const Error& e) {
    switch (e.category()) {
        case ErrorCategory::Validation: return kValidation;
        case ErrorCategory::Numerical: return kNumerical;
        case ErrorCategory::Usage: return kUsage;
    }
    return kNumerical;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiple orthogonal polynomials: recurrences, constructions, zeros and quadrature.\n"
                 "Stepline convention: P_{2n} = P_{n,n}, P_{2n+1} = P_{n+1,n}.\n"
                 "Exit codes: 0 ok, 1 invalid parameters, 2 verification failed, 3 numerical failure, 64 usage.",
                 "mopoly"};
    app.require_subcommand(1);

    SpecArgs spec_args;
    CommonArgs common;
    std::optional<int> N;
    std::optional<std::vector<int>> index;
    std::optional<std::string> method;
    std::optional<int> weight;
    std::string limit_kind;
    std::vector<double> scales{1e3, 1e4, 1e5, 1e6};

    auto* coeffs = app.add_subcommand("coeffs", "stepline recurrence coefficients b_n, c_n, d_n for n < N");
    add_spec_options(coeffs, spec_args, true);
    add_common_options(coeffs, common, true);
    coeffs->add_option("-N", N, "number of rows (default 10)");

    auto* poly = app.add_subcommand("poly", "monic coefficients of a stepline degree (-N) or multi-index (--index)");
    add_spec_options(poly, spec_args, true);
    add_common_options(poly, common, true);
    poly->add_option("-N", N, "stepline degree");
    poly->add_option("--index", index, "multi-index, comma separated")->delimiter(',');
    poly->add_option("--method", method, "recurrence, explicit or oracle");

    auto* zeros_cmd = app.add_subcommand("zeros", "zeros of P_N as Hessenberg eigenvalues");
    add_spec_options(zeros_cmd, spec_args, true);
    add_common_options(zeros_cmd, common, false);
    zeros_cmd->add_option("-N", N, "stepline degree")->required();

    auto* verify_cmd = app.add_subcommand("verify", "cross-construction, orthogonality, raising and zero checks");
    add_spec_options(verify_cmd, spec_args, true);
    add_common_options(verify_cmd, common, true);
    verify_cmd->add_option("-N", N, "largest stepline degree (default 12)");

    auto* oracle = app.add_subcommand("oracle", "moment-system polynomial for any multi-index and any r");
    add_spec_options(oracle, spec_args, true);
    add_common_options(oracle, common, true);
    oracle->add_option("--index", index, "multi-index, comma separated")->delimiter(',')->required();

    auto* quad = app.add_subcommand("quad", "simultaneous (--index) or plain Gauss (--weight, -N) rule");
    add_spec_options(quad, spec_args, true);
    add_common_options(quad, common, true);
    quad->add_option("--index", index, "multi-index, comma separated")->delimiter(',');
    quad->add_option("--weight", weight, "0-based weight for a plain Gauss rule");
    quad->add_option("-N", N, "node count for --weight");

    auto* limits = app.add_subcommand("limits", "deviation of a limit transition against the scale parameter");
    std::string kinds;
    for (auto k : all_limit_kinds()) kinds += std::string(kinds.empty() ? "" : " ") + std::string(to_string(k));
    limits->add_option("kind", limit_kind, kinds)->required();
    limits->add_option("--scales", scales, "scale values, comma separated")->delimiter(',');
    limits->add_option("-N", N, "total degree (default 2)");
    add_common_options(limits, common, false);

    auto* asym = app.add_subcommand("asymptotics", "closed-form n -> infinity limits and a convergence table");
    add_spec_options(asym, spec_args, true);
    add_common_options(asym, common, false);
    asym->add_option("-N", N, "largest n in the table (default 500)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Result res;
        if (limits->parsed()) {
            res = cmd_limits(limit_kind, scales, N.value_or(2));
        } else {
            const FamilySpec spec = build_spec(spec_args);
            if (coeffs->parsed()) res = cmd_coeffs(spec, resolve_precision(common, ScalarKind::Double), N.value_or(10));
            else if (poly->parsed())
                res = cmd_poly(spec, resolve_precision(common, ScalarKind::Extended), N, index, method);
            else if (zeros_cmd->parsed()) res = cmd_zeros(spec, *N);
            else if (verify_cmd->parsed())
                res = cmd_verify(spec, resolve_precision(common, ScalarKind::Extended), N.value_or(12));
            else if (oracle->parsed())
                res = oracle_result("oracle", spec, resolve_precision(common, ScalarKind::Extended), parse_index(*index));
            else if (quad->parsed())
                res = cmd_quad(spec, resolve_precision(common, ScalarKind::Double), index, weight, N);
            else if (asym->parsed()) res = cmd_asymptotics(spec, N.value_or(500));
        }

        std::ostringstream payload;
        if (common.format == "csv") write_csv(payload, res.table);
        else write_json(payload, res.json);
        if (common.out.empty()) {
            out << payload.str();
        } else {
            std::ofstream f(common.out, std::ios::binary);
            if (!f) throw UsageError("cannot open " + common.out);
            f << payload.str();
        }
        return res.exit_code;
    } catch (const UsageError& e) {
        err << "mopoly: usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "mopoly: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        err << "mopoly: error: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace mopoly::cli
