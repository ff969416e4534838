#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "quartic/exact.hpp"
#include "quartic/landen_numeric.hpp"
#include "quartic/landen_symbolic.hpp"
#include "quartic/quadrature.hpp"
#include "quartic/report.hpp"
#include "quartic/verify.hpp"

namespace quartic::cli {

namespace {

struct OutputOptions {
    std::string format = "text";
    bool no_timestamp = false;
    bool decimal = false;
};

void add_output_options(CLI::App* sub, OutputOptions& opts) {
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_flag("--no-timestamp", opts.no_timestamp,
                  "Omit the timestamp from json and csv output");
    sub->add_flag("--float", opts.decimal, "Render table entries and values as decimals");
}

void render_text(const RunReport& r, std::ostream& out) {
    out << r.command;
    bool first = true;
    for (const auto& [k, v] : r.inputs) {
        out << (first ? ": " : ", ") << k << " = " << v;
        first = false;
    }
    out << "\n";
    if (r.table) {
        std::size_t m = 0;
        for (const auto& row : *r.table) {
            out << "m " << m++ << ":";
            for (const auto& cell : row) out << " " << cell;
            out << "\n";
        }
    }
    if (r.value_exact) out << "exact: " << *r.value_exact << "\n";
    if (r.value_real) out << "value: " << format_double(*r.value_real) << "\n";
    if (r.coefficients) {
        out << "coefficients:";
        for (const auto& c : *r.coefficients) out << " " << c;
        out << "\n";
    }
    for (const auto& [k, v] : r.metrics) out << k << ": " << format_double(v) << "\n";
    if (r.trace) {
        out << "error trace:";
        for (double e : *r.trace) out << " " << format_double(e);
        out << "\n";
    }
    for (const auto& n : r.notes) out << n << "\n";
    if (!r.checks.empty()) {
        int passed = 0;
        for (const auto& c : r.checks) {
            out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (residual "
                << format_double(c.residual) << ")\n";
            if (c.passed) ++passed;
        }
        out << "checks: " << passed << "/" << r.checks.size() << " passed\n";
    }
}

void emit(RunReport report, const OutputOptions& opts, std::ostream& out) {
    if (!opts.no_timestamp && opts.format != "text")
        report.timestamp = current_timestamp_utc();
    if (opts.format == "json") {
        out << to_json(report).dump(2) << "\n";
    } else if (opts.format == "csv") {
        out << to_csv(report);
    } else {
        render_text(report, out);
    }
}

double quartic_by_quadrature(double a, int m) {
    IntegrandSpec spec;
    spec.f = [a, m](double x) {
        double x2 = x * x;
        return std::pow(x2 * x2 + 2.0 * a * x2 + 1.0, -(m + 1));
    };
    spec.rel_tol = 1e-12;
    return integrate(spec).value;
}

RunReport make_quartic_report(const std::string& a_str, int m, const std::string& method,
                              double tol, bool decimal) {
    Rational a = Rational::from_string(a_str);
    double ad = a.to_double();
    RunReport rep;
    rep.command = "quartic";
    rep.inputs = {{"a", a.to_string()}, {"m", std::to_string(m)}, {"method", method}};
    auto value_of = [&](const std::string& name) {
        if (name == "closed") return quartic_value(ad, m);
        if (name == "hypergeometric") return quartic_value_hypergeometric(ad, m);
        if (name == "landen") return quartic_value_landen_route(ad, m);
        return quartic_by_quadrature(ad, m);
    };
    if (method == "all") {
        double closed = quartic_value(ad, m);
        rep.value_real = closed;
        rep.inputs.emplace_back("tol", format_double(tol));
        for (const char* name : {"hypergeometric", "landen", "quadrature"}) {
            double res = std::abs(value_of(name) - closed) / std::abs(closed);
            rep.checks.push_back({std::string(name) + "-agrees-with-closed", res <= tol, res});
        }
    } else {
        rep.value_real = value_of(method);
    }
    if (!decimal)
        if (auto exact = quartic_value_exact(a, m)) rep.value_exact = exact->to_string();
    Polynomial p = quartic_polynomial(m);
    std::vector<std::string> coeffs;
    for (const auto& c : p.coeffs())
        coeffs.push_back(decimal ? format_double(c.to_double()) : c.to_string());
    rep.coefficients = std::move(coeffs);
    return rep;
}

RunReport make_table_report(int m_max, bool decimal) {
    RunReport rep;
    rep.command = "table";
    rep.inputs = {{"m", std::to_string(m_max)}};
    std::vector<std::vector<std::string>> rows;
    for (int m = 0; m <= m_max; ++m) {
        std::vector<std::string> row;
        for (int l = 0; l <= m; ++l) {
            Rational d = quartic_coefficient(m, l);
            row.push_back(decimal ? format_double(d.to_double()) : d.to_string());
        }
        rows.push_back(std::move(row));
    }
    rep.table = std::move(rows);
    return rep;
}

RunReport make_landen_report(const std::string& variant, const std::vector<double>& params,
                             double tol, bool printed) {
    RunReport rep;
    rep.command = "landen";
    rep.inputs.emplace_back("variant", variant);
    std::ostringstream state;
    for (std::size_t i = 0; i < params.size(); ++i)
        state << (i ? " " : "") << format_double(params[i]);
    rep.inputs.emplace_back("state", state.str());
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("landen " + variant + ": expected " + std::to_string(n) +
                                        " parameters, got " + std::to_string(params.size()));
    };
    if (variant == "elliptic") {
        need(2);
        rep.value_real = elliptic_integral(params[0], params[1]);
        return rep;
    }
    rep.inputs.emplace_back("tol", format_double(tol));
    ConvergenceReport conv;
    if (variant == "agm") {
        need(2);
        conv = agm_iterate(params[0], params[1], tol);
    } else if (variant == "quadratic") {
        need(3);
        conv = landen_iterate(QuadraticState{params[0], params[1], params[2]}, tol);
    } else {
        need(5);
        if (printed) rep.inputs.emplace_back("d-map", "printed");
        conv = landen_iterate(SexticState{params[0], params[1], params[2], params[3], params[4]},
                              tol, printed);
    }
    rep.value_real = conv.final_value;
    rep.trace = conv.error_trace;
    rep.metrics.emplace_back("iterations", double(conv.iterations));
    if (conv.estimated_order) rep.metrics.emplace_back("estimated-order", *conv.estimated_order);
    rep.checks.push_back({"converged", conv.converged, conv.error_trace.back()});
    for (const auto& w : conv.warnings) rep.notes.push_back("warning: " + w);
    return rep;
}

Polynomial parse_polynomial(const std::string& list) {
    std::vector<Rational> coeffs;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto lo = item.find_first_not_of(" \t");
        auto hi = item.find_last_not_of(" \t");
        if (lo == std::string::npos) throw std::invalid_argument("empty coefficient");
        coeffs.push_back(Rational::from_string(item.substr(lo, hi - lo + 1)));
    }
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    return Polynomial(std::move(coeffs));
}

RunReport make_transform_report(const std::optional<std::string>& a_str, std::optional<int> m,
                                const std::optional<std::string>& num,
                                const std::optional<std::string>& den, bool general) {
    RunReport rep;
    rep.command = "transform";
    RationalFunction f;
    std::optional<RationalFunction> closed;
    if (a_str && m) {
        Rational a = Rational::from_string(*a_str);
        f = quartic_integrand(a, *m);
        closed = quartic_transformed(a, *m);
        rep.inputs = {{"a", a.to_string()}, {"m", std::to_string(*m)}};
    } else if (num && den && !a_str && !m) {
        f = RationalFunction(parse_polynomial(*num), parse_polynomial(*den));
        rep.inputs = {{"f", f.to_string()}};
    } else {
        throw std::invalid_argument("transform needs either --a and --m, or --num and --den");
    }
    if (general) rep.inputs.emplace_back("map", "general");
    RationalFunction g = general ? landen_transform_general(f) : landen_transform(f);
    FunctionPayload payload;
    for (int i = 0; i <= g.num().degree(); ++i)
        payload.numerator.push_back(g.num().coeff(i).to_string());
    for (int i = 0; i <= g.den().degree(); ++i)
        payload.denominator.push_back(g.den().coeff(i).to_string());
    rep.function = std::move(payload);
    rep.notes.push_back("g(y) = " + g.to_string("y"));
    if (closed) {
        bool ok = g == *closed;
        rep.checks.push_back({"matches-closed-form", ok, ok ? 0.0 : 1.0});
    }
    return rep;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numeric tools for symmetric quartic integrals and their Landen transformations",
                 "quartic"};
    app.require_subcommand(1);

    OutputOptions opts;

    std::string q_a;
    int q_m = 0;
    std::string q_method = "closed";
    double q_tol = 1e-10;
    auto* q = app.add_subcommand("quartic", "Evaluate the quartic integral");
    q->add_option("--a", q_a, "Coefficient a, as a rational like 3/2 or a decimal")->required();
    q->add_option("--m", q_m, "Exponent m")->required()->check(CLI::NonNegativeNumber);
    q->add_option("--method", q_method, "Evaluation route: closed, hypergeometric, landen, quadrature or all")
        ->check(CLI::IsMember({"closed", "hypergeometric", "landen", "quadrature", "all"}))
        ->capture_default_str();
    q->add_option("--tol", q_tol, "Agreement tolerance for --method all")->capture_default_str();
    add_output_options(q, opts);

    int t_m = 5;
    auto* t = app.add_subcommand("table", "Print the closed-form coefficient table");
    t->add_option("--m", t_m, "Largest row")->required()->check(CLI::NonNegativeNumber);
    add_output_options(t, opts);

    std::string l_variant;
    std::vector<double> l_params;
    double l_tol = 1e-12;
    bool l_printed = false;
    auto* l = app.add_subcommand("landen", "Run a numeric Landen iteration");
    l->add_option("variant", l_variant, "quadratic, sextic, agm or elliptic")
        ->required()
        ->check(CLI::IsMember({"quadratic", "sextic", "agm", "elliptic"}));
    l->add_option("params", l_params, "State parameters")->required()->expected(-1);
    l->add_option("--tol", l_tol, "Stopping tolerance")->capture_default_str();
    l->add_flag("--printed-d-map", l_printed,
                "Use the published d update instead of the corrected one");
    add_output_options(l, opts);

    std::string v_suite = "all";
    auto* v = app.add_subcommand("verify", "Run self-check suites");
    v->add_option("suite", v_suite, "identities, convergence, landen-symbolic or all")
        ->check(CLI::IsMember(verify_suite_names()));
    add_output_options(v, opts);

    std::string x_a, x_num, x_den;
    int x_m = 0;
    bool x_general = false;
    auto* x = app.add_subcommand("transform", "Apply the symbolic Landen transformation");
    x->add_option("--a", x_a, "Quartic integrand coefficient a");
    x->add_option("--m", x_m, "Quartic integrand exponent m")->check(CLI::NonNegativeNumber);
    x->add_option("--num", x_num, "Numerator coefficients, constant first, comma separated");
    x->add_option("--den", x_den, "Denominator coefficients, constant first, comma separated");
    x->add_flag("--general", x_general, "Allow integrands that are not even");
    add_output_options(x, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        RunReport report;
        if (*q) {
            report = make_quartic_report(q_a, q_m, q_method, q_tol, opts.decimal);
        } else if (*t) {
            report = make_table_report(t_m, opts.decimal);
        } else if (*l) {
            report = make_landen_report(l_variant, l_params, l_tol, l_printed);
        } else if (*v) {
            report = run_verify(v_suite);
        } else {
            auto given = [&](const char* name) { return x->count(name) > 0; };
            report = make_transform_report(
                given("--a") ? std::optional(x_a) : std::nullopt,
                given("--m") ? std::optional(x_m) : std::nullopt,
                given("--num") ? std::optional(x_num) : std::nullopt,
                given("--den") ? std::optional(x_den) : std::nullopt, x_general);
        }
        emit(report, opts, out);
        return report.all_passed() ? 0 : 1;
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const AccuracyError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const SingularStepError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace quartic::cli
