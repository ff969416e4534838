#include "quartic/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "quartic/exact.hpp"
#include "quartic/landen_numeric.hpp"
#include "quartic/landen_symbolic.hpp"
#include "quartic/quadrature.hpp"

namespace quartic {

namespace {

const std::vector<Rational> kPhiGrid = {
    Rational(1),      Rational(-1),     Rational(2),     Rational(-2),    Rational(3),
    Rational(1, 2),   Rational(-1, 2),  Rational(3, 2),  Rational(-3, 2), Rational(2, 3),
    Rational(-2, 3),  Rational(5, 2),   Rational(-5, 3), Rational(7, 4),  Rational(-7, 5),
    Rational(9, 5),   Rational(-9, 7),  Rational(11, 4), Rational(4, 7),  Rational(-12, 5),
};

double uniform(std::mt19937& gen, double lo, double hi) {
    return lo + (hi - lo) * (gen() * (1.0 / 4294967296.0));
}

double rel_dev(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

double quartic_by_quadrature(double a, int m) {
    IntegrandSpec spec;
    spec.f = [a, m](double x) {
        double x2 = x * x;
        return std::pow(x2 * x2 + 2.0 * a * x2 + 1.0, -(m + 1));
    };
    spec.rel_tol = 1e-12;
    return integrate(spec).value;
}

double sextic_by_quadrature(const SexticState& s, double rel_tol) {
    IntegrandSpec spec;
    spec.f = [s](double x) {
        double x2 = x * x;
        return (s.c * x2 * x2 + s.d * x2 + s.e) / (((x2 + s.a) * x2 + s.b) * x2 + 1.0);
    };
    spec.rel_tol = rel_tol;
    return integrate(spec).value;
}

SexticState random_sextic_state(std::mt19937& gen) {
    // Positive a..e keeps the denominator positive and the numerator away
    // from cancellation.
    return {uniform(gen, 0.5, 6.0), uniform(gen, 0.5, 6.0), uniform(gen, 0.2, 3.0),
            uniform(gen, 0.2, 3.0), uniform(gen, 0.2, 3.0)};
}

CheckResult coefficients_match_oracle() {
    int mismatches = 0;
    for (int m = 0; m <= 8; ++m)
        for (int l = 0; l <= m; ++l)
            if (quartic_coefficient(m, l) != quartic_coefficient_oracle(m, l)) ++mismatches;
    return {"coefficients-match-oracle", mismatches == 0, double(mismatches)};
}

CheckResult shifted_basis_expansion() {
    int mismatches = 0;
    for (int m = 0; m <= 10; ++m)
        if (!(quartic_polynomial(m) == quartic_polynomial_shifted_basis(m))) ++mismatches;
    return {"shifted-basis-expansion", mismatches == 0, double(mismatches)};
}

CheckResult phi_identity_grid() {
    int mismatches = 0;
    for (int m = 0; m <= 12; ++m)
        for (const auto& phi : kPhiGrid)
            if (!check_phi_identity(m, phi)) ++mismatches;
    return {"phi-identity", mismatches == 0, double(mismatches)};
}

CheckResult recurrence_grid() {
    int mismatches = 0;
    for (int m = 0; m <= 12; ++m)
        for (const auto& phi : kPhiGrid)
            if (!check_recurrence(m, phi)) ++mismatches;
    return {"three-term-recurrence", mismatches == 0, double(mismatches)};
}

CheckResult binomial_identity_grid() {
    int mismatches = 0;
    for (int m = 0; m <= 20; ++m)
        for (int k = 0; k <= m; ++k)
            if (!check_binomial_identity(m, k)) ++mismatches;
    return {"binomial-product-identity", mismatches == 0, double(mismatches)};
}

CheckResult fibonacci_sum_grid() {
    const std::vector<Rational> zs = {Rational(-1, 4), Rational(1, 3), Rational(2), Rational(6),
                                      Rational(12),    Rational(3, 4)};
    int mismatches = 0;
    for (int n = 0; n <= 15; ++n)
        for (const auto& z : zs)
            if (!check_fibonacci_sum(n, z)) ++mismatches;
    return {"fibonacci-sum", mismatches == 0, double(mismatches)};
}

CheckResult coefficient_positivity() {
    int violations = 0;
    for (int m = 0; m <= 30; ++m)
        for (int l = 0; l <= m; ++l)
            if (quartic_coefficient(m, l).sign() <= 0) ++violations;
    return {"coefficient-positivity", violations == 0, double(violations)};
}

CheckResult four_route_agreement() {
    const double as[] = {0.1, 0.5, 1.0, 2.0, 10.0};
    double worst = 0.0;
    for (double a : as)
        for (int m = 0; m <= 8; ++m) {
            double ref = quartic_value(a, m);
            worst = std::max(worst, rel_dev(quartic_value_hypergeometric(a, m), ref));
            worst = std::max(worst, rel_dev(quartic_value_landen_route(a, m), ref));
            worst = std::max(worst, rel_dev(quartic_by_quadrature(a, m), ref));
        }
    return {"four-route-agreement", worst <= 1e-10, worst};
}

CheckResult vanishing_moments() {
    const double as[] = {0.5, 1.0, 2.0};
    double worst = 0.0;
    for (double a : as)
        for (int m = 1; m <= 3; ++m)
            for (int j = 1; j <= 2 * m + 1; j += 2)
                worst = std::max(worst, std::abs(vanishing_odd_moment(a, m, j)));
    return {"vanishing-odd-moments", worst <= 1e-10, worst};
}

CheckResult ramanujan_master() {
    double worst = 0.0;
    for (int m = 1; m <= 5; ++m)
        for (double a : {1.0, 2.0}) {
            auto [lhs, rhs] = ramanujan_master_pair(a, m);
            worst = std::max(worst, rel_dev(lhs, rhs));
        }
    return {"ramanujan-master", worst <= 1e-6, worst};
}

CheckResult sqrt_derivative() {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0})
        for (double c : {0.0, 0.1, 3.0}) {
            auto [lhs, rhs] = sqrt_derivative_pair(a, c);
            worst = std::max(worst, rel_dev(lhs, rhs));
        }
    return {"sqrt-quartic-derivative", worst <= 1e-9, worst};
}

CheckResult quadratic_cubic_convergence() {
    ConvergenceReport r = landen_iterate(QuadraticState{1.0, 1.0, 1.0});
    double ref = 2.0 * std::numbers::pi / std::sqrt(3.0);
    double dev = rel_dev(r.final_value, ref);
    bool order_ok = r.estimated_order && *r.estimated_order >= 2.7 && *r.estimated_order <= 3.3;
    return {"quadratic-cubic-convergence", r.converged && order_ok && dev <= 1e-12, dev};
}

CheckResult quadratic_invariant_value() {
    const QuadraticState states[] = {{5.0, 2.0, 1.0}, {2.0, 1.0, 3.0}, {1.0, 0.0, 1.0}};
    double worst = 0.0;
    for (const auto& s : states) {
        double ref = 2.0 * std::numbers::pi / std::sqrt(4.0 * s.a * s.c - s.b * s.b);
        worst = std::max(worst, rel_dev(landen_iterate(s).final_value, ref));
    }
    return {"quadratic-invariant-value", worst <= 1e-12, worst};
}

CheckResult agm_elliptic() {
    const double pairs[][2] = {{1.0, 2.0}, {1.0, 3.0}, {2.0, 5.0}};
    double worst = 0.0;
    for (const auto& p : pairs) {
        double a = p[0], b = p[1];
        IntegrandSpec spec;
        spec.f = [a, b](double t) {
            double ca = a * std::cos(t), sb = b * std::sin(t);
            return 1.0 / std::sqrt(ca * ca + sb * sb);
        };
        spec.domain = Finite{0.0, std::numbers::pi / 2.0};
        spec.rel_tol = 1e-13;
        worst = std::max(worst, rel_dev(elliptic_integral(a, b), integrate(spec).value));
    }
    return {"agm-elliptic-integral", worst <= 1e-10, worst};
}

CheckResult sextic_one_step_invariance() {
    std::mt19937 gen(12345);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        SexticState s = random_sextic_state(gen);
        double before = sextic_by_quadrature(s, 1e-12);
        double after = sextic_by_quadrature(landen_step(s), 1e-12);
        worst = std::max(worst, rel_dev(after, before));
    }
    return {"sextic-one-step-invariance", worst <= 1e-10, worst};
}

CheckResult sextic_iterate_value() {
    std::mt19937 gen(67890);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        SexticState s = random_sextic_state(gen);
        double ref = sextic_by_quadrature(s, 1e-12);
        worst = std::max(worst, rel_dev(landen_iterate(s).final_value, ref));
    }
    return {"sextic-iterate-value", worst <= 1e-8, worst};
}

CheckResult sextic_printed_map_differs() {
    SexticState fixed{3.0, 3.0, 1.0, 2.0, 1.0};
    SexticState corrected = landen_step(fixed);
    SexticState printed = landen_step(fixed, true);
    bool ok = corrected.d == 2.0 && printed.d == 15.0 / 8.0;
    return {"sextic-printed-d-map-breaks-fixed-point", ok, std::abs(printed.d - 2.0)};
}

CheckResult transform_matches_closed_form() {
    const Rational as[] = {Rational(1, 2), Rational(1), Rational(3)};
    int mismatches = 0;
    for (const auto& a : as)
        for (int m = 0; m <= 8; ++m)
            if (!(landen_transform(quartic_integrand(a, m)) == quartic_transformed(a, m)))
                ++mismatches;
    return {"transform-matches-closed-form", mismatches == 0, double(mismatches)};
}

CheckResult transform_reference_example() {
    RationalFunction f{Polynomial{Rational(1)}, Polynomial{Rational(1), Rational(0), Rational(1)}};
    bool ok = landen_transform(f) == f;
    return {"transform-fixed-point-example", ok, ok ? 0.0 : 1.0};
}

CheckResult transform_preserves_value() {
    // An even integrand and a non-even one, both checked through quadrature.
    RationalFunction even{Polynomial{Rational(2), Rational(0), Rational(1)},
                          Polynomial{Rational(4), Rational(0), Rational(5), Rational(0), Rational(1)}};
    RationalFunction skew{Polynomial{Rational(1)},
                          Polynomial{Rational(1), Rational(1), Rational(1)}};
    double worst = 0.0;
    for (const auto& [f, g] : {std::pair{even, landen_transform(even)},
                               std::pair{skew, landen_transform_general(skew)}}) {
        IntegrandSpec before, after;
        before.f = [&f](double x) { return f(x); };
        before.domain = WholeLine{};
        before.rel_tol = 1e-12;
        after.f = [&g](double y) { return g(y); };
        after.domain = WholeLine{};
        after.rel_tol = 1e-12;
        worst = std::max(worst, rel_dev(integrate(after).value, integrate(before).value));
    }
    return {"transform-preserves-value", worst <= 1e-10, worst};
}

CheckResult cotangent_multiples() {
    Polynomial x = Polynomial::variable();
    RationalFunction two{x * x - Polynomial{Rational(1)}, Rational(2) * x};
    RationalFunction three{x.pow(3) - Rational(3) * x, Rational(3) * (x * x) - Polynomial{Rational(1)}};
    bool ok = cot_multiple(2) == two && cot_multiple(3) == three;
    return {"cotangent-multiples", ok, ok ? 0.0 : 1.0};
}

std::vector<CheckResult> identities_suite() {
    return {coefficients_match_oracle(),
            shifted_basis_expansion(),
            phi_identity_grid(),
            recurrence_grid(),
            binomial_identity_grid(),
            fibonacci_sum_grid(),
            coefficient_positivity(),
            four_route_agreement(),
            vanishing_moments(),
            ramanujan_master(),
            sqrt_derivative()};
}

std::vector<CheckResult> convergence_suite() {
    return {quadratic_cubic_convergence(), quadratic_invariant_value(),   agm_elliptic(),
            sextic_one_step_invariance(),  sextic_iterate_value(),        sextic_printed_map_differs()};
}

std::vector<CheckResult> landen_symbolic_suite() {
    return {transform_matches_closed_form(), transform_reference_example(),
            transform_preserves_value(), cotangent_multiples()};
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"identities", "convergence", "landen-symbolic", "all"};
}

RunReport run_verify(const std::string& suite) {
    RunReport report;
    report.command = "verify";
    report.inputs.emplace_back("suite", suite);
    if (suite == "identities") {
        report.checks = identities_suite();
    } else if (suite == "convergence") {
        report.checks = convergence_suite();
    } else if (suite == "landen-symbolic") {
        report.checks = landen_symbolic_suite();
    } else if (suite == "all") {
        for (auto* suite_fn : {identities_suite, convergence_suite, landen_symbolic_suite}) {
            auto checks = suite_fn();
            report.checks.insert(report.checks.end(), checks.begin(), checks.end());
        }
    } else {
        throw std::invalid_argument("unknown verify suite: '" + suite + "'");
    }
    return report;
}

}  // namespace quartic
