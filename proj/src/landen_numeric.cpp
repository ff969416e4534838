#include "quartic/landen_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quartic/polynomial.hpp"

namespace quartic {

namespace {

constexpr int kMaxIterations = 64;

/// Drops trailing noise-floor entries and anything past the first increase,
/// then estimates the order if enough of the trace survives.
std::optional<double> order_from_trace(const std::vector<double>& trace, double floor) {
    std::vector<double> kept;
    for (double e : trace) {
        if (e <= floor) break;
        if (!kept.empty() && e >= kept.back()) break;
        kept.push_back(e);
    }
    if (kept.size() < 4) return std::nullopt;
    return estimate_order(kept);
}

}  // namespace

double agm(double a, double b, double rel_tol) {
    return agm_iterate(a, b, rel_tol).final_value;
}

ConvergenceReport agm_iterate(double a, double b, double rel_tol) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("agm: arguments must be positive");
    ConvergenceReport report;
    report.error_trace.push_back(std::abs(a - b));
    while (std::abs(a - b) > rel_tol * std::max(a, b)) {
        if (report.iterations >= kMaxIterations) throw DivergenceError("agm did not converge");
        double mid = (a + b) / 2.0;
        b = std::sqrt(a * b);
        a = mid;
        ++report.iterations;
        report.error_trace.push_back(std::abs(a - b));
    }
    report.converged = true;
    report.final_value = (a + b) / 2.0;
    report.estimated_order = order_from_trace(report.error_trace, 8e-16 * std::max(a, 1.0));
    return report;
}

double elliptic_integral(double a, double b) {
    return std::numbers::pi / (2.0 * agm(a, b));
}

QuadraticState landen_step(const QuadraticState& s) {
    double delta = (3.0 * s.a + s.c) * (s.a + 3.0 * s.c) - s.b * s.b;
    if (delta == 0.0 || !std::isfinite(delta))
        throw SingularStepError("quadratic landen step: denominator vanishes");
    double an = s.a * ((s.a + 3.0 * s.c) * (s.a + 3.0 * s.c) - 3.0 * s.b * s.b) / delta;
    double bn = s.b * (3.0 * (s.a - s.c) * (s.a - s.c) - s.b * s.b) / delta;
    double cn = s.c * ((3.0 * s.a + s.c) * (3.0 * s.a + s.c) - 3.0 * s.b * s.b) / delta;
    return {an, bn, cn};
}

ConvergenceReport landen_iterate(QuadraticState s, double tol) {
    double disc = 4.0 * s.a * s.c - s.b * s.b;
    if (!(s.a > 0.0) || !(disc > 0.0))
        throw std::domain_error("quadratic landen iteration: need a > 0 and 4ac - b^2 > 0");
    double t = std::sqrt(disc) / 2.0;
    auto error = [&](const QuadraticState& q) {
        return std::max({std::abs(q.a - t), std::abs(q.b), std::abs(q.c - t)});
    };

    ConvergenceReport report;
    report.error_trace.push_back(error(s));
    while (report.error_trace.back() > tol) {
        if (report.iterations >= kMaxIterations)
            throw DivergenceError("quadratic landen iteration did not converge");
        s = landen_step(s);
        ++report.iterations;
        report.error_trace.push_back(error(s));
    }
    report.converged = true;
    report.final_value = std::numbers::pi / s.a;
    // The last genuine error of a cubically convergent run can sit barely
    // above machine precision; the floor only has to shave off roundoff.
    report.estimated_order = order_from_trace(report.error_trace, 8e-16 * std::max(1.0, t));
    return report;
}

SexticState landen_step(const SexticState& s, bool printed_d_map) {
    double sigma = s.a + s.b + 2.0;
    if (!(sigma > 0.0)) throw std::domain_error("sextic landen step: a + b + 2 must be positive");
    double lam = std::cbrt(sigma);
    double lam2 = lam * lam;
    double an = (s.a * s.b + 5.0 * s.a + 5.0 * s.b + 9.0) / (sigma * lam);
    double bn = (s.a + s.b + 6.0) / lam2;
    double cn = (s.c + s.d + s.e) / lam2;
    double b_shift = printed_d_map ? 2.0 : 3.0;
    double dn = (s.c * (s.b + b_shift) + 2.0 * s.d + s.e * (s.a + 3.0)) / sigma;
    double en = (s.c + s.e) / lam;
    return {an, bn, cn, dn, en};
}

namespace {

/// The sextic denominator is positive on the whole line exactly when
/// t^3 + a t^2 + b t + 1 has no root with t > 0; checked exactly.
bool sextic_denominator_positive(double a, double b) {
    Polynomial cubic{Rational(1), Rational::from_double(b), Rational::from_double(a), Rational(1)};
    return count_real_roots(cubic, Rational(0), std::nullopt) == 0;
}

}  // namespace

ConvergenceReport landen_iterate(SexticState s, double tol, bool printed_d_map) {
    if (!std::isfinite(s.a) || !std::isfinite(s.b))
        throw std::domain_error("sextic landen iteration: state must be finite");
    if (!sextic_denominator_positive(s.a, s.b))
        throw std::domain_error("sextic landen iteration: denominator must be positive on the real line");

    auto error = [](const SexticState& q) {
        return std::max(std::abs(q.a - 3.0), std::abs(q.b - 3.0));
    };

    ConvergenceReport report;
    report.error_trace.push_back(error(s));
    while (report.error_trace.back() > tol) {
        if (report.iterations >= kMaxIterations)
            throw DivergenceError("sextic landen iteration did not converge");
        s = landen_step(s, printed_d_map);
        ++report.iterations;
        report.error_trace.push_back(error(s));
    }
    // The numerator settles one step behind the denominator, so once a and b
    // are at tolerance two more steps bring c, d, e to their limit as well.
    for (int i = 0; i < 2; ++i) {
        s = landen_step(s, printed_d_map);
        ++report.iterations;
        report.error_trace.push_back(error(s));
    }
    report.converged = true;
    double mean = (s.c + s.d + s.e) / 4.0;
    report.final_value = std::numbers::pi / 2.0 * mean;
    // At the limit the numerator settles on c = e = mean, d = 2 mean; a
    // mismatch means the d update being used does not preserve the integral.
    double drift = std::max(std::abs(s.c - mean), std::abs(s.e - mean));
    if (drift > 100.0 * tol * std::max(1.0, std::abs(mean)))
        report.warnings.push_back("numerator limit is inconsistent with its invariant mean");
    report.estimated_order = order_from_trace(report.error_trace, 1e-14);
    return report;
}

double estimate_order(const std::vector<double>& errors) {
    if (errors.size() < 4)
        throw std::invalid_argument("estimate_order: need at least four errors");
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!(errors[i] > 0.0))
            throw std::invalid_argument("estimate_order: errors must be positive");
        if (i > 0 && !(errors[i] < errors[i - 1]))
            throw std::invalid_argument("estimate_order: errors must be strictly decreasing");
    }
    std::vector<double> x, y;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        x.push_back(std::log(errors[i]));
        y.push_back(std::log(errors[i + 1]));
    }
    double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace quartic
