#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quartic {

/// A step of an iteration hit a vanishing denominator.
struct SingularStepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iteration failed to meet its tolerance within the step cap.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceReport {
    int iterations = 0;
    std::vector<double> error_trace;  // one entry per state, starting with the input
    std::optional<double> estimated_order;
    double final_value = 0.0;
    bool converged = false;
    std::vector<std::string> warnings;
};

/// Arithmetic-geometric mean of two positive numbers.
double agm(double a, double b, double rel_tol = 1e-15);

/// agm with the full iteration history; the error entries are |a - b|.
ConvergenceReport agm_iterate(double a, double b, double rel_tol = 1e-15);

/// integral over [0, pi/2] of dt / sqrt(a^2 cos^2 t + b^2 sin^2 t)
///   = pi / (2 agm(a, b)).
double elliptic_integral(double a, double b);

/// Coefficients of 1 / (a x^2 + b x + c) with a > 0 and 4ac - b^2 > 0.
struct QuadraticState {
    double a, b, c;
};

/// One step of the cubically convergent Landen map for QuadraticState.
/// Throws SingularStepError when the shared denominator vanishes.
QuadraticState landen_step(const QuadraticState& s);

/// Runs landen_step until max(|a - t|, |b|, |c - t|) <= tol, where
/// t = sqrt(4ac - b^2)/2 is invariant.  final_value is the integral of
/// 1/(a x^2 + b x + c) over the whole line, pi / a_limit.
ConvergenceReport landen_iterate(QuadraticState s, double tol = 1e-12);

/// Coefficients of (c x^4 + d x^2 + e) / (x^6 + a x^4 + b x^2 + 1) with a
/// positive denominator.
struct SexticState {
    double a, b, c, d, e;
};

/// One step of the degree-6 Landen map.  printed_d_map selects a published
/// variant of the d coefficient update that breaks the invariance of the
/// integral; it is kept for comparison only.
SexticState landen_step(const SexticState& s, bool printed_d_map = false);

/// Runs landen_step until max(|a - 3|, |b - 3|) <= tol.  final_value is the
/// integral of the state's function over [0, inf),
/// (pi/2) (c + d + e)/4 at the limit.
ConvergenceReport landen_iterate(SexticState s, double tol = 1e-12, bool printed_d_map = false);

/// Least-squares slope of log e_{n+1} against log e_n.  Needs at least four
/// strictly positive, strictly decreasing values.
double estimate_order(const std::vector<double>& errors);

}  // namespace quartic
