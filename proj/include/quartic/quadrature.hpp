#pragma once

#include <functional>
#include <stdexcept>
#include <variant>

namespace quartic {

/// The adaptive subdivision budget ran out before the tolerance was met.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Finite {
    double lo, hi;
};
struct HalfLine {};   // [0, inf)
struct WholeLine {};  // (-inf, inf)
using Domain = std::variant<Finite, HalfLine, WholeLine>;

struct IntegrandSpec {
    std::function<double(double)> f;
    Domain domain = HalfLine{};
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_subintervals = 1 << 20;
};

struct QuadratureResult {
    double value;
    double error_estimate;
};

/// Adaptive Gauss-Kronrod 7-15 integration.  Unbounded domains are folded
/// onto (0, 1] with x = (1-u)/u.  Throws std::domain_error if the integrand
/// produces a non-finite value and AccuracyError if the subdivision budget
/// is exhausted first.
QuadratureResult integrate(const IntegrandSpec& spec);

/// integral over [0, pi] of cos^j(u) [(1+a) + (1-a) cos^2 u]^{-(m+1)} du,
/// which vanishes for odd j.  Requires a > -1 and odd j with
/// 0 <= j <= 2m+1.
double vanishing_odd_moment(double a, int m, int j);

struct CheckPair {
    double lhs, rhs;
};

/// lhs: integral over [0, inf) of x^{m-1} (a + sqrt(1+x))^{-(2m+1/2)} dx,
/// computed after the substitution w = sqrt(1+x) removes the fractional
/// power.  rhs: 2^{6m+3/2} / (pi m C(4m,2m) C(2m,m)) times the quartic
/// integral.  Requires m >= 1 and a > -1.
CheckPair ramanujan_master_pair(double a, int m);

/// lhs: integral over [0, inf) of dx / (x^4 + 2a x^2 + 1 + c).
/// rhs: pi sqrt(2) h'(c) for h(c) = sqrt(a + sqrt(1+c)).
/// Requires 1 + c > 0 and a + sqrt(1+c) > 0.
CheckPair sqrt_derivative_pair(double a, double c);

}  // namespace quartic
