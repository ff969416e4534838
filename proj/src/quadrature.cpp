#include "quartic/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "quartic/exact.hpp"

namespace quartic {

namespace {

// 15-point Kronrod extension of 7-point Gauss, positive abscissae.
// Odd indices are the Gauss nodes.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Interval {
    double lo, hi;
    double value;
    double error;
};

bool operator<(const Interval& a, const Interval& b) { return a.error < b.error; }

class Rule {
public:
    explicit Rule(const std::function<double(double)>& f) : f_(f) {}

    Interval apply(double lo, double hi) const {
        double center = (lo + hi) / 2.0;
        double half = (hi - lo) / 2.0;
        double fc = sample(center);
        double kronrod = kKronrodWeights[7] * fc;
        double gauss = kGaussWeights[3] * fc;
        for (int i = 0; i < 7; ++i) {
            double dx = half * kNodes[i];
            double pair = sample(center - dx) + sample(center + dx);
            kronrod += kKronrodWeights[i] * pair;
            if (i % 2 != 0) gauss += kGaussWeights[i / 2] * pair;
        }
        return {lo, hi, kronrod * half, std::abs(kronrod - gauss) * half};
    }

private:
    double sample(double x) const {
        double y = f_(x);
        if (!std::isfinite(y))
            throw std::domain_error("quadrature: integrand produced a non-finite value");
        return y;
    }

    const std::function<double(double)>& f_;
};

QuadratureResult integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                                  double rel_tol, double abs_tol, int max_subintervals) {
    Rule rule(f);
    std::priority_queue<Interval> active;
    active.push(rule.apply(lo, hi));
    double total_value = active.top().value;
    double total_error = active.top().error;
    int count = 1;

    auto good_enough = [&] {
        return total_error <= std::max(abs_tol, rel_tol * std::abs(total_value));
    };

    // Intervals whose midpoint is no longer representable leave the queue
    // with their estimate kept; if every interval ends up that way the
    // tolerance is unreachable.
    while (!good_enough() && !active.empty()) {
        if (count >= max_subintervals)
            throw AccuracyError("quadrature: subdivision budget exhausted");
        Interval worst = active.top();
        active.pop();
        double mid = (worst.lo + worst.hi) / 2.0;
        if (mid <= worst.lo || mid >= worst.hi) continue;
        Interval left = rule.apply(worst.lo, mid);
        Interval right = rule.apply(mid, worst.hi);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
        ++count;
    }
    if (!good_enough()) throw AccuracyError("quadrature: tolerance not reachable");
    return {total_value, total_error};
}

// Folds [0, inf) onto (0, 1] with x = (1-u)/u.  The slow end x -> inf maps
// to u -> 0, where subdivided interval endpoints keep full relative
// precision; the mirror map t/(1-t) puts it at t -> 1, where nodes round to
// exactly 1 once intervals shrink below about 1e-13.
double fold_half_line(const std::function<double(double)>& f, double u) {
    double x = (1.0 - u) / u;
    double fx = f(x);
    if (fx == 0.0) return 0.0;
    return fx / u / u;
}

}  // namespace

QuadratureResult integrate(const IntegrandSpec& spec) {
    if (!spec.f) throw std::invalid_argument("quadrature: missing integrand");
    if (std::holds_alternative<Finite>(spec.domain)) {
        auto [lo, hi] = std::get<Finite>(spec.domain);
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("quadrature: invalid finite interval");
        return integrate_finite(spec.f, lo, hi, spec.rel_tol, spec.abs_tol,
                                spec.max_subintervals);
    }
    if (std::holds_alternative<HalfLine>(spec.domain)) {
        auto g = [&](double t) { return fold_half_line(spec.f, t); };
        return integrate_finite(g, 0.0, 1.0, spec.rel_tol, spec.abs_tol, spec.max_subintervals);
    }
    auto pos = [&](double t) { return fold_half_line(spec.f, t); };
    auto neg = [&](double t) { return fold_half_line([&](double x) { return spec.f(-x); }, t); };
    QuadratureResult p = integrate_finite(pos, 0.0, 1.0, spec.rel_tol / 2.0, spec.abs_tol / 2.0,
                                          spec.max_subintervals / 2);
    QuadratureResult n = integrate_finite(neg, 0.0, 1.0, spec.rel_tol / 2.0, spec.abs_tol / 2.0,
                                          spec.max_subintervals / 2);
    return {p.value + n.value, p.error_estimate + n.error_estimate};
}

double vanishing_odd_moment(double a, int m, int j) {
    if (!(a > -1.0)) throw std::domain_error("vanishing_odd_moment: need a > -1");
    if (m < 0) throw std::domain_error("vanishing_odd_moment: m must be nonnegative");
    if (j % 2 == 0 || j < 0 || j > 2 * m + 1)
        throw std::domain_error("vanishing_odd_moment: need odd j with 0 <= j <= 2m+1");
    IntegrandSpec spec;
    spec.f = [a, m, j](double u) {
        double c = std::cos(u);
        double base = (1.0 + a) + (1.0 - a) * c * c;
        return std::pow(c, j) * std::pow(base, -(m + 1));
    };
    spec.domain = Finite{0.0, std::numbers::pi};
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-13;
    return integrate(spec).value;
}

CheckPair ramanujan_master_pair(double a, int m) {
    if (m < 1) throw std::domain_error("ramanujan_master_pair: m must be at least 1");
    if (!(a > -1.0)) throw std::domain_error("ramanujan_master_pair: need a > -1");
    // w = sqrt(1+x) turns the integrand into 2w (w^2-1)^{m-1} (a+w)^{-(2m+1/2)}
    // on [1, inf), which has no fractional-power endpoint behaviour.
    double p = 2.0 * m + 0.5;
    IntegrandSpec spec;
    spec.f = [a, m, p](double s) {
        double w = 1.0 + s;
        return 2.0 * w * std::pow(s * (s + 2.0), m - 1) * std::pow(a + w, -p);
    };
    spec.rel_tol = 1e-9;
    double lhs = integrate(spec).value;

    double factor = std::pow(2.0, 6.0 * m + 1.5) /
                    (std::numbers::pi * m * binomial(4 * m, 2 * m).get_d() *
                     binomial(2 * m, m).get_d());
    return {lhs, factor * quartic_value(a, m)};
}

CheckPair sqrt_derivative_pair(double a, double c) {
    if (!(1.0 + c > 0.0)) throw std::domain_error("sqrt_derivative_pair: need 1 + c > 0");
    double root = std::sqrt(1.0 + c);
    if (!(a + root > 0.0)) throw std::domain_error("sqrt_derivative_pair: need a + sqrt(1+c) > 0");
    IntegrandSpec spec;
    spec.f = [a, c](double x) {
        double x2 = x * x;
        return 1.0 / (x2 * x2 + 2.0 * a * x2 + 1.0 + c);
    };
    spec.rel_tol = 1e-12;
    double lhs = integrate(spec).value;
    double rhs = std::numbers::pi * std::sqrt(2.0) / (4.0 * root * std::sqrt(a + root));
    return {lhs, rhs};
}

}  // namespace quartic
