#include "quartic/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace quartic {

namespace {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Gamma at a positive integer or half-integer, as r * sqrt(pi)^s with s in {0, 1}.
std::pair<Rational, int> gamma_half_integer(const Rational& x) {
    if (x.sign() <= 0) throw std::domain_error("gamma_half_integer: argument must be positive");
    if (x.is_integer()) {
        unsigned long n = mpz_get_ui(x.num().get_mpz_t());
        return {Rational(factorial(n - 1)), 0};
    }
    if (x.den() != 2) throw std::domain_error("gamma_half_integer: argument must be a half-integer");
    // x = n + 1/2: Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
    unsigned long n = mpz_get_ui(Integer((x.num() - 1) / 2).get_mpz_t());
    Rational r(factorial(2 * n), factorial(n));
    return {r / Rational(pow2(2 * n)), 1};
}

}  // namespace

Integer binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational pochhammer(const Rational& a, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= a + Rational(static_cast<long>(i));
    return r;
}

Rational quartic_coefficient(int m, int l) {
    if (m < 0 || l < 0 || l > m) throw std::domain_error("quartic_coefficient: need 0 <= l <= m");
    Integer sum = 0;
    for (int k = l; k <= m; ++k)
        sum += pow2(static_cast<unsigned long>(k)) * binomial(2 * m - 2 * k, m - k) *
               binomial(m + k, m) * binomial(k, l);
    return Rational(sum, pow2(static_cast<unsigned long>(2 * m)));
}

Rational quartic_coefficient_oracle(int m, int l) {
    if (m < 0 || l < 0 || l > m)
        throw std::domain_error("quartic_coefficient_oracle: need 0 <= l <= m");
    Rational sum = 0;
    for (int j = 0; j <= l; ++j)
        for (int s = 0; s <= m - l; ++s)
            for (int k = s + l; k <= m; ++k) {
                Integer prod = binomial(2 * k, k) * binomial(2 * m + 1, 2 * (s + j)) *
                               binomial(m - s - j, m - k) * binomial(s + j, j) *
                               binomial(k - s - j, l - j);
                if ((k - l - s) % 2 != 0) prod = -prod;
                sum += Rational(prod, pow2(static_cast<unsigned long>(3 * k)));
            }
    return sum;
}

Polynomial quartic_polynomial(int m) {
    if (m < 0) throw std::domain_error("quartic_polynomial: m must be nonnegative");
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    for (int l = 0; l <= m; ++l) c[static_cast<std::size_t>(l)] = quartic_coefficient(m, l);
    return Polynomial(std::move(c));
}

Polynomial quartic_polynomial_shifted_basis(int m) {
    if (m < 0) throw std::domain_error("quartic_polynomial_shifted_basis: m must be nonnegative");
    Polynomial shifted{Rational(1), Rational(1)};  // 1 + a
    Polynomial p;
    for (int k = 0; k <= m; ++k) {
        Rational w(pow2(static_cast<unsigned long>(k)) * binomial(2 * m - 2 * k, m - k) *
                       binomial(m + k, m),
                   pow2(static_cast<unsigned long>(2 * m)));
        p = p + w * shifted.pow(static_cast<unsigned>(k));
    }
    return p;
}

double quartic_value(double a, int m) {
    if (m < 0) throw std::domain_error("quartic_value: m must be nonnegative");
    if (!(a > -1.0)) throw std::domain_error("quartic_value: need a > -1");
    Rational pa = quartic_polynomial(m)(Rational::from_double(a));
    return std::numbers::pi / 2 * pa.to_double() * std::pow(2.0 * (a + 1.0), -(m + 0.5));
}

std::optional<PiRational> quartic_value_exact(const Rational& a, int m) {
    if (m < 0) throw std::domain_error("quartic_value_exact: m must be nonnegative");
    if (!(a > Rational(-1))) throw std::domain_error("quartic_value_exact: need a > -1");
    Rational s = Rational(2) * (a + Rational(1));
    auto root = exact_sqrt(s);
    if (!root) return std::nullopt;
    // [2(a+1)]^{m+1/2} = s^m sqrt(s)
    Rational q = quartic_polynomial(m)(a) / (Rational(2) * s.pow(m) * *root);
    return PiRational{q, 1};
}

double sqrt_quartic(double a, double b) {
    if (!(b > 0.0)) throw std::domain_error("sqrt_quartic: need b > 0");
    double s = a + std::sqrt(b);
    if (!(s > 0.0)) throw std::domain_error("sqrt_quartic: need a + sqrt(b) > 0");
    return std::numbers::pi / (2.0 * std::sqrt(2.0) * std::sqrt(s));
}

Polynomial landen_numerator(int m) {
    if (m < 0) throw std::domain_error("landen_numerator: m must be nonnegative");
    std::vector<Rational> c(static_cast<std::size_t>(2 * m) + 1);
    for (int k = 0; k <= m; ++k)
        c[static_cast<std::size_t>(2 * k)] = Rational(binomial(m + k, m - k));
    return Polynomial(std::move(c));
}

bool check_phi_identity(int m, const Rational& phi) {
    if (m < 0) throw std::domain_error("check_phi_identity: m must be nonnegative");
    if (phi.is_zero()) throw std::domain_error("check_phi_identity: phi must be nonzero");
    Rational inv = phi.inverse();
    Rational lhs = (phi.pow(2 * m + 1) + inv.pow(2 * m + 1)) / (phi + inv);
    Rational rhs = landen_numerator(m)(phi - inv);
    return lhs == rhs;
}

bool check_recurrence(int m, const Rational& phi) {
    if (m < 0) throw std::domain_error("check_recurrence: m must be nonnegative");
    if (phi.is_zero()) throw std::domain_error("check_recurrence: phi must be nonzero");
    Rational inv = phi.inverse();
    Rational w = phi.pow(2) + inv.pow(2);
    auto ratio = [&](int i) { return (phi.pow(2 * i + 1) + inv.pow(2 * i + 1)) / (phi + inv); };
    Rational u = phi - inv;
    auto cheb = [&](int i) { return landen_numerator(i)(u); };
    bool ratio_ok = ratio(m + 2) - w * ratio(m + 1) + ratio(m) == Rational(0);
    bool cheb_ok = cheb(m + 2) - w * cheb(m + 1) + cheb(m) == Rational(0);
    return ratio_ok && cheb_ok;
}

Rational hypergeometric_2f1_terminating(int neg_m, const Rational& b, const Rational& c,
                                        const Rational& z) {
    if (neg_m > 0)
        throw std::domain_error("hypergeometric_2f1_terminating: first parameter must be <= 0");
    int m = -neg_m;
    if (c.is_integer() && c.sign() <= 0 && -c < Rational(m))
        throw std::domain_error(
            "hypergeometric_2f1_terminating: (c)_k vanishes before the series terminates");
    Rational sum = 1;
    Rational term = 1;
    for (int k = 0; k < m; ++k) {
        Rational kk(static_cast<long>(k));
        term *= (Rational(neg_m) + kk) * (b + kk) * z / ((c + kk) * (kk + Rational(1)));
        sum += term;
    }
    return sum;
}

double quartic_value_hypergeometric(double a, int m) {
    if (m < 0) throw std::domain_error("quartic_value_hypergeometric: m must be nonnegative");
    if (!(a > -1.0)) throw std::domain_error("quartic_value_hypergeometric: need a > -1");
    Rational az = Rational::from_double(a);
    Rational z = (Rational(1) - az) / Rational(2);
    Rational f = hypergeometric_2f1_terminating(-m, Rational(m + 1), Rational(2 * m + 3, 2), z);
    PiRational beta = beta_half_integer(Rational(4 * m + 3, 2), Rational(1, 2));
    double scale = std::pow(2.0, m - 0.5) * std::pow(a + 1.0, -(m + 0.5));
    return scale * (f * beta).to_double();
}

PiRational beta_half_integer(const Rational& x, const Rational& y) {
    auto [gx, sx] = gamma_half_integer(x);
    auto [gy, sy] = gamma_half_integer(y);
    auto [gxy, sxy] = gamma_half_integer(x + y);
    Rational q = gx * gy / gxy;
    int s = sx + sy - sxy;
    // s counts powers of sqrt(pi).  A stray odd s cannot happen: x + y is an
    // integer exactly when x and y are both integers or both half-integers.
    if (s % 2 != 0) throw std::logic_error("beta_half_integer: stray half power of pi");
    return PiRational{q, s / 2};
}

PiRational even_moment(int k, int m) {
    if (k < 0 || k > m) throw std::domain_error("even_moment: need 0 <= k <= m");
    Rational q(Integer(binomial(2 * k, k) * binomial(2 * m - 2 * k, m - k)),
               Integer(pow2(static_cast<unsigned long>(2 * m) + 1) * binomial(m, k)));
    return PiRational{q, 1};
}

double quartic_value_landen_route(double a, int m) {
    if (m < 0) throw std::domain_error("quartic_value_landen_route: m must be nonnegative");
    if (!(a > -1.0)) throw std::domain_error("quartic_value_landen_route: need a > -1");
    Rational one_plus_a = Rational(1) + Rational::from_double(a);
    Rational sum = 0;
    for (int k = 0; k <= m; ++k)
        sum += Rational(Integer(binomial(m + k, m - k) * pow2(static_cast<unsigned long>(k)))) *
               one_plus_a.pow(k) * even_moment(k, m).q;
    return std::numbers::pi * sum.to_double() * std::pow(2.0 * (a + 1.0), -(m + 0.5));
}

bool check_binomial_identity(int m, int k) {
    if (m < 0 || k < 0 || k > m)
        throw std::domain_error("check_binomial_identity: need 0 <= k <= m");
    return binomial(m + k, m - k) * binomial(2 * k, k) == binomial(m + k, m) * binomial(m, k);
}

bool check_fibonacci_sum(int n, const Rational& z) {
    if (n < 0) throw std::domain_error("check_fibonacci_sum: n must be nonnegative");
    Rational rhs = 0;
    for (int k = 0; 2 * k <= n; ++k) rhs += Rational(binomial(n - k, k)) * z.pow(k);

    Rational disc = Rational(1) + Rational(4) * z;
    if (disc.sign() < 0) throw std::domain_error("check_fibonacci_sum: need 1 + 4z >= 0");
    if (disc.is_zero()) {
        // Both roots collapse to 1/2 and the Binet quotient degenerates.
        Rational lhs =
            Rational(static_cast<long>(n) + 1) / Rational(pow2(static_cast<unsigned long>(n)));
        return lhs == rhs;
    }
    if (auto s = exact_sqrt(disc)) {
        Rational bp = (Rational(1) + *s) / Rational(2);
        Rational bm = (Rational(1) - *s) / Rational(2);
        Rational lhs = (bp.pow(n + 1) - bm.pow(n + 1)) / *s;
        return lhs == rhs;
    }
    double s = std::sqrt(disc.to_double());
    double bp = (1.0 + s) / 2.0;
    double bm = (1.0 - s) / 2.0;
    double lhs = (std::pow(bp, n + 1) - std::pow(bm, n + 1)) / s;
    double r = rhs.to_double();
    return std::abs(lhs - r) <= 1e-13 * std::max(1.0, std::abs(r));
}

}  // namespace quartic
