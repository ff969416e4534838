#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "quartic/rational.hpp"

namespace quartic {

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficient i is the coefficient of x^i; the leading coefficient is
/// nonzero unless the polynomial is zero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) { coeffs_.push_back(c); trim(); }
    Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Polynomial monomial(int degree, const Rational& c = 1);
    static Polynomial variable() { return monomial(1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial operator/(const Rational& c) const { return Rational(1) / c * *this; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(unsigned e) const;
    Polynomial derivative() const;

    /// p(c*x)
    Polynomial scale_argument(const Rational& c) const;
    /// p(-x)
    Polynomial negate_argument() const;
    /// p(q(x))
    Polynomial compose(const Polynomial& q) const;

    bool is_even() const;

    Polynomial monic() const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    /// Exact quotient; throws std::logic_error on a nonzero remainder.
    Polynomial exact_div(const Polynomial& divisor) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd over the rationals (1 if coprime; 0 only for gcd(0,0)).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Number of distinct real roots in (lo, hi), where an unset bound means
/// the corresponding infinity.  Sturm's theorem on the squarefree part;
/// finite bounds must not be roots.
int count_real_roots(const Polynomial& p,
                     std::optional<Rational> lo = std::nullopt,
                     std::optional<Rational> hi = std::nullopt);

}  // namespace quartic
