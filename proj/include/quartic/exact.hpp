#pragma once

#include <optional>

#include "quartic/pi_rational.hpp"
#include "quartic/polynomial.hpp"
#include "quartic/rational.hpp"

namespace quartic {

/// C(n, k); zero for k < 0 or k > n.
Integer binomial(long n, long k);

/// Rising factorial a (a+1) ... (a+k-1); 1 for k = 0.
Rational pochhammer(const Rational& a, unsigned k);

/// Coefficient of a^l in the degree-m polynomial of the quartic closed form:
///   2^{-2m} sum_{k=l}^{m} 2^k C(2m-2k, m-k) C(m+k, m) C(k, l).
/// Strictly positive for 0 <= l <= m.
Rational quartic_coefficient(int m, int l);

/// Independent evaluation of the same coefficient through the original
/// triple sum with alternating signs; used to cross-check quartic_coefficient.
Rational quartic_coefficient_oracle(int m, int l);

/// P_m, the polynomial whose coefficients are quartic_coefficient(m, l).
Polynomial quartic_polynomial(int m);

/// Same polynomial assembled in the shifted basis
///   2^{-2m} sum_k 2^k C(2m-2k, m-k) C(m+k, m) (1+a)^k,
/// expanded to the monomial basis.  Must agree with quartic_polynomial.
Polynomial quartic_polynomial_shifted_basis(int m);

/// N(a; m) = integral over [0, inf) of dx / (x^4 + 2 a x^2 + 1)^{m+1}
///         = (pi/2) P_m(a) / [2(a+1)]^{m+1/2},  for a > -1.
double quartic_value(double a, int m);

/// Exact value when 2(1+a) is a perfect rational square.
std::optional<PiRational> quartic_value_exact(const Rational& a, int m);

/// integral over [0, inf) of dx / (b x^4 + 2 a x^2 + 1)
///   = pi / (2 sqrt(2) sqrt(a + sqrt(b))),  for b > 0, a + sqrt(b) > 0.
double sqrt_quartic(double a, double b);

/// T_m(y) = sum_{k=0}^{m} C(m+k, m-k) y^{2k}, the numerator polynomial of
/// the transformed quartic integrand.
Polynomial landen_numerator(int m);

/// (phi^{2m+1} + phi^{-(2m+1)}) / (phi + phi^{-1}) == T_m(phi - phi^{-1}),
/// checked in exact arithmetic.
bool check_phi_identity(int m, const Rational& phi);

/// Both sides of the identity above satisfy
///   c_{m+2} - (phi^2 + phi^{-2}) c_{m+1} + c_m = 0;
/// verifies the recurrence for both sequences at index m.
bool check_recurrence(int m, const Rational& phi);

/// Terminating Gauss series sum_{k=0}^{m} (-m)_k (b)_k / ((c)_k k!) z^k
/// with neg_m = -m <= 0.  c must not be an integer in {0, -1, ..., -(m-1)}.
Rational hypergeometric_2f1_terminating(int neg_m, const Rational& b, const Rational& c,
                                        const Rational& z);

/// N(a; m) through the hypergeometric route:
///   2^{m-1/2} (a+1)^{-(m+1/2)} B(2m+3/2, 1/2) 2F1(-m, m+1; m+3/2; (1-a)/2).
double quartic_value_hypergeometric(double a, int m);

/// Euler beta at positive integer or half-integer arguments, exactly.
PiRational beta_half_integer(const Rational& x, const Rational& y);

/// integral over [0, inf) of t^{2k} dt / (1+t^2)^{m+1}
///   = pi / 2^{2m+1} * C(2k,k) C(2m-2k, m-k) / C(m,k),  for 0 <= k <= m.
PiRational even_moment(int k, int m);

/// N(a; m) by integrating the Landen-transformed integrand term by term
/// with even_moment.
double quartic_value_landen_route(double a, int m);

/// C(m+k, m-k) C(2k, k) == C(m+k, m) C(m, k) for 0 <= k <= m.
bool check_binomial_identity(int m, int k);

/// Binet-style closed form for sum_{k=0}^{n} C(n-k, k) z^k.  Exact when
/// 1+4z is a perfect rational square, floating-point otherwise.
bool check_fibonacci_sum(int n, const Rational& z);

}  // namespace quartic
