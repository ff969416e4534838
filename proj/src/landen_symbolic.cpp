#include "quartic/landen_symbolic.hpp"

#include <stdexcept>

#include "quartic/exact.hpp"
#include "quartic/laurent.hpp"

namespace quartic {

namespace {

/// phi^K p(-1/phi) as a polynomial, where K is the working degree
/// (at least deg p).
Polynomial reversed_alternating(const Polynomial& p, int k) {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= p.degree(); ++i)
        c[static_cast<std::size_t>(k - i)] = i % 2 == 0 ? p.coeff(i) : -p.coeff(i);
    return Polynomial(std::move(c));
}

}  // namespace

RationalFunction landen_transform_general(const RationalFunction& f) {
    const Polynomial& n = f.num();
    const Polynomial& d = f.den();
    if (f.is_zero()) return f;
    if (d.degree() < n.degree() + 2)
        throw std::domain_error("landen transform: denominator degree must exceed numerator degree by at least 2");
    if (count_real_roots(d) != 0)
        throw std::domain_error("landen transform: denominator has a real root");

    // With x = phi on one branch and x = -1/phi on the other, the images of
    // f(x) dx from both branches add up to
    //   2 / (phi^2 + 1) [phi^2 f(phi) + f(-1/phi)] dy,  phi = y + sqrt(y^2+1).
    int k = d.degree();
    Polynomial nr = reversed_alternating(n, k);
    Polynomial dr = reversed_alternating(d, k);
    Polynomial phi2 = Polynomial::monomial(2);
    Polynomial num = Rational(2) * (phi2 * n * dr + nr * d);
    Polynomial den = (phi2 + Polynomial{Rational(1)}) * d * dr;

    // Shifting both by phi^-(k+1) makes each one odd under phi -> -1/phi, so
    // each is (phi + 1/phi) times a polynomial in u = phi - 1/phi = 2y and
    // the square-root factor phi + 1/phi = 2 sqrt(y^2 + 1) cancels.
    auto [num_sym, num_anti] = LaurentPolynomial(num).shifted(-(k + 1)).symmetric_decomposition();
    auto [den_sym, den_anti] = LaurentPolynomial(den).shifted(-(k + 1)).symmetric_decomposition();
    if (!num_sym.is_zero() || !den_sym.is_zero())
        throw std::logic_error("landen transform: shifted kernel is not anti-invariant");

    return {num_anti.scale_argument(2), den_anti.scale_argument(2)};
}

RationalFunction landen_transform(const RationalFunction& f) {
    if (!f.is_even()) throw std::domain_error("landen transform: integrand must be even");
    RationalFunction g = landen_transform_general(f);
    if (!g.is_even()) throw std::logic_error("landen transform: image of an even integrand is not even");
    return g;
}

RationalFunction quartic_integrand(const Rational& a, int m) {
    if (m < 0) throw std::domain_error("quartic_integrand: m must be nonnegative");
    if (!(a > Rational(-1))) throw std::domain_error("quartic_integrand: need a > -1");
    Polynomial quartic{Rational(1), Rational(0), Rational(2) * a, Rational(0), Rational(1)};
    return {Polynomial{Rational(1)}, quartic.pow(static_cast<unsigned>(m) + 1)};
}

RationalFunction quartic_transformed(const Rational& a, int m) {
    if (m < 0) throw std::domain_error("quartic_transformed: m must be nonnegative");
    if (!(a > Rational(-1))) throw std::domain_error("quartic_transformed: need a > -1");
    Polynomial num = landen_numerator(m).scale_argument(2);
    Polynomial base{Rational(1) + a, Rational(0), Rational(2)};
    Polynomial den = Rational(pow2(static_cast<unsigned long>(m))) *
                     base.pow(static_cast<unsigned>(m) + 1);
    return {num, den};
}

RationalFunction cot_multiple(int m) {
    if (m < 1) throw std::domain_error("cot_multiple: m must be at least 1");
    RationalFunction x{Polynomial::variable(), Polynomial{Rational(1)}};
    RationalFunction r = x;
    RationalFunction one(Rational(1));
    for (int i = 1; i < m; ++i) r = (x * r - one) / (x + r);
    return r;
}

}  // namespace quartic
