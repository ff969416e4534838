#pragma once

#include "quartic/rational_function.hpp"

namespace quartic {

/// Exact image of an even integrand under the degree-2 rational Landen map:
/// the unique even g with
///   integral of f over R  ==  integral of g over R.
/// Requires f even, deg den >= deg num + 2, and a denominator with no real
/// roots; throws std::domain_error otherwise.
RationalFunction landen_transform(const RationalFunction& f);

/// Same map without the evenness requirement; the image integrates to the
/// same value over the whole line but need not be even.
RationalFunction landen_transform_general(const RationalFunction& f);

/// 1 / (x^4 + 2 a x^2 + 1)^{m+1} for a > -1.
RationalFunction quartic_integrand(const Rational& a, int m);

/// Closed form of the transformed quartic integrand:
///   T_m(2y) / (2^m (1 + a + 2 y^2)^{m+1}),
/// where T_m is landen_numerator(m).  Equals
/// landen_transform(quartic_integrand(a, m)).
RationalFunction quartic_transformed(const Rational& a, int m);

/// cot(m t) as a rational function of x = cot(t), for m >= 1.
RationalFunction cot_multiple(int m);

}  // namespace quartic
