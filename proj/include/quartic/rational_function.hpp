#pragma once

#include <string>

#include "quartic/polynomial.hpp"

namespace quartic {

/// Quotient of two polynomials kept in canonical form: common factors
/// removed, denominator monic and nonzero.
class RationalFunction {
public:
    RationalFunction() : num_(), den_{Rational(1)} {}
    RationalFunction(const Polynomial& num, const Polynomial& den);
    RationalFunction(const Rational& c) : num_(c), den_{Rational(1)} {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Denominator must not vanish at x.
    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// f(g(x)) for rational g.
    RationalFunction compose(const RationalFunction& g) const;

    bool is_even() const;

    std::string to_string(const std::string& var = "x") const;

private:
    Polynomial num_, den_;
};

}  // namespace quartic
