#pragma once

#include <map>
#include <string>
#include <utility>

#include "quartic/polynomial.hpp"
#include "quartic/rational.hpp"

namespace quartic {

/// Polynomial in phi and 1/phi with exact rational coefficients, stored
/// sparsely by exponent.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    /// Embeds an ordinary polynomial (exponents 0..deg).
    explicit LaurentPolynomial(const Polynomial& p);

    static LaurentPolynomial term(long exponent, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    /// Smallest and largest exponent; both throw on the zero polynomial.
    long min_degree() const;
    long max_degree() const;
    Rational coeff(long exponent) const;

    Rational operator()(const Rational& phi) const;

    LaurentPolynomial operator-() const;
    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Multiplies by phi^s.
    LaurentPolynomial shifted(long s) const;
    /// Substitutes phi -> -1/phi.
    LaurentPolynomial reflected() const;

    /// Writes the polynomial as A(u) + (phi + 1/phi) B(u) with
    /// u = phi - 1/phi, which is always possible and unique.  Returns {A, B}.
    std::pair<Polynomial, Polynomial> symmetric_decomposition() const;

    std::string to_string(const std::string& var = "phi") const;

private:
    void insert(long exponent, const Rational& c);
    std::map<long, Rational> terms_;  // exponent -> nonzero coefficient
};

}  // namespace quartic
