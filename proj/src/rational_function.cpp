#include "quartic/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace quartic {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial{Rational(1)};
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rational lead = den_.leading();
    den_ = den_.monic();
    num_ = lead.inverse() * num_;
}

Rational RationalFunction::operator()(const Rational& x) const {
    Rational d = den_(x);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_(x) / d;
}

double RationalFunction::operator()(double x) const { return num_(x) / den_(x); }

RationalFunction RationalFunction::operator-() const { return {-num_, den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
    // Clear g's denominator with the common power q^K, K = max degree.
    int k = std::max(num_.degree(), den_.degree());
    auto lift = [&](const Polynomial& p) {
        Polynomial acc;
        for (int i = 0; i <= p.degree(); ++i)
            acc = acc + p.coeff(i) * g.num_.pow(static_cast<unsigned>(i)) *
                            g.den_.pow(static_cast<unsigned>(k - i));
        return acc;
    };
    return {lift(num_), lift(den_)};
}

bool RationalFunction::is_even() const {
    return num_.negate_argument() * den_ == num_ * den_.negate_argument();
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_ == Polynomial{Rational(1)}) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace quartic
