#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

#include "quartic/rational.hpp"

namespace quartic {

/// Exact value of the form q * pi^p with p in {0, 1}.  Covers every
/// closed-form integral value this library produces.
struct PiRational {
    Rational q;
    int pi_power = 0;

    PiRational() = default;
    PiRational(Rational value, int power) : q(std::move(value)), pi_power(power) {
        if (pi_power != 0 && pi_power != 1)
            throw std::domain_error("pi power must be 0 or 1");
    }

    double to_double() const {
        double v = q.to_double();
        return pi_power ? v * std::numbers::pi : v;
    }

    std::string to_string() const {
        return pi_power ? q.to_string() + "·π" : q.to_string();
    }

    friend PiRational operator*(const Rational& c, const PiRational& v) {
        return {c * v.q, v.pi_power};
    }

    friend PiRational operator+(const PiRational& a, const PiRational& b) {
        if (a.pi_power != b.pi_power && !a.q.is_zero() && !b.q.is_zero())
            throw std::domain_error("cannot add values with different pi powers");
        return {a.q + b.q, a.q.is_zero() ? b.pi_power : a.pi_power};
    }

    friend bool operator==(const PiRational& a, const PiRational& b) {
        return a.q == b.q && (a.q.is_zero() || a.pi_power == b.pi_power);
    }
};

}  // namespace quartic
