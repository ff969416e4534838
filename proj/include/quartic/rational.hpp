#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace quartic {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.  All arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) { normalize(); }
    Rational(long num, long den) : v_(num, den) { normalize(); }

    /// Exact conversion; every finite double is a binary fraction.
    static Rational from_double(double x) {
        Rational r;
        mpq_set_d(r.v_.get_mpq_t(), x);
        return r;
    }

    /// Parses "p", "p/q" or a plain decimal like "1.25".
    static Rational from_string(const std::string& s) {
        auto dot = s.find('.');
        if (dot != std::string::npos && s.find('/') == std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            Integer den = 1;
            for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            return Rational(Integer(digits), den);
        }
        Rational r;
        if (r.v_.set_str(s, 10) != 0)
            throw std::invalid_argument("not a rational: '" + s + "'");
        r.normalize();
        return r;
    }

    const Integer num() const { return v_.get_num(); }
    const Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    std::string to_string() const {
        return is_integer() ? v_.get_num().get_str()
                            : v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(Integer(v_.get_den()), Integer(v_.get_num()));
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r;
        mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return r;  // powers of a canonical fraction stay canonical
    }

    friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    void normalize() {
        if (v_.get_den() == 0) throw std::domain_error("zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

/// Exact square root, if the argument is a perfect square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    Integer n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn, sd);
}

inline Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace quartic
