#include "quartic/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace quartic {

namespace {
const Rational kZero = 0;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> v(degree + 1, kZero);
    v[degree] = c;
    return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p);
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial base(*this), acc(Rational(1));
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> v(coeffs_.size() - 1, 0);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = Rational(long(i)) * coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
    Polynomial r(*this);
    Rational f = 1;
    for (std::size_t i = 1; i < r.coeffs_.size(); ++i) {
        f *= c;
        r.coeffs_[i] *= f;
    }
    r.trim();
    return r;
}

Polynomial Polynomial::negate_argument() const {
    Polynomial r(*this);
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Polynomial(*it);
    return acc;
}

bool Polynomial::is_even() const {
    for (std::size_t i = 1; i < coeffs_.size(); i += 2)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem(*this);
    if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
    std::vector<Rational> q(rem.degree() - divisor.degree() + 1, 0);
    const Rational lead_inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational f = rem.leading() * lead_inv;
        q[shift] = f;
        rem = rem - f * (Polynomial::monomial(shift) * divisor);
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational a = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1)) && i > 0;
        if (!unit) os << a.to_string();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    // Euclid over Q; each remainder is rescaled to keep coefficients small.
    auto normalize = [](const Polynomial& p) { return p.is_zero() ? p : p.monic(); };
    a = normalize(a);
    b = normalize(b);
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = b;
        b = normalize(r);
    }
    return a;
}

namespace {

// Signs of a polynomial at a point or at +/- infinity (lo/hi unset).
int sign_at(const Polynomial& p, const std::optional<Rational>& x, bool plus_infinity) {
    if (p.is_zero()) return 0;
    if (x) return p(*x).sign();
    int s = p.leading().sign();
    if (!plus_infinity && p.degree() % 2 == 1) s = -s;
    return s;
}

int variations(const std::vector<Polynomial>& chain, const std::optional<Rational>& x,
               bool plus_infinity) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x, plus_infinity);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int count_real_roots(const Polynomial& p, std::optional<Rational> lo, std::optional<Rational> hi) {
    if (p.degree() <= 0) return 0;
    Polynomial g = poly_gcd(p, p.derivative());
    Polynomial sf = g.degree() > 0 ? p.exact_div(g) : p;  // squarefree part

    std::vector<Polynomial> chain{sf, sf.derivative()};
    while (!chain.back().is_zero()) {
        Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        // scale by a positive constant only: the sign pattern is the point
        chain.push_back(abs(r.leading()).inverse() * (-r));
    }
    return variations(chain, lo, false) - variations(chain, hi, true);
}

}  // namespace quartic
