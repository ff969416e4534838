#include "quartic/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace quartic {

LaurentPolynomial::LaurentPolynomial(const Polynomial& p) {
    for (int i = 0; i <= p.degree(); ++i) insert(i, p.coeff(i));
}

LaurentPolynomial LaurentPolynomial::term(long exponent, const Rational& c) {
    LaurentPolynomial t;
    t.insert(exponent, c);
    return t;
}

void LaurentPolynomial::insert(long exponent, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(exponent, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

long LaurentPolynomial::min_degree() const {
    if (is_zero()) throw std::logic_error("degree of zero Laurent polynomial");
    return terms_.begin()->first;
}

long LaurentPolynomial::max_degree() const {
    if (is_zero()) throw std::logic_error("degree of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPolynomial::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolynomial::operator()(const Rational& phi) const {
    if (phi.is_zero() && !is_zero() && min_degree() < 0)
        throw std::domain_error("Laurent polynomial with poles evaluated at zero");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * phi.pow(e);
    return acc;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (const auto& [e, c] : b.terms_) r.insert(e, c);
    return r;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (-b);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.insert(ea + eb, ca * cb);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(long s) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::reflected() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.insert(-e, e % 2 == 0 ? c : -c);
    return r;
}

std::pair<Polynomial, Polynomial> LaurentPolynomial::symmetric_decomposition() const {
    // phi^k + (-1/phi)^k and [phi^k - (-1/phi)^k] / (phi + 1/phi) are both
    // polynomials in u = phi - 1/phi, and they satisfy the same three-term
    // recurrence p_{k+1} = u p_k + p_{k-1} with seeds 2, u and 0, 1.
    Polynomial a(coeff(0));
    Polynomial b;
    long top = is_zero() ? 0 : std::max(std::abs(min_degree()), std::abs(max_degree()));
    Polynomial u = Polynomial::variable();
    Polynomial even_prev{Rational(2)}, even_cur = u;  // k = 0, 1
    Polynomial odd_prev, odd_cur{Rational(1)};
    for (long k = 1; k <= top; ++k) {
        Rational ck = coeff(k), cmk = coeff(-k);
        if (k % 2 != 0) cmk = -cmk;
        a = a + (ck + cmk) / Rational(2) * even_cur;
        b = b + (ck - cmk) / Rational(2) * odd_cur;
        Polynomial even_next = u * even_cur + even_prev;
        even_prev = std::move(even_cur);
        even_cur = std::move(even_next);
        Polynomial odd_next = u * odd_cur + odd_prev;
        odd_prev = std::move(odd_cur);
        odd_cur = std::move(odd_next);
    }
    return {a, b};
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) out << "-";
        first = false;
        Rational mag = abs(c);
        if (mag != Rational(1) || e == 0) out << mag.to_string();
        if (e != 0) {
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace quartic
