#include "pflab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace pflab {

namespace {
const Rational kZero = 0;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::x() {
    return Polynomial(std::vector<Rational>{0, 1});
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading_coeff() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading_coeff of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted_argument(const Rational& c) const {
    // Horner in (x + c): p(x + c) built from the top coefficient down.
    Polynomial result;
    Polynomial xc(std::vector<Rational>{c, 1});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        result = result * xc + Polynomial::constant(*it);
    return result;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s == 0) return Polynomial();
    std::vector<Rational> out(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = s * p.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    *this = *this + other;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    *this = *this - other;
    return *this;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0 (zero polynomial)";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) out << rational_to_string(mag);
        if (i >= 1) {
            if (!unit) out << "*";
            out << "x";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_sub(const Polynomial& a, const Polynomial& b) { return a - b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial poly_scale(const Rational& s, const Polynomial& p) { return s * p; }
Rational poly_eval(const Polynomial& p, const Rational& at) { return p.eval(at); }
Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    const auto& div = b.coeffs();
    const std::size_t db = div.size() - 1;
    if (rem.size() <= db) return {Polynomial(), a};
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    for (std::size_t top = rem.size(); top > db; --top) {
        if (rem[top - 1] == 0) continue;
        const std::size_t shift = top - 1 - db;
        Rational factor = rem[top - 1] / div[db];
        quot[shift] = factor;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= factor * div[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial u = a, v = b;
    while (!v.is_zero()) {
        Polynomial r = poly_divmod(u, v).remainder;
        u = v;
        v = r;
    }
    if (u.is_zero()) return u;
    return (Rational(1) / u.leading_coeff()) * u;
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return Polynomial::constant(1);
    Polynomial g = poly_gcd(p, p.derivative());
    Polynomial q = poly_divmod(p, g).quotient;
    return (Rational(1) / q.leading_coeff()) * q;
}

}  // namespace pflab
