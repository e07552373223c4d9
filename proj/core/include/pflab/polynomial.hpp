#ifndef PFLAB_POLYNOMIAL_HPP
#define PFLAB_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "pflab/rational.hpp"

namespace pflab {

// Dense univariate polynomial over Rational, coefficient of x^i at index i.
// Normal form: the highest stored coefficient is nonzero; the zero
// polynomial stores nothing and reports degree() == nullopt.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial x();  // the monomial x

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Coefficient of x^i (zero beyond the stored range).
    const Rational& coeff(int i) const;
    const Rational& leading_coeff() const;  // requires !is_zero()

    Rational eval(const Rational& at) const;
    Polynomial derivative() const;

    // p(x + c), exact Taylor shift.
    Polynomial shifted_argument(const Rational& c) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    std::string to_string() const;  // human form, ascending powers

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Rational& s, const Polynomial& p);
Rational poly_eval(const Polynomial& p, const Rational& at);
Polynomial poly_derivative(const Polynomial& p);

// Quotient and remainder of exact division, deg(rem) < deg(divisor).
// Throws std::invalid_argument when divisor is zero.
struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};
PolyDivMod poly_divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'), normalized monic; same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

}  // namespace pflab

#endif
