#include "pflab/rational.hpp"

#include <stdexcept>

namespace pflab {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::vector<std::string> rationals_to_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(rational_to_string(v));
    return out;
}

std::vector<Rational> rationals_from_strings(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(rational_from_string(t));
    return out;
}

Rational rational_pow(const Rational& value, unsigned long exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), value.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), value.get_den_mpz_t(), exponent);
    return out;  // canonical since value was
}

int sign(const Rational& value) {
    return sgn(value);
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace pflab
