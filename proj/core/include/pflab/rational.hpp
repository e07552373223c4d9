#ifndef PFLAB_RATIONAL_HPP
#define PFLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace pflab {

// Exact rational scalar. GMP keeps results canonical (gcd 1, positive
// denominator) for all arithmetic; only the raw (num, den) constructor
// needs an explicit canonicalize, which make_rational performs.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Parses "p/q" or "p" (q omitted when 1). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

// "p/q" with "/q" omitted when the denominator is 1.
std::string rational_to_string(const Rational& value);

std::vector<std::string> rationals_to_strings(const std::vector<Rational>& values);
std::vector<Rational> rationals_from_strings(const std::vector<std::string>& texts);

// value^exponent with exponent >= 0 (0^0 = 1).
Rational rational_pow(const Rational& value, unsigned long exponent);

int sign(const Rational& value);

Integer factorial(unsigned long n);

}  // namespace pflab

#endif
