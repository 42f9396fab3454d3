#ifndef MOTGRP_RATIONAL_HPP_
#define MOTGRP_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace motgrp {

// Exact rational arithmetic throughout; values are always kept canonical
// (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Use these rather than mpq_class(num, den), which does not reduce.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q" and "-p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Rational frac(const Rational& value);
bool is_integer(const Rational& value);

// Fixed-point decimal rendering, round-half-even at the last digit.
std::string to_decimal(const Rational& value, int digits);

}  // namespace motgrp

#endif  // MOTGRP_RATIONAL_HPP_
