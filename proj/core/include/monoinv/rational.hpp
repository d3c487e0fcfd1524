#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace monoinv {

// Arbitrary-precision rational in lowest terms with positive denominator.
// Every arithmetic result of mpq_class is canonical; values built from raw
// numerator/denominator pairs go through make_rational().
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p/q", integers and decimals ("-0.125", "3.", ".5", "1e-3").
// Decimals are converted exactly: d fractional digits give denominator 10^d.
// Throws Error(ParseError).
Rational parse_rational(std::string_view text);

// Canonical GMP form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Rational midpoint(const Rational& a, const Rational& b);

}  // namespace monoinv
