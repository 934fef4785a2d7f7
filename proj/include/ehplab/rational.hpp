#pragma once

#include <gmpxx.h>

#include <string>

namespace ehplab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonical "num/den" text; integers render without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

// Accepts "n" or "n/d". Throws std::invalid_argument on malformed text or d == 0.
Rational parse_rational(const std::string& text);

BigInt factorial(unsigned n);
BigInt power_of_two(unsigned e);
Rational pow(const Rational& base, unsigned e);

bool is_integer(const Rational& value);

}  // namespace ehplab
