#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrangealex {

// mpq_class keeps itself canonical as long as every constructor from raw
// numerator/denominator pairs goes through canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q", optional sign, surrounding blanks. Throws parse_error.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_long(long a, long n);

}  // namespace arrangealex
