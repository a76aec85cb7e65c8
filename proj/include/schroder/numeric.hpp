#pragma once

// Arbitrary-precision number types used throughout the library.
//
// Exact combinatorial quantities (tree weights, series coefficients,
// probabilities of finitely many trees) are kept as rationals; asymptotic
// constants involving sqrt/log/exp live in 50-decimal-digit MPFR reals.
// The two worlds never mix silently: conversions are explicit.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace schroder {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

Rational rationalPow(const Rational& base, unsigned exp);

Real toReal(const Rational& q);
double toDouble(const Rational& q);

// "p" when the denominator is 1, otherwise "p/q".
std::string formatRational(const Rational& q);
std::string formatReal(const Real& x, int significantDigits = 30);

}  // namespace schroder
