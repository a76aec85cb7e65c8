#include "schroder/numeric.hpp"

#include <sstream>
#include <iomanip>

namespace schroder {

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

Rational rationalPow(const Rational& base, unsigned exp) {
    Rational result = 1;
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

Real toReal(const Rational& q) { return Real(q); }

double toDouble(const Rational& q) { return static_cast<double>(Real(q)); }

std::string formatRational(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

std::string formatReal(const Real& x, int significantDigits) {
    std::ostringstream os;
    os << std::setprecision(significantDigits) << x;
    return os.str();
}

}  // namespace schroder
