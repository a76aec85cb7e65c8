#include "schroder/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace schroder {

TruncatedSeries TruncatedSeries::monomial(int order, int degree, const Rational& coeff) {
    TruncatedSeries s(order);
    if (degree <= order) s.coeff(degree) = coeff;
    return s;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeff(k) = a.coeff(k) + b.coeff(k);
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeff(k) = a.coeff(k) - b.coeff(k);
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j) == 0) continue;
            r.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& s) {
    TruncatedSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.coeff(k) = a.coeff(k) * s;
    return r;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.coeff(0) != 0) {
        throw std::invalid_argument("compose: inner series must have zero constant term");
    }
    const int n = inner.order();
    // Horner over the outer coefficients, high to low.
    TruncatedSeries r(n);
    const int m = std::min(outer.order(), n);
    for (int k = m; k >= 0; --k) {
        r = mul(r, inner);
        r.coeff(0) += outer.coeff(k);
    }
    return r;
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    const int n = a.order();
    if (n == 0) return TruncatedSeries(0);
    TruncatedSeries r(n - 1);
    for (int k = 1; k <= n; ++k) r.coeff(k - 1) = a.coeff(k) * k;
    return r;
}

TruncatedSeries shiftUp(const TruncatedSeries& a) {
    TruncatedSeries r(a.order() + 1);
    for (int k = 0; k <= a.order(); ++k) r.coeff(k + 1) = a.coeff(k);
    return r;
}

TruncatedSeries power(const TruncatedSeries& a, int exponent) {
    if (exponent < 0) throw std::invalid_argument("power: negative exponent");
    TruncatedSeries r(a.order());
    r.coeff(0) = 1;
    for (int i = 0; i < exponent; ++i) r = mul(r, a);
    return r;
}

}  // namespace schroder
