#pragma once

// Truncated power series over exact rationals.
//
// A TruncatedSeries holds coefficients c_0..c_N; all arithmetic is exact and
// closed on order-N prefixes.  Composition requires the inner series to have
// zero constant term.

#include "schroder/numeric.hpp"

#include <vector>

namespace schroder {

class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    static TruncatedSeries monomial(int order, int degree, const Rational& coeff);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<Rational> c_;
};

// Results are truncated to the smaller operand order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& s);

// outer(inner); inner must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// d/dz; order drops by one.
TruncatedSeries derivative(const TruncatedSeries& a);

// Multiplication by z; order rises by one.
TruncatedSeries shiftUp(const TruncatedSeries& a);

TruncatedSeries power(const TruncatedSeries& a, int exponent);

}  // namespace schroder
