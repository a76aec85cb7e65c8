#pragma once

// Goodness-of-fit helpers for the Monte Carlo harness and tests.

#include <cstdint>
#include <functional>
#include <vector>

namespace schroder {

// Sup-distance between the empirical CDF of the samples and the reference
// CDF, by the standard sorted-sample formula.  Throws on empty input.
double ksStatistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// Upper tail of the chi-square distribution (the p-value of a statistic).
double chiSquarePValue(double statistic, double dof);

struct Chi2Result {
    double statistic = 0;
    double dof = 0;
    double pValue = 1;
};

// Goodness of fit against the uniform law over observed.size() categories.
Chi2Result chiSquareUniform(const std::vector<std::int64_t>& observed);

// Two-sample homogeneity test over shared categories.
Chi2Result chiSquareTwoSample(const std::vector<std::int64_t>& a,
                              const std::vector<std::int64_t>& b);

}  // namespace schroder
