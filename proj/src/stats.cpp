#include "schroder/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <stdexcept>

namespace schroder {

double ksStatistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ksStatistic: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, (static_cast<double>(i) + 1) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    return d;
}

double chiSquarePValue(double statistic, double dof) {
    if (dof <= 0) throw std::invalid_argument("chiSquarePValue: dof must be positive");
    if (statistic <= 0) return 1.0;
    return boost::math::gamma_q(dof / 2, statistic / 2);
}

Chi2Result chiSquareUniform(const std::vector<std::int64_t>& observed) {
    if (observed.size() < 2) throw std::invalid_argument("chiSquareUniform: need >= 2 categories");
    std::int64_t total = 0;
    for (std::int64_t o : observed) total += o;
    if (total <= 0) throw std::invalid_argument("chiSquareUniform: empty sample");
    const double expected = static_cast<double>(total) / static_cast<double>(observed.size());
    Chi2Result r;
    for (std::int64_t o : observed) {
        const double diff = static_cast<double>(o) - expected;
        r.statistic += diff * diff / expected;
    }
    r.dof = static_cast<double>(observed.size()) - 1;
    r.pValue = chiSquarePValue(r.statistic, r.dof);
    return r;
}

Chi2Result chiSquareTwoSample(const std::vector<std::int64_t>& a,
                              const std::vector<std::int64_t>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("chiSquareTwoSample: size mismatch");
    double na = 0, nb = 0;
    for (std::int64_t x : a) na += static_cast<double>(x);
    for (std::int64_t x : b) nb += static_cast<double>(x);
    if (na <= 0 || nb <= 0) throw std::invalid_argument("chiSquareTwoSample: empty sample");
    Chi2Result r;
    int usedCategories = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double rowTotal = static_cast<double>(a[i] + b[i]);
        if (rowTotal == 0) continue;
        ++usedCategories;
        const double ea = rowTotal * na / (na + nb);
        const double eb = rowTotal * nb / (na + nb);
        const double da = static_cast<double>(a[i]) - ea;
        const double db = static_cast<double>(b[i]) - eb;
        r.statistic += da * da / ea + db * db / eb;
    }
    if (usedCategories < 2) throw std::invalid_argument("chiSquareTwoSample: degenerate table");
    r.dof = static_cast<double>(usedCategories) - 1;
    r.pValue = chiSquarePValue(r.statistic, r.dof);
    return r;
}

}  // namespace schroder
