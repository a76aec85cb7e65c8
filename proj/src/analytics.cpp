#include "schroder/analytics.hpp"

#include "schroder/counting.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

namespace schroder {

std::pair<Real, Real> solveCharacteristic(const WeightSeq& zeta, const Real& tol) {
    zeta.validate();
    if (tol <= 0) throw std::invalid_argument("solveCharacteristic: tol must be positive");
    const auto f = [&](const Real& w) { return zeta.Gp(w) - 1; };

    // G' is increasing on the positive axis, so a sign change brackets the root.
    Real lo(0);
    Real hi;
    if (zeta.hasFiniteRadius()) {
        const Real radius = zeta.radius();
        Real gap = radius / 2;
        hi = radius - gap;
        int steps = 0;
        while (f(hi) <= 0) {
            gap /= 2;
            hi = radius - gap;
            if (++steps > 200) throw SolverDomainError("solveCharacteristic: no sign change");
        }
    } else {
        hi = 1;
        int steps = 0;
        while (f(hi) <= 0) {
            hi *= 2;
            if (++steps > 600) throw SolverDomainError("solveCharacteristic: no sign change");
        }
    }

    // Bisection to a comfortable width, then Newton polish.
    for (int i = 0; i < 220; ++i) {
        const Real mid = (lo + hi) / 2;
        if (f(mid) > 0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Real s = (lo + hi) / 2;
    for (int i = 0; i < 8; ++i) {
        const Real step = f(s) / zeta.Gpp(s);
        s -= step;
        if (s <= lo || s >= hi) {
            s = (lo + hi) / 2;
            break;
        }
    }
    const Real r = (s - zeta.G(s)) / toReal(zeta.zeta(0));
    if (abs(zeta.Gp(s) - 1) > tol || abs(s - toReal(zeta.zeta(0)) * r - zeta.G(s)) > tol) {
        throw SolverDomainError("solveCharacteristic: residuals exceed tolerance");
    }
    if (r <= 0) throw SolverDomainError("solveCharacteristic: nonpositive radius");
    return {r, s};
}

CharacteristicSolution deriveConstants(const WeightSeq& zeta, const Real& r, const Real& s) {
    CharacteristicSolution sol;
    sol.r = r;
    sol.s = s;
    sol.gpp = zeta.Gpp(s);
    if (sol.gpp <= 0) throw SolverDomainError("deriveConstants: G''(s) must be positive");
    const Real pi = boost::math::constants::pi<Real>();
    sol.gamma = sqrt(2 * r * toReal(zeta.zeta(0)) / sol.gpp);
    const OffspringDist xi = offspringFromWeights(zeta, r, s);
    sol.sigma2 = xi.variance;
    sol.xi0 = xi.xi0();
    sol.lambda = sqrt(sol.gpp * r);
    sol.heightConst = sqrt(pi / (2 * r * sol.gpp));
    sol.scalingConst = 2 / (sqrt(sol.sigma2) * sqrt(sol.xi0));
    return sol;
}

CharacteristicSolution solveFamily(Family f) {
    const WeightSeq zeta = familyWeights(f);
    const auto [r, s] = solveCharacteristic(zeta);
    return deriveConstants(zeta, r, s);
}

Real asymptoticCountRatio(const WeightSeq& zeta, const CharacteristicSolution& sol, int n,
                          const Rational& coefficientN) {
    if (n < 1) throw std::invalid_argument("asymptoticCountRatio: n must be >= 1");
    if (!zeta.aperiodic()) {
        throw SolverDomainError("asymptoticCountRatio: weight sequence is periodic");
    }
    const Real pi = boost::math::constants::pi<Real>();
    const Real nn(n);
    const Real approx = sol.gamma * pow(sol.r, -n) / (2 * sqrt(pi * nn * nn * nn));
    return toReal(coefficientN) / approx;
}

Real asymptoticCountRatio(Family f, int n) {
    const WeightSeq zeta = familyWeights(f);
    const CharacteristicSolution sol = solveFamily(f);
    const Rational cn = seriesC(zeta, n).coeff(n);
    return asymptoticCountRatio(zeta, sol, n, cn);
}

double rayleighDensity(double x, double scale) {
    const double z = scale * x;
    return scale * z * std::exp(-z * z / 2);
}

double rayleighCdf(double x) {
    if (x <= 0) return 0.0;
    return -std::expm1(-x * x / 2);
}

Real leafProfileAsymptote(const CharacteristicSolution& sol, int k) {
    return sol.gpp * sol.r * k;
}

Real nodeProfileAsymptote(const CharacteristicSolution& sol, int k) {
    return sol.s * sol.gpp * k + 1;
}

}  // namespace schroder
