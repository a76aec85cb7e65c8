#pragma once

// Characteristic system and asymptotic constants.
//
// The leaf-counting series has a square-root singularity at radius r, where
// (r, s) is the positive solution of s = r + G(s), G'(s) = 1.  Everything
// the limit theorems need is a closed form in (r, s, G''(s)) and the
// critical offspring distribution:
//   gamma       = sqrt(2 r zeta_0 / G''(s))    count amplitude
//   lambda      = sqrt(G''(s) r)               Rayleigh normalizer for leaf heights
//   heightConst = sqrt(pi / (2 r G''(s)))      E[leaf height] ~ heightConst sqrt(n)
//   scaling     = 2 / (sigma sqrt(xi_0))       metric-scaling constant
// All arithmetic is 50-digit MPFR.

#include "schroder/measures.hpp"
#include "schroder/weights.hpp"

#include <utility>

namespace schroder {

struct SolverDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CharacteristicSolution {
    Real r{0};
    Real s{0};
    Real gamma{0};
    Real sigma2{0};
    Real lambda{0};
    Real heightConst{0};
    Real scalingConst{0};
    Real xi0{0};
    Real gpp{0};  // G''(s)
};

// Newton iteration with a bisection bracket on G'(s) = 1, then
// r = (s - G(s)) / zeta_0.  Residuals are below tol on return.
std::pair<Real, Real> solveCharacteristic(const WeightSeq& zeta,
                                          const Real& tol = Real("1e-30"));

CharacteristicSolution deriveConstants(const WeightSeq& zeta, const Real& r, const Real& s);

CharacteristicSolution solveFamily(Family f);

// Exact coefficient of the counting series divided by its first-order
// asymptote gamma r^{-n} / (2 sqrt(pi n^3)); approaches 1 as n grows.
Real asymptoticCountRatio(const WeightSeq& zeta, const CharacteristicSolution& sol, int n,
                          const Rational& coefficientN);
Real asymptoticCountRatio(Family f, int n);

// Density of X when scale * X ~ Rayleigh(1); scale = 1 gives x exp(-x^2/2).
double rayleighDensity(double x, double scale = 1.0);
double rayleighCdf(double x);

// Limits of the expected number of leaves / vertices at height k.
Real leafProfileAsymptote(const CharacteristicSolution& sol, int k);  // G''(s) r k
Real nodeProfileAsymptote(const CharacteristicSolution& sol, int k);  // s G''(s) k + 1

}  // namespace schroder
