#pragma once

// Weighted measures on trees, tilting, offspring distributions, and the
// Gibbs fragmentation model.
//
// Q_n assigns a tree probability proportional to its weight; tilting the
// weight sequence by (a, b) multiplies every n-leaf weight by a^n b^{n-1}
// and hence leaves Q_n untouched.  Critical offspring distributions turn
// Q_n into a Galton-Watson tree conditioned on its number of leaves.

#include "schroder/counting.hpp"
#include "schroder/rng.hpp"
#include "schroder/tree.hpp"
#include "schroder/weights.hpp"

#include <stdexcept>
#include <vector>

namespace schroder {

// prod over vertices of zeta_{deg(v)}.
Rational treeWeight(const WeightSeq& zeta, const Tree& t);

// Q_n(t) = w_zeta(t) / (sum of w_zeta over all trees with n leaves).
Rational qProbability(const WeightSeq& zeta, const Tree& t);

// tilde zeta_0 = a zeta_0, tilde zeta_i = b^{i-1} zeta_i for i >= 1.
WeightSeq tilt(const WeightSeq& zeta, const Rational& a, const Rational& b);

struct OffspringDist {
    // Explicit probabilities xi_0 .. xi_{probs.size()-1}.
    std::vector<Real> probs;
    std::vector<Real> cum;     // running sums of probs
    std::vector<double> cumD;  // double image of cum, for the sampling fast path

    // Probabilities beyond the explicit head:
    //   Geometric:  xi_j = tailCoef * tailArg^j
    //   Factorial:  xi_j = tailCoef * tailArg^j / j!
    enum class Tail { None, Geometric, Factorial };
    Tail tail = Tail::None;
    Real tailCoef{0};
    Real tailArg{0};

    Real mean{0};
    Real variance{0};
    bool critical = false;

    Real prob(int j) const;
    Real xi0() const { return probs.at(0); }

    // Inverse-CDF draw with half-open, left-closed intervals.  The uniform
    // variate is refined 64 bits at a time until the comparison against the
    // 50-digit cumulative is unambiguous, so the draw is exact at working
    // precision and identical on every platform.
    int sampleDegree(RngStream& rng) const;
};

// xi_0 = zeta_0 r / s and xi_j = s^{j-1} g_j, with g_j the flavor-folded
// degree coefficient; requires s = r + G(s) (within 1e-10) and G'(s) <= 1.
OffspringDist offspringFromWeights(const WeightSeq& zeta, const Real& r, const Real& s);

// Critical offspring distribution of uniform ordered trees with no
// out-degree-1 vertices: xi_0 = 2(3-2sqrt2)/(2-sqrt2), xi_i = ((2-sqrt2)/2)^{i-1}.
OffspringDist uniformOrderedOffspring();

// The critical offspring distribution of each family, from the closed-form
// characteristic solutions.
OffspringDist familyOffspring(Family f);

struct GibbsModel {
    std::vector<Rational> alpha;  // alpha[k], k >= 2
    std::vector<Rational> g;      // g[k], k >= 1 (g[0] = 0)
    std::vector<Rational> Z;      // Z[n], n >= 2, by independent partition sums
    int maxN = 0;

    bool combinatorial() const;  // Z(n) == g(n) for every computed n
};

// alpha_k = zeta_k and g(k) = k! [z^k] C; Z(n) is recomputed independently
// by summing over unordered partitions of {1..n} via integer partitions
// weighted with multinomial counts.
GibbsModel gibbsFromWeights(const WeightSeq& zeta, int maxN);

// Product over internal vertices of alpha_k prod_j g(#B_j) / Z(#B).
Rational gibbsTreeProbability(const GibbsModel& m, const Tree& t);

}  // namespace schroder
