#pragma once

// Weight sequences and the four bracketing families.
//
// A weight sequence assigns a non-negative rational to each out-degree; the
// weight of a tree is the product over its vertices.  Ordered families pair
// with ordinary generating functions (y_n = z^n), labeled families with
// exponential ones (y_n = z^n/n!).  Sequences are stored as an explicit head
// plus a geometric tail, zeta_i = tailCoef * tailRatio^i for i >= head size,
// which covers the constant-one tails of the general problems and stays
// closed under tilting.

#include "schroder/numeric.hpp"

#include <string>
#include <vector>

namespace schroder {

enum class Flavor { Ordered, Labeled };

enum class Family { P1, P2, P3, P4 };

struct WeightSeq {
    Flavor flavor = Flavor::Ordered;
    std::vector<Rational> head;  // zeta_0 .. zeta_{head.size()-1}
    Rational tailCoef = 0;
    Rational tailRatio = 1;

    Rational zeta(int i) const;
    bool finiteSupport() const { return tailCoef == 0; }

    // Largest degree with nonzero weight, clamped to cap (tail support is
    // unbounded, so the cap applies there).
    int maxSupportDegree(int cap) const;

    // zeta_0 > 0, everything >= 0; Labeled requires zeta_1 == 0 (the
    // finiteness condition is otherwise undecidable here), Ordered requires
    // zeta_1 < 1.
    void validate() const;

    // gcd{k - 1 : k >= 2, zeta_k != 0} == 1, i.e. trees exist at every
    // sufficiently large leaf count.
    bool aperiodic() const;

    // zeta_0 == 1, zeta_1 == 0 and aperiodicity: what the asymptotic
    // machinery assumes.
    bool meetsAnalyticRestrictions() const;

    // g_j = zeta_j (Ordered) or zeta_j / j! (Labeled) for j = 0..order; the
    // coefficients of the generating function G in the flavor's convention.
    std::vector<Rational> degreeCoeffs(int order) const;

    // Evaluation of G(w) = sum_{j>=1} g_j w^j and its first two derivatives,
    // with closed-form tails (exponential / geometric).  For Ordered tails
    // the domain is w * tailRatio < 1.
    Real G(const Real& w) const;
    Real Gp(const Real& w) const;
    Real Gpp(const Real& w) const;

    // Supremum of the valid evaluation domain for G (infinite when entire).
    bool hasFiniteRadius() const;
    Real radius() const;
};

WeightSeq familyWeights(Family f);
Flavor familyFlavor(Family f);
bool familyBinary(Family f);

std::string familyName(Family f);
Family familyFromName(const std::string& name);

}  // namespace schroder
