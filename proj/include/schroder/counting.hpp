#pragma once

// Exact counting and expectations.
//
// All counts of the four families come from the leaf-counting functional
// equation solved as an exact rational series; closed-form formulas exist
// for some of them but are deliberately not used here (tests cross-check a
// few).  A brute-force enumerator provides the independent oracle.  The
// exact finite-n expectations of height functionals are coefficient ratios
// of series assembled from G'(C(z)).

#include "schroder/series.hpp"
#include "schroder/tree.hpp"
#include "schroder/weights.hpp"

#include <stdexcept>
#include <vector>

namespace schroder {

struct UndefinedMeasureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unique series prefix with zero constant term satisfying
// C = zeta_0 z + G(C) in the flavor's generating-function convention.
TruncatedSeries seriesC(const WeightSeq& zeta, int order);

// Sum of w_zeta over all trees with n leaves: [z^n]C for ordered,
// n! [z^n]C for labeled.
Rational weightedCount(const WeightSeq& zeta, int n);

// Exact number of trees of the family with n leaves.
BigInt familyCount(Family f, int n);
std::vector<BigInt> familyCounts(Family f, int maxN);  // index by n, entry 0 unused

struct EnumerationCaps {
    int ordered = 8;
    int labeled = 7;
};

// All distinct trees of the family with n leaves, canonical, no duplicates.
std::vector<Tree> enumerateFamily(Family f, int n, const EnumerationCaps& caps = {});

// Ordered trees with n leaves whose internal out-degrees are exactly 2
// (binary) or >= 2.  Building block of the oracle.
std::vector<Tree> enumerateOrdered(int n, bool binary);

struct SeriesContext {
    WeightSeq zeta;
    TruncatedSeries C;       // to the requested order
    TruncatedSeries GpOfC;   // G'(C(z))
};

SeriesContext makeSeriesContext(const WeightSeq& zeta, int order);

// E under Q_n of the number of leaves at height k: [z^n] z [G'(C)]^k / [z^n] C.
Rational exactLeafProfileExpectation(const SeriesContext& ctx, int n, int k);
// E of the number of vertices at height k: [z^n] C [G'(C)]^k / [z^n] C.
Rational exactNodeProfileExpectation(const SeriesContext& ctx, int n, int k);
// E of the sum of leaf heights: [z^n] z (C')^2 / [z^n] C.
Rational exactSumLeafHeightsExpectation(const SeriesContext& ctx, int n);

Rational exactLeafProfileExpectation(const WeightSeq& zeta, int n, int k);
Rational exactNodeProfileExpectation(const WeightSeq& zeta, int n, int k);
Rational exactSumLeafHeightsExpectation(const WeightSeq& zeta, int n);

// Verifies, by brute force, that for every leaf-labeled tree t with n leaves
// (fourth family) the number of ordered trees with t's shape times the
// number of leaf labelings of that shape yielding t equals the product of
// deg(v)! over the shape's vertices.
bool orderedLabelIdentityCheck(int n);

}  // namespace schroder
