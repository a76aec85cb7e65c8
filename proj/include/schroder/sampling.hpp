#pragma once

// Exact sampling from Q_n by two independent mechanisms.
//
// CountingSampler is the recursive (counting) method: at every node the root
// out-degree k and the child sizes are drawn proportionally to
// zeta_k * [z^m] C^k and c_v * [z^{m-v}] C^{k-1}, using the power rows of
// the composition table.  Two backends share that structure:
//   exact    - rational tables, categorical draws by uniform big integers
//              over a common denominator; the sampled law is exactly Q_n.
//   floating - the weight sequence is tilted to its critical offspring
//              distribution, so every table entry is a probability in [0,1];
//              draws use 53-bit uniforms.  Deviation from Q_n is at the
//              1e-15 level, far below any statistical resolution, and the
//              tables stay cheap at n in the thousands.
// Auto picks exact up to exactMaxLeaves and floating beyond.
//
// sampleGWConditioned is the independent route: generate unconditioned
// Galton-Watson trees depth-first, aborting a generation as soon as its
// leaf count exceeds n (and, when xi_1 = 0, when the vertex count passes
// 2n - 1, which no n-leaf tree can reach), and keep the first tree with
// exactly n leaves.  Rejection never biases the law.

#include "schroder/detail/composition_table.hpp"
#include "schroder/measures.hpp"
#include "schroder/rng.hpp"
#include "schroder/tree.hpp"
#include "schroder/weights.hpp"

#include <stdexcept>

namespace schroder {

struct NoTreeOfSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RetryBudgetError : std::runtime_error {
    RetryBudgetError(const std::string& what, long long attemptCount)
        : std::runtime_error(what), attempts(attemptCount) {}
    long long attempts;
};

struct SamplerOptions {
    enum class Backend { Auto, Exact, Floating };
    Backend backend = Backend::Auto;
    int exactMaxLeaves = 64;
    // Floating backend: degrees are enumerated until the offspring tail mass
    // drops below this cutoff.
    double degreeTailCutoff = 1e-19;
};

class CountingSampler {
public:
    CountingSampler(const WeightSeq& zeta, int maxLeaves, SamplerOptions opts = {});

    // A draw from Q_n: an ordered tree for the ordered flavor, a canonical
    // leaf-labeled tree for the labeled flavor.  n <= maxLeaves().
    Tree sample(int n, RngStream& rng) const;

    // The ordered carrier tree (labeled flavor: before leaf labeling).
    Tree sampleCarrier(int n, RngStream& rng) const;

    // Statistics of a draw; heights and profiles are invariant under both
    // leaf labeling and child reordering, so the carrier suffices.
    TreeStats sampleStats(int n, RngStream& rng) const;

    bool exactBackend() const { return exact_; }
    int maxLeaves() const { return maxN_; }

private:
    Tree drawExact(int n, RngStream& rng) const;
    Tree drawFloating(int n, RngStream& rng) const;

    WeightSeq zeta_;
    int maxN_;
    bool exact_ = true;
    detail::CompositionTable<Rational> exactTable_;
    detail::CompositionTable<double> floatTable_;
};

// One-shot conveniences; bulk callers should hold a CountingSampler.
Tree sampleOrdered(const WeightSeq& zeta, int n, RngStream& rng);
Tree sampleLabeled(const WeightSeq& zeta, int n, RngStream& rng);
Tree sampleFamily(Family f, int n, RngStream& rng);

// Conditioned Galton-Watson rejection sampling.  Throws RetryBudgetError
// (carrying the attempt count) when maxAttempts generations were aborted or
// rejected; callers should switch to the counting method for large n.
Tree sampleGWConditioned(const OffspringDist& xi, int n, bool labeled, RngStream& rng,
                         long long maxAttempts);

}  // namespace schroder
