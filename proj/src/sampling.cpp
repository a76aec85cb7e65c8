#include "schroder/sampling.hpp"

#include "schroder/analytics.hpp"

#include <algorithm>
#include <cmath>

namespace schroder {

namespace {

// Index drawn proportionally to exact rational weights: scale to a common
// denominator and pick a uniform big integer below the total.
std::size_t drawCategoricalExact(const std::vector<Rational>& weights, RngStream& rng) {
    BigInt common = 1;
    for (const Rational& q : weights) {
        if (q != 0) common = lcm(common, denominator(q));
    }
    std::vector<BigInt> scaled(weights.size());
    BigInt total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] != 0) {
            scaled[i] = numerator(weights[i]) * (common / denominator(weights[i]));
            total += scaled[i];
        }
    }
    if (total <= 0) throw std::logic_error("drawCategoricalExact: empty support");
    const BigInt u = rng.belowBig(total);
    BigInt acc = 0;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        acc += scaled[i];
        if (u < acc) return i;
    }
    return scaled.size() - 1;  // unreachable
}

}  // namespace

CountingSampler::CountingSampler(const WeightSeq& zeta, int maxLeaves, SamplerOptions opts)
    : zeta_(zeta), maxN_(maxLeaves) {
    zeta_.validate();
    if (maxLeaves < 1) throw std::invalid_argument("CountingSampler: maxLeaves must be >= 1");
    switch (opts.backend) {
        case SamplerOptions::Backend::Auto:
            exact_ = maxLeaves <= opts.exactMaxLeaves;
            break;
        case SamplerOptions::Backend::Exact:
            exact_ = true;
            break;
        case SamplerOptions::Backend::Floating:
            exact_ = false;
            break;
    }
    const int jcap =
        zeta_.finiteSupport() ? std::max(zeta_.maxSupportDegree(maxLeaves), 0) : maxLeaves;
    if (exact_) {
        exactTable_.build(zeta_.degreeCoeffs(maxLeaves), maxLeaves, jcap);
        return;
    }
    // Tilt to the critical offspring distribution so that the tables hold
    // probabilities: p_m = P(|T| = m), rows R_j = law of the total leaf
    // count of j independent trees.
    const auto [r, s] = solveCharacteristic(zeta_);
    const std::vector<Rational> g = zeta_.degreeCoeffs(maxLeaves);
    std::vector<double> xi(static_cast<std::size_t>(maxLeaves) + 1, 0.0);
    xi[0] = static_cast<double>(toReal(zeta_.zeta(0)) * r / s);
    Real spow(1);
    double headMass = xi[0];
    int cutoffDegree = jcap;
    for (int j = 1; j <= maxLeaves; ++j) {
        xi[static_cast<std::size_t>(j)] =
            static_cast<double>(spow * toReal(g[static_cast<std::size_t>(j)]));
        spow *= s;
        headMass += xi[static_cast<std::size_t>(j)];
        if (j >= 2 && 1.0 - headMass < opts.degreeTailCutoff) {
            cutoffDegree = std::min(cutoffDegree, j);
            break;
        }
    }
    floatTable_.build(std::move(xi), maxLeaves, cutoffDegree);
}

Tree CountingSampler::sampleCarrier(int n, RngStream& rng) const {
    if (n < 1 || n > maxN_) throw std::invalid_argument("CountingSampler: n out of range");
    return exact_ ? drawExact(n, rng) : drawFloating(n, rng);
}

Tree CountingSampler::sample(int n, RngStream& rng) const {
    Tree t = sampleCarrier(n, rng);
    if (zeta_.flavor == Flavor::Labeled) {
        return canonicalize(labelUniformly(t, rng));
    }
    return t;
}

TreeStats CountingSampler::sampleStats(int n, RngStream& rng) const {
    return treeStatistics(sampleCarrier(n, rng));
}

Tree CountingSampler::drawExact(int n, RngStream& rng) const {
    const auto& T = exactTable_;
    if (T.c[static_cast<std::size_t>(n)] == 0) {
        throw NoTreeOfSizeError("sample: no tree of this size under the weight sequence");
    }
    // Iterative expansion: frames carry the leaves still to place.
    struct Frame {
        Tree node;
        std::vector<int> childSizes;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    Tree root;
    bool haveRoot = false;

    auto expand = [&](int m) {
        // Degree k with weight w_k * [z^m] C^k (k = 0 only at m = 1).
        const int ktop = std::min(m, T.jmax);
        std::vector<Rational> wk(static_cast<std::size_t>(ktop) + 1, Rational(0));
        if (m == 1) wk[0] = zeta_.zeta(0);
        for (int k = 1; k <= ktop; ++k) {
            if (T.w[static_cast<std::size_t>(k)] != 0) {
                wk[static_cast<std::size_t>(k)] =
                    T.w[static_cast<std::size_t>(k)] * T.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
            }
        }
        const int k = static_cast<int>(drawCategoricalExact(wk, rng));
        Frame f;
        if (k == 0) {
            f.node = leaf();
            return f;
        }
        // Child sizes left to right: v with weight c_v * [z^{rem-v}] C^{j-1}.
        int rem = m;
        for (int j = k; j >= 1; --j) {
            if (j == 1) {
                f.childSizes.push_back(rem);
                break;
            }
            const int vmax = rem - (j - 1);
            std::vector<Rational> wv(static_cast<std::size_t>(vmax), Rational(0));
            const auto& row = T.rows[static_cast<std::size_t>(j - 1)];
            for (int v = 1; v <= vmax; ++v) {
                wv[static_cast<std::size_t>(v - 1)] =
                    T.c[static_cast<std::size_t>(v)] * row[static_cast<std::size_t>(rem - v)];
            }
            const int v = 1 + static_cast<int>(drawCategoricalExact(wv, rng));
            f.childSizes.push_back(v);
            rem -= v;
        }
        f.node.children.reserve(f.childSizes.size());
        return f;
    };

    stack.push_back(expand(n));
    while (!haveRoot) {
        Frame& top = stack.back();
        if (top.next == top.childSizes.size()) {
            Tree done = std::move(top.node);
            stack.pop_back();
            if (stack.empty()) {
                root = std::move(done);
                haveRoot = true;
            } else {
                stack.back().node.children.push_back(std::move(done));
                ++stack.back().next;
            }
            continue;
        }
        stack.push_back(expand(top.childSizes[top.next]));
    }
    return root;
}

Tree CountingSampler::drawFloating(int n, RngStream& rng) const {
    const auto& T = floatTable_;
    if (!(T.c[static_cast<std::size_t>(n)] > 0)) {
        throw NoTreeOfSizeError("sample: no tree of this size under the weight sequence");
    }
    struct Frame {
        Tree node;
        std::vector<int> childSizes;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    Tree root;
    bool haveRoot = false;

    auto expand = [&](int m) {
        Frame f;
        if (m == 1 && !(T.w[1] > 0)) {
            f.node = leaf();
            return f;
        }
        const int ktop = std::min(m, T.jmax);
        double total = (m == 1) ? T.w[0] : 0.0;
        for (int k = 1; k <= ktop; ++k) {
            total += T.w[static_cast<std::size_t>(k)] * T.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
        }
        double u = rng.nextUnit() * total;
        int k = -1;
        int lastPositive = -1;
        if (m == 1 && T.w[0] > 0) {
            lastPositive = 0;
            u -= T.w[0];
            if (u < 0) k = 0;
        }
        if (k < 0) {
            for (int kk = 1; kk <= ktop; ++kk) {
                const double wk =
                    T.w[static_cast<std::size_t>(kk)] * T.rows[static_cast<std::size_t>(kk)][static_cast<std::size_t>(m)];
                if (wk <= 0) continue;
                lastPositive = kk;
                u -= wk;
                if (u < 0) {
                    k = kk;
                    break;
                }
            }
            if (k < 0) k = lastPositive;  // fp residue: keep last positive-weight degree
        }
        if (k == 0) {
            f.node = leaf();
            return f;
        }
        int rem = m;
        for (int j = k; j >= 1; --j) {
            if (j == 1) {
                f.childSizes.push_back(rem);
                break;
            }
            const auto& row = T.rows[static_cast<std::size_t>(j - 1)];
            const int vmax = rem - (j - 1);
            const double totalV = T.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(rem)];
            double uv = rng.nextUnit() * totalV;
            // The split law piles up near both ends, so scan the two ends
            // alternately; expected work O(sqrt(rem)).
            int lo = 1, hi = vmax;
            int v = -1;
            int lastPos = -1;
            bool fromLow = true;
            while (lo <= hi) {
                const int cand = fromLow ? lo : hi;
                const double wv =
                    T.c[static_cast<std::size_t>(cand)] * row[static_cast<std::size_t>(rem - cand)];
                if (fromLow) {
                    ++lo;
                } else {
                    --hi;
                }
                fromLow = !fromLow;
                if (wv <= 0) continue;
                lastPos = cand;
                uv -= wv;
                if (uv < 0) {
                    v = cand;
                    break;
                }
            }
            if (v < 0) v = lastPos;  // fp residue
            f.childSizes.push_back(v);
            rem -= v;
        }
        f.node.children.reserve(f.childSizes.size());
        return f;
    };

    stack.push_back(expand(n));
    while (!haveRoot) {
        Frame& top = stack.back();
        if (top.next == top.childSizes.size()) {
            Tree done = std::move(top.node);
            stack.pop_back();
            if (stack.empty()) {
                root = std::move(done);
                haveRoot = true;
            } else {
                stack.back().node.children.push_back(std::move(done));
                ++stack.back().next;
            }
            continue;
        }
        stack.push_back(expand(top.childSizes[top.next]));
    }
    return root;
}

Tree sampleOrdered(const WeightSeq& zeta, int n, RngStream& rng) {
    if (zeta.flavor != Flavor::Ordered) {
        throw std::invalid_argument("sampleOrdered: weights must be ordered-flavored");
    }
    return CountingSampler(zeta, n).sample(n, rng);
}

Tree sampleLabeled(const WeightSeq& zeta, int n, RngStream& rng) {
    if (zeta.flavor != Flavor::Labeled) {
        throw std::invalid_argument("sampleLabeled: weights must be labeled-flavored");
    }
    return CountingSampler(zeta, n).sample(n, rng);
}

Tree sampleFamily(Family f, int n, RngStream& rng) {
    return CountingSampler(familyWeights(f), n).sample(n, rng);
}

Tree sampleGWConditioned(const OffspringDist& xi, int n, bool labeled, RngStream& rng,
                         long long maxAttempts) {
    if (n < 1) throw std::invalid_argument("sampleGWConditioned: n must be >= 1");
    if (maxAttempts < 1) throw std::invalid_argument("sampleGWConditioned: maxAttempts must be >= 1");
    const bool noUnary = xi.prob(1) == 0;
    const long long vertexCap =
        noUnary ? 2LL * n - 1 : std::max<long long>(64LL * n, 4096);

    struct Frame {
        Tree node;
        int remaining;
    };

    for (long long attempt = 1; attempt <= maxAttempts; ++attempt) {
        long long leaves = 0;
        long long vertices = 0;
        bool aborted = false;
        Tree result;
        bool complete = false;
        std::vector<Frame> stack;

        auto spawn = [&]() -> bool {  // returns false on abort
            const int d = xi.sampleDegree(rng);
            ++vertices;
            if (vertices > vertexCap) return false;
            if (d == 0) {
                ++leaves;
                if (leaves > n) return false;
                if (stack.empty()) {
                    result = leaf();
                    complete = true;
                } else {
                    stack.back().node.children.push_back(leaf());
                    --stack.back().remaining;
                }
            } else {
                stack.push_back(Frame{Tree{}, d});
            }
            return true;
        };

        if (!spawn()) continue;
        while (!complete && !aborted) {
            if (stack.empty()) break;
            Frame& top = stack.back();
            if (top.remaining == 0) {
                Tree done = std::move(top.node);
                stack.pop_back();
                if (stack.empty()) {
                    result = std::move(done);
                    complete = true;
                } else {
                    stack.back().node.children.push_back(std::move(done));
                    --stack.back().remaining;
                }
                continue;
            }
            if (!spawn()) aborted = true;
        }
        if (!complete || aborted || leaves != n) continue;
        if (labeled) return canonicalize(labelUniformly(result, rng));
        return result;
    }
    throw RetryBudgetError("sampleGWConditioned: retry budget exhausted", maxAttempts);
}

}  // namespace schroder
