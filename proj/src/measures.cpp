#include "schroder/measures.hpp"

#include <cmath>
#include <functional>

namespace schroder {

Rational treeWeight(const WeightSeq& zeta, const Tree& t) {
    Rational w = 1;
    std::vector<const Tree*> stack{&t};
    while (!stack.empty()) {
        const Tree* v = stack.back();
        stack.pop_back();
        w *= zeta.zeta(static_cast<int>(v->children.size()));
        for (const Tree& c : v->children) stack.push_back(&c);
    }
    return w;
}

Rational qProbability(const WeightSeq& zeta, const Tree& t) {
    const int n = static_cast<int>(leafCount(t));
    const Rational partition = weightedCount(zeta, n);
    if (partition == 0) throw UndefinedMeasureError("qProbability: zero partition sum");
    return treeWeight(zeta, t) / partition;
}

WeightSeq tilt(const WeightSeq& zeta, const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("tilt: a and b must be positive");
    WeightSeq out = zeta;
    if (!out.head.empty()) out.head[0] *= a;
    for (std::size_t i = 1; i < out.head.size(); ++i) {
        out.head[i] *= rationalPow(b, static_cast<unsigned>(i - 1));
    }
    out.tailCoef = zeta.tailCoef / b;
    out.tailRatio = zeta.tailRatio * b;
    return out;
}

Real OffspringDist::prob(int j) const {
    if (j < 0) throw std::invalid_argument("OffspringDist::prob: negative degree");
    if (j < static_cast<int>(probs.size())) return probs[static_cast<std::size_t>(j)];
    switch (tail) {
        case Tail::None:
            return Real(0);
        case Tail::Geometric:
            return tailCoef * pow(tailArg, j);
        case Tail::Factorial: {
            Real f = tailCoef * pow(tailArg, j);
            for (int i = 2; i <= j; ++i) f /= i;
            return f;
        }
    }
    return Real(0);
}

namespace {

// First index j (>= from) with cumulative(j) > the uniform window; the
// window [ulo, ulo+width) is narrowed with fresh 64-bit blocks whenever the
// comparison is ambiguous.  cumAt(j) must be nondecreasing.
template <class CumFn>
int resolveWindow(RngStream& rng, Real ulo, CumFn cumAt, int from, int hardCap) {
    Real width = ldexp(Real(1), -64);
    for (int j = from; j <= hardCap; ++j) {
        const Real cj = cumAt(j);
        for (;;) {
            if (cj <= ulo) break;                 // u >= cum_j: advance j
            if (cj >= ulo + width) return j;      // u < cum_j for the whole window
            ulo += ldexp(width * Real(rng.nextU64()), -64);
            width = ldexp(width, -64);
        }
    }
    return hardCap;  // cumulative numerically saturated
}

}  // namespace

int OffspringDist::sampleDegree(RngStream& rng) const {
    const std::uint64_t word = rng.nextU64();
    // Fast screen against the double cumulative; fall back to the exact
    // window comparison whenever the draw is within margin of a boundary.
    const double uLo = std::ldexp(static_cast<double>(word >> 11), -53);
    const double uHi = uLo + 0x1.0p-53;
    constexpr double margin = 1e-12;
    for (std::size_t j = 0; j < cumD.size(); ++j) {
        if (cumD[j] + margin <= uLo) continue;          // certainly cum_j <= u
        if (cumD[j] >= uHi + margin) return static_cast<int>(j);
        break;                                          // ambiguous
    }
    const Real ulo = ldexp(Real(word), -64);
    const int headEnd = static_cast<int>(probs.size());
    const int hardCap = 1 << 20;
    switch (tail) {
        case Tail::None:
            // cum.back() is pinned to 1, so the scan always resolves.
            return resolveWindow(
                rng, ulo, [&](int j) { return cum[static_cast<std::size_t>(j)]; }, 0, headEnd - 1);
        case Tail::Geometric: {
            // Closed-form jump into the geometric tail, then verify.
            int from = 0;
            Real base = cum.empty() ? Real(0) : cum.back();
            if (static_cast<double>(ulo) > static_cast<double>(base) + 1e-9) {
                const double q = static_cast<double>(tailArg);
                const double A = static_cast<double>(tailCoef);
                const double rem = static_cast<double>(ulo - base);
                // cum(j) - base = A q^h (1 - q^{j-h+1}) / (1-q), h = headEnd
                const double x = 1.0 - rem * (1.0 - q) / (A * std::pow(q, headEnd));
                if (x > 0) {
                    const int est = headEnd - 1 + static_cast<int>(std::floor(std::log(x) / std::log(q)));
                    from = std::max(headEnd, est - 2);
                }
            }
            auto cumAt = [&](int j) -> Real {
                if (j < headEnd) return cum[static_cast<std::size_t>(j)];
                return base + tailCoef * pow(tailArg, headEnd) *
                                  (1 - pow(tailArg, j - headEnd + 1)) / (1 - tailArg);
            };
            return resolveWindow(rng, ulo, cumAt, from, hardCap);
        }
        case Tail::Factorial: {
            auto cumAt = [&](int j) -> Real {
                if (j < headEnd) return cum[static_cast<std::size_t>(j)];
                Real acc = cum.empty() ? Real(0) : cum.back();
                Real term = prob(headEnd);
                for (int i = headEnd; i <= j; ++i) {
                    acc += term;
                    term *= tailArg / (i + 1);
                }
                return acc;
            };
            return resolveWindow(rng, ulo, cumAt, 0, hardCap);
        }
    }
    throw std::logic_error("OffspringDist::sampleDegree: unreachable");
}

OffspringDist offspringFromWeights(const WeightSeq& zeta, const Real& r, const Real& s) {
    zeta.validate();
    if (r <= 0 || s <= 0) throw std::invalid_argument("offspringFromWeights: r, s must be positive");
    const Real total = (toReal(zeta.zeta(0)) * r + zeta.G(s)) / s;
    if (abs(total - 1) > Real("1e-10")) {
        throw std::invalid_argument("offspringFromWeights: (r, s) does not satisfy s = r + G(s)");
    }
    const Real meanVal = zeta.Gp(s);
    if (meanVal > 1 + Real("1e-10")) {
        throw std::invalid_argument("offspringFromWeights: supercritical (G'(s) > 1)");
    }

    OffspringDist d;
    const int headSize = zeta.finiteSupport()
                             ? zeta.maxSupportDegree(1 << 20) + 1
                             : std::max<int>(static_cast<int>(zeta.head.size()), 48);
    const std::vector<Rational> g = zeta.degreeCoeffs(headSize - 1);
    d.probs.resize(static_cast<std::size_t>(headSize));
    d.probs[0] = toReal(zeta.zeta(0)) * r / s;
    Real spow(1);  // s^{j-1}
    for (int j = 1; j < headSize; ++j) {
        d.probs[static_cast<std::size_t>(j)] = spow * toReal(g[static_cast<std::size_t>(j)]);
        spow *= s;
    }
    if (!zeta.finiteSupport()) {
        const Real arg = s * toReal(zeta.tailRatio);
        d.tailCoef = toReal(zeta.tailCoef) / s;
        d.tailArg = arg;
        if (zeta.flavor == Flavor::Labeled) {
            d.tail = OffspringDist::Tail::Factorial;
        } else {
            if (arg >= 1) {
                throw std::invalid_argument("offspringFromWeights: geometric tail does not converge");
            }
            d.tail = OffspringDist::Tail::Geometric;
        }
    }
    d.cum.resize(d.probs.size());
    d.cumD.resize(d.probs.size());
    Real acc(0);
    for (std::size_t j = 0; j < d.probs.size(); ++j) {
        acc += d.probs[j];
        d.cum[j] = acc;
        d.cumD[j] = static_cast<double>(acc);
    }
    if (d.tail == OffspringDist::Tail::None && !d.cum.empty()) {
        d.cum.back() = 1;  // probabilities sum to 1 exactly on finite support
        d.cumD.back() = 1.0;
    }
    d.mean = meanVal;
    d.variance = s * zeta.Gpp(s) + meanVal - meanVal * meanVal;
    d.critical = abs(meanVal - 1) < Real("1e-10");
    return d;
}

OffspringDist uniformOrderedOffspring() {
    const Real sqrt2 = sqrt(Real(2));
    const Real s = 1 - sqrt2 / 2;
    const Real r = 3 - 2 * sqrt2;
    return offspringFromWeights(familyWeights(Family::P2), r, s);
}

OffspringDist familyOffspring(Family f) {
    switch (f) {
        case Family::P1:
            return offspringFromWeights(familyWeights(f), Real(1) / 4, Real(1) / 2);
        case Family::P2:
            return uniformOrderedOffspring();
        case Family::P3:
            return offspringFromWeights(familyWeights(f), Real(1) / 2, Real(1));
        case Family::P4: {
            const Real log2 = log(Real(2));
            return offspringFromWeights(familyWeights(f), 2 * log2 - 1, log2);
        }
    }
    throw std::logic_error("familyOffspring: unreachable");
}

bool GibbsModel::combinatorial() const {
    for (int n = 2; n <= maxN; ++n) {
        if (Z[static_cast<std::size_t>(n)] != g[static_cast<std::size_t>(n)]) return false;
    }
    return true;
}

namespace {

// Sum over integer partitions of n with at least two parts of
// alpha_k * (number of set partitions with these block sizes) * prod g(part).
Rational partitionSum(const GibbsModel& m, int n) {
    Rational total = 0;
    std::vector<int> parts;
    const BigInt nFact = factorial(static_cast<unsigned>(n));
    std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
        if (remaining == 0) {
            if (parts.size() < 2) return;
            BigInt denom = 1;
            int runLength = 1;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                denom *= factorial(static_cast<unsigned>(parts[i]));
                if (i > 0 && parts[i] == parts[i - 1]) {
                    ++runLength;
                } else {
                    runLength = 1;
                }
                denom *= runLength;  // accumulates mult! across equal runs
            }
            Rational term = Rational(nFact, denom) * m.alpha[parts.size()];
            for (int p : parts) term *= m.g[static_cast<std::size_t>(p)];
            total += term;
            return;
        }
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(n, n - 1);  // at least two parts, so no part can be n itself
    return total;
}

}  // namespace

GibbsModel gibbsFromWeights(const WeightSeq& zeta, int maxN) {
    zeta.validate();
    if (zeta.flavor != Flavor::Labeled) {
        throw std::invalid_argument("gibbsFromWeights: weights must be labeled-flavored");
    }
    if (zeta.zeta(1) != 0) throw std::invalid_argument("gibbsFromWeights: zeta_1 must be 0");
    if (maxN < 2) throw std::invalid_argument("gibbsFromWeights: maxN must be >= 2");
    constexpr int kPartitionCap = 40;
    if (maxN > kPartitionCap) {
        throw std::invalid_argument("gibbsFromWeights: maxN above partition-enumeration cap");
    }
    GibbsModel m;
    m.maxN = maxN;
    m.alpha.assign(static_cast<std::size_t>(maxN) + 1, Rational(0));
    for (int k = 2; k <= maxN; ++k) m.alpha[static_cast<std::size_t>(k)] = zeta.zeta(k);
    const TruncatedSeries C = seriesC(zeta, maxN);
    m.g.assign(static_cast<std::size_t>(maxN) + 1, Rational(0));
    BigInt fact = 1;
    for (int k = 1; k <= maxN; ++k) {
        fact *= k;
        m.g[static_cast<std::size_t>(k)] = C.coeff(k) * Rational(fact);
    }
    m.Z.assign(static_cast<std::size_t>(maxN) + 1, Rational(0));
    for (int n = 2; n <= maxN; ++n) m.Z[static_cast<std::size_t>(n)] = partitionSum(m, n);
    return m;
}

namespace {

Rational gibbsRec(const GibbsModel& m, const Tree& t, int& leavesOut) {
    if (t.isLeaf()) {
        leavesOut = 1;
        return 1;
    }
    const std::size_t k = t.children.size();
    if (k < 2) throw std::invalid_argument("gibbsTreeProbability: out-degree-1 vertex");
    Rational p = 1;
    int total = 0;
    for (const Tree& c : t.children) {
        int sub = 0;
        p *= gibbsRec(m, c, sub);
        p *= m.g[static_cast<std::size_t>(sub)];
        total += sub;
    }
    const Rational z = m.Z[static_cast<std::size_t>(total)];
    if (z == 0) throw UndefinedMeasureError("gibbsTreeProbability: zero normalization");
    p *= m.alpha[k] / z;
    leavesOut = total;
    return p;
}

}  // namespace

Rational gibbsTreeProbability(const GibbsModel& m, const Tree& t) {
    validateTree(t);
    if (!isLabeledTree(t)) {
        throw std::invalid_argument("gibbsTreeProbability: tree must be leaf-labeled");
    }
    if (static_cast<int>(leafCount(t)) > m.maxN) {
        throw std::invalid_argument("gibbsTreeProbability: tree larger than model");
    }
    int leaves = 0;
    return gibbsRec(m, t, leaves);
}

}  // namespace schroder
