#include "schroder/counting.hpp"

#include "schroder/detail/composition_table.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace schroder {

TruncatedSeries seriesC(const WeightSeq& zeta, int order) {
    zeta.validate();
    if (order < 1) throw std::invalid_argument("seriesC: order must be >= 1");
    const int jcap = zeta.finiteSupport() ? zeta.maxSupportDegree(order) : order;
    detail::CompositionTable<Rational> table;
    table.build(zeta.degreeCoeffs(order), order, std::max(jcap, 0));
    return TruncatedSeries(std::move(table.c));
}

Rational weightedCount(const WeightSeq& zeta, int n) {
    if (n < 1) throw std::invalid_argument("weightedCount: n must be >= 1");
    const Rational cn = seriesC(zeta, n).coeff(n);
    if (zeta.flavor == Flavor::Labeled) return cn * Rational(factorial(static_cast<unsigned>(n)));
    return cn;
}

BigInt familyCount(Family f, int n) {
    const Rational count = weightedCount(familyWeights(f), n);
    if (denominator(count) != 1) {
        throw std::logic_error("familyCount: non-integer count");
    }
    return numerator(count);
}

std::vector<BigInt> familyCounts(Family f, int maxN) {
    const WeightSeq zeta = familyWeights(f);
    const TruncatedSeries C = seriesC(zeta, maxN);
    std::vector<BigInt> out(static_cast<std::size_t>(maxN) + 1);
    BigInt fact = 1;
    for (int n = 1; n <= maxN; ++n) {
        fact *= n;
        Rational count = C.coeff(n);
        if (zeta.flavor == Flavor::Labeled) count *= Rational(fact);
        if (denominator(count) != 1) throw std::logic_error("familyCounts: non-integer count");
        out[n] = numerator(count);
    }
    return out;
}

namespace {

// Cartesian product of per-child alternatives, appended to out.
void productRec(const std::vector<const std::vector<Tree>*>& lists, std::size_t idx,
                std::vector<Tree>& current, std::vector<Tree>& out) {
    if (idx == lists.size()) {
        out.push_back(node(current));
        return;
    }
    for (const Tree& option : *lists[idx]) {
        current.push_back(option);
        productRec(lists, idx + 1, current, out);
        current.pop_back();
    }
}

void compositionsRec(int remaining, int parts, std::vector<int>& sizes,
                     const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        sizes.push_back(remaining);
        emit(sizes);
        sizes.pop_back();
        return;
    }
    for (int v = 1; v <= remaining - parts + 1; ++v) {
        sizes.push_back(v);
        compositionsRec(remaining - v, parts - 1, sizes, emit);
        sizes.pop_back();
    }
}

void assignLabelsInOrder(Tree& t, const std::vector<int>& labels, std::size_t& next) {
    if (t.isLeaf()) {
        t.label = labels[next++];
        return;
    }
    for (Tree& c : t.children) assignLabelsInOrder(c, labels, next);
}

std::vector<Tree> enumerateLabeled(int n, bool binary) {
    const std::vector<Tree> shapes = enumerateOrdered(n, binary);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::map<std::string, Tree> seen;
    for (const Tree& shape : shapes) {
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i + 1);
        do {
            Tree t = shape;
            std::size_t next = 0;
            assignLabelsInOrder(t, perm, next);
            Tree canon = canonicalize(t);
            std::string key = canonicalKey(canon);
            seen.emplace(std::move(key), std::move(canon));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<Tree> out;
    out.reserve(seen.size());
    for (auto& [key, tree] : seen) out.push_back(std::move(tree));
    return out;
}

}  // namespace

std::vector<Tree> enumerateOrdered(int n, bool binary) {
    if (n < 1) throw std::invalid_argument("enumerateOrdered: n must be >= 1");
    std::vector<std::vector<Tree>> memo(static_cast<std::size_t>(n) + 1);
    memo[1] = {leaf()};
    for (int m = 2; m <= n; ++m) {
        std::vector<Tree> out;
        const int kmax = binary ? 2 : m;
        for (int k = 2; k <= kmax; ++k) {
            std::vector<int> sizes;
            compositionsRec(m, k, sizes, [&](const std::vector<int>& comp) {
                std::vector<const std::vector<Tree>*> lists;
                lists.reserve(comp.size());
                for (int v : comp) lists.push_back(&memo[static_cast<std::size_t>(v)]);
                std::vector<Tree> current;
                productRec(lists, 0, current, out);
            });
        }
        memo[static_cast<std::size_t>(m)] = std::move(out);
    }
    return memo[static_cast<std::size_t>(n)];
}

std::vector<Tree> enumerateFamily(Family f, int n, const EnumerationCaps& caps) {
    if (n < 1) throw std::invalid_argument("enumerateFamily: n must be >= 1");
    const bool labeled = familyFlavor(f) == Flavor::Labeled;
    const int cap = labeled ? caps.labeled : caps.ordered;
    if (n > cap) {
        throw EnumerationCapError("enumerateFamily: n exceeds the enumeration cap");
    }
    if (labeled) return enumerateLabeled(n, familyBinary(f));
    return enumerateOrdered(n, familyBinary(f));
}

SeriesContext makeSeriesContext(const WeightSeq& zeta, int order) {
    SeriesContext ctx;
    ctx.zeta = zeta;
    ctx.C = seriesC(zeta, order);
    // G'(w) as a series in w, then composed with C.
    TruncatedSeries g(order);
    const std::vector<Rational> coeffs = zeta.degreeCoeffs(order);
    for (int j = 1; j <= order; ++j) g.coeff(j) = coeffs[static_cast<std::size_t>(j)];
    TruncatedSeries gp = derivative(g);
    ctx.GpOfC = compose(gp, ctx.C);
    return ctx;
}

namespace {

Rational coefficientRatio(const SeriesContext& ctx, const Rational& num, int n) {
    const Rational cn = ctx.C.coeff(n);
    if (cn == 0) {
        throw UndefinedMeasureError("no trees of this size under the weight sequence");
    }
    return num / cn;
}

}  // namespace

Rational exactLeafProfileExpectation(const SeriesContext& ctx, int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("exactLeafProfileExpectation: bad arguments");
    if (n > ctx.C.order()) throw std::invalid_argument("exactLeafProfileExpectation: order too small");
    // Xi_k = zeta_0 z [G'(C)]^k; [z^n] Xi_k = zeta_0 [z^{n-1}] [G'(C)]^k.
    if (k == 0) return coefficientRatio(ctx, n == 1 ? ctx.zeta.zeta(0) : Rational(0), n);
    const TruncatedSeries p = power(ctx.GpOfC, k);
    return coefficientRatio(ctx, ctx.zeta.zeta(0) * p.coeff(n - 1), n);
}

Rational exactNodeProfileExpectation(const SeriesContext& ctx, int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("exactNodeProfileExpectation: bad arguments");
    if (n > ctx.C.order()) throw std::invalid_argument("exactNodeProfileExpectation: order too small");
    // Lambda_k = C [G'(C)]^k.
    const TruncatedSeries p = mul(ctx.C, power(ctx.GpOfC, k));
    return coefficientRatio(ctx, p.coeff(n), n);
}

Rational exactSumLeafHeightsExpectation(const SeriesContext& ctx, int n) {
    if (n < 1) throw std::invalid_argument("exactSumLeafHeightsExpectation: bad arguments");
    if (n > ctx.C.order()) throw std::invalid_argument("exactSumLeafHeightsExpectation: order too small");
    // The additive recursion phi(t) = |t| + sum_j phi(t_j) counts each leaf
    // once per ancestor-or-self, i.e. it generates phi + n with the
    // generating function z (C')^2.  The sum of leaf heights proper is
    // Phi = z (C')^2 - z C' = z C' (C' - 1).
    const TruncatedSeries d = derivative(ctx.C);
    const TruncatedSeries p = mul(d, d);
    return coefficientRatio(ctx, p.coeff(n - 1) - d.coeff(n - 1), n);
}

Rational exactLeafProfileExpectation(const WeightSeq& zeta, int n, int k) {
    return exactLeafProfileExpectation(makeSeriesContext(zeta, n), n, k);
}

Rational exactNodeProfileExpectation(const WeightSeq& zeta, int n, int k) {
    return exactNodeProfileExpectation(makeSeriesContext(zeta, n), n, k);
}

Rational exactSumLeafHeightsExpectation(const WeightSeq& zeta, int n) {
    return exactSumLeafHeightsExpectation(makeSeriesContext(zeta, n), n);
}

bool orderedLabelIdentityCheck(int n) {
    if (n < 1) throw std::invalid_argument("orderedLabelIdentityCheck: n must be >= 1");
    EnumerationCaps caps;
    caps.labeled = std::max(caps.labeled, n);
    caps.ordered = std::max(caps.ordered, n);
    const std::vector<Tree> labeledTrees = enumerateFamily(Family::P4, n, caps);
    const std::vector<Tree> orderedTrees = enumerateOrdered(n, false);

    std::unordered_map<std::string, std::vector<const Tree*>> byShape;
    for (const Tree& x : orderedTrees) byShape[canonicalKey(x)].push_back(&x);

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (const Tree& t : labeledTrees) {
        const Tree shape = canonicalize(forgetLabels(t));
        const std::string shapeKey = canonicalKey(shape);
        const std::string treeKey = canonicalKey(t);
        const auto it = byShape.find(shapeKey);
        if (it == byShape.end()) return false;
        const std::uint64_t numOrdered = it->second.size();

        // Count labelings of one fixed ordered representative matching t.
        const Tree& rep = *it->second.front();
        std::uint64_t numLabels = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i + 1);
        do {
            Tree cand = rep;
            std::size_t next = 0;
            assignLabelsInOrder(cand, perm, next);
            if (canonicalKey(canonicalize(cand)) == treeKey) ++numLabels;
        } while (std::next_permutation(perm.begin(), perm.end()));

        BigInt rhs = 1;
        std::vector<const Tree*> stack{&shape};
        while (!stack.empty()) {
            const Tree* v = stack.back();
            stack.pop_back();
            rhs *= factorial(static_cast<unsigned>(v->children.size()));
            for (const Tree& c : v->children) stack.push_back(&c);
        }
        if (BigInt(numOrdered) * BigInt(numLabels) != rhs) return false;
    }
    return true;
}

}  // namespace schroder
