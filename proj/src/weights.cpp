#include "schroder/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace schroder {

Rational WeightSeq::zeta(int i) const {
    if (i < 0) throw std::invalid_argument("WeightSeq::zeta: negative degree");
    if (i < static_cast<int>(head.size())) return head[i];
    if (tailCoef == 0) return 0;
    return tailCoef * rationalPow(tailRatio, static_cast<unsigned>(i));
}

int WeightSeq::maxSupportDegree(int cap) const {
    if (tailCoef != 0) return cap;
    int best = -1;
    for (int i = 0; i < static_cast<int>(head.size()); ++i) {
        if (head[i] != 0) best = i;
    }
    return std::min(best, cap);
}

void WeightSeq::validate() const {
    if (head.empty() || head[0] <= 0) throw std::invalid_argument("WeightSeq: zeta_0 must be positive");
    for (const Rational& z : head) {
        if (z < 0) throw std::invalid_argument("WeightSeq: weights must be non-negative");
    }
    if (tailCoef < 0 || tailRatio <= 0) {
        throw std::invalid_argument("WeightSeq: tail must be non-negative");
    }
    const Rational z1 = zeta(1);
    if (flavor == Flavor::Labeled && z1 != 0) {
        throw std::invalid_argument("WeightSeq: labeled sequences require zeta_1 = 0");
    }
    if (flavor == Flavor::Ordered && z1 >= 1) {
        throw std::invalid_argument("WeightSeq: ordered sequences require zeta_1 < 1");
    }
}

bool WeightSeq::aperiodic() const {
    if (tailCoef != 0) return true;  // tail support contains consecutive degrees
    int g = 0;
    for (int k = 2; k < static_cast<int>(head.size()); ++k) {
        if (head[k] != 0) g = std::gcd(g, k - 1);
    }
    return g == 1;
}

bool WeightSeq::meetsAnalyticRestrictions() const {
    return zeta(0) == 1 && zeta(1) == 0 && aperiodic();
}

std::vector<Rational> WeightSeq::degreeCoeffs(int order) const {
    std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
    BigInt fact = 1;
    for (int j = 0; j <= order; ++j) {
        if (j >= 2) fact *= j;
        Rational z = zeta(j);
        if (flavor == Flavor::Labeled && z != 0) z /= Rational(fact);
        g[j] = z;
    }
    return g;
}

namespace {

// e^x minus its first `terms` Taylor terms: sum_{j >= terms} x^j / j!.
Real expTail(const Real& x, int terms) {
    Real s = exp(x);
    Real term(1);
    for (int j = 0; j < terms; ++j) {
        s -= term;
        term *= x / (j + 1);
    }
    return s;
}

}  // namespace

Real WeightSeq::G(const Real& w) const {
    const int headEnd = static_cast<int>(head.size());
    Real s(0);
    Real wj(1);
    BigInt fact = 1;
    for (int j = 1; j < headEnd; ++j) {
        wj *= w;
        if (j >= 2) fact *= j;
        if (head[j] == 0) continue;
        Real term = toReal(head[j]) * wj;
        if (flavor == Flavor::Labeled) term /= Real(fact);
        s += term;
    }
    if (tailCoef != 0) {
        const int start = std::max(headEnd, 1);
        const Real u = toReal(tailRatio) * w;
        if (flavor == Flavor::Labeled) {
            s += toReal(tailCoef) * expTail(u, start);
        } else {
            if (abs(u) >= 1) throw std::domain_error("WeightSeq::G: outside radius of convergence");
            s += toReal(tailCoef) * pow(u, start) / (1 - u);
        }
    }
    return s;
}

Real WeightSeq::Gp(const Real& w) const {
    const int headEnd = static_cast<int>(head.size());
    Real s(0);
    Real wj(1);  // w^{j-1}
    BigInt fact = 1;
    for (int j = 1; j < headEnd; ++j) {
        if (j >= 2) {
            wj *= w;
            fact *= j - 1;
        }
        if (head[j] == 0) continue;
        Real term = toReal(head[j]) * wj;
        if (flavor == Flavor::Labeled) {
            term /= Real(fact);
        } else {
            term *= j;
        }
        s += term;
    }
    if (tailCoef != 0) {
        const int start = std::max(headEnd, 1);
        const Real rho = toReal(tailRatio);
        const Real u = rho * w;
        if (flavor == Flavor::Labeled) {
            s += toReal(tailCoef) * rho * expTail(u, start - 1);
        } else {
            if (abs(u) >= 1) throw std::domain_error("WeightSeq::Gp: outside radius of convergence");
            const Real um = 1 - u;
            s += toReal(tailCoef) * rho * (start * pow(u, start - 1) / um + pow(u, start) / (um * um));
        }
    }
    return s;
}

Real WeightSeq::Gpp(const Real& w) const {
    const int headEnd = static_cast<int>(head.size());
    Real s(0);
    Real wj(1);  // w^{j-2}
    BigInt fact = 1;
    for (int j = 2; j < headEnd; ++j) {
        if (j >= 3) {
            wj *= w;
            fact *= j - 2;
        }
        if (head[j] == 0) continue;
        Real term = toReal(head[j]) * wj;
        if (flavor == Flavor::Labeled) {
            term /= Real(fact);
        } else {
            term *= j * (j - 1);
        }
        s += term;
    }
    if (tailCoef != 0) {
        const int start = std::max(headEnd, 2);
        const Real rho = toReal(tailRatio);
        const Real u = rho * w;
        if (flavor == Flavor::Labeled) {
            s += toReal(tailCoef) * rho * rho * expTail(u, start - 2);
        } else {
            if (abs(u) >= 1) throw std::domain_error("WeightSeq::Gpp: outside radius of convergence");
            const Real um = 1 - u;
            const long J = start;
            s += toReal(tailCoef) * rho * rho *
                 (J * (J - 1) * pow(u, J - 2) / um + 2 * J * pow(u, J - 1) / (um * um) +
                  2 * pow(u, J) / (um * um * um));
        }
    }
    return s;
}

bool WeightSeq::hasFiniteRadius() const {
    return flavor == Flavor::Ordered && tailCoef != 0;
}

Real WeightSeq::radius() const {
    if (!hasFiniteRadius()) throw std::domain_error("WeightSeq::radius: G is entire");
    return 1 / toReal(tailRatio);
}

WeightSeq familyWeights(Family f) {
    WeightSeq w;
    switch (f) {
        case Family::P1:
            w.flavor = Flavor::Ordered;
            w.head = {1, 0, 1};
            break;
        case Family::P2:
            w.flavor = Flavor::Ordered;
            w.head = {1, 0};
            w.tailCoef = 1;
            break;
        case Family::P3:
            w.flavor = Flavor::Labeled;
            w.head = {1, 0, 1};
            break;
        case Family::P4:
            w.flavor = Flavor::Labeled;
            w.head = {1, 0};
            w.tailCoef = 1;
            break;
    }
    return w;
}

Flavor familyFlavor(Family f) {
    return (f == Family::P1 || f == Family::P2) ? Flavor::Ordered : Flavor::Labeled;
}

bool familyBinary(Family f) { return f == Family::P1 || f == Family::P3; }

std::string familyName(Family f) {
    switch (f) {
        case Family::P1: return "P1";
        case Family::P2: return "P2";
        case Family::P3: return "P3";
        case Family::P4: return "P4";
    }
    return "?";
}

Family familyFromName(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::toupper(c); });
    if (n == "P1") return Family::P1;
    if (n == "P2") return Family::P2;
    if (n == "P3") return Family::P3;
    if (n == "P4") return Family::P4;
    throw std::invalid_argument("unknown family: " + name);
}

}  // namespace schroder
