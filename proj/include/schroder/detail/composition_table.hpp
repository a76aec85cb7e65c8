#pragma once

// Coefficient engine for the leaf-counting functional equation.
//
// Solves C(z) = w_0 z + sum_{j>=1} w_j C(z)^j coefficient by coefficient,
// where w_j are the flavor-folded degree weights (zeta_j for ordered trees,
// zeta_j/j! for labeled ones).  Coefficient m of the right-hand side depends
// only on coefficients < m of C (every child subtree holds at least one
// leaf), except for the j = 1 term which is solved by division.  The power
// rows S_j = C^j are kept because composition sampling draws root degrees
// and child sizes from them.
//
// Scalar is Rational for exact work.  The double instantiation is only ever
// fed critical offspring probabilities (a tilted weight sequence), so all
// table entries stay in [0, 1] and no scaling issues arise.

#include <stdexcept>
#include <utility>
#include <vector>

namespace schroder::detail {

template <class Scalar>
struct CompositionTable {
    std::vector<Scalar> w;                  // degree coefficients 0..order
    std::vector<Scalar> c;                  // c[m] = [z^m] C
    std::vector<std::vector<Scalar>> rows;  // rows[j][m] = [z^m] C^j, j <= jmax
    int order = 0;
    int jmax = 0;

    void build(std::vector<Scalar> weights, int N, int jcap) {
        if (static_cast<int>(weights.size()) != N + 1) {
            throw std::invalid_argument("CompositionTable: weights must have order+1 entries");
        }
        w = std::move(weights);
        order = N;
        jmax = std::min(jcap, N);
        if (jmax < 0) jmax = 0;
        c.assign(static_cast<std::size_t>(N) + 1, Scalar(0));
        rows.assign(static_cast<std::size_t>(jmax) + 1,
                    std::vector<Scalar>(static_cast<std::size_t>(N) + 1, Scalar(0)));
        rows[0][0] = Scalar(1);
        const bool unary = N >= 1 && w[1] != Scalar(0);
        for (int m = 1; m <= N; ++m) {
            const int jtop = std::min(m, jmax);
            for (int j = 2; j <= jtop; ++j) {
                Scalar acc(0);
                const auto& prev = rows[j - 1];
                for (int v = 1; v <= m - j + 1; ++v) acc += c[v] * prev[m - v];
                rows[j][m] = acc;
            }
            Scalar acc = (m == 1) ? w[0] : Scalar(0);
            for (int j = 2; j <= jtop; ++j) {
                if (w[j] != Scalar(0)) acc += w[j] * rows[j][m];
            }
            if (unary) acc = acc / (Scalar(1) - w[1]);
            c[m] = acc;
            if (jmax >= 1) rows[1][m] = c[m];
        }
    }
};

}  // namespace schroder::detail
