#pragma once

// Monte Carlo experiments confronting sampled trees with the limit laws and
// with exact finite-n expectations.
//
// Every run is fully reproducible from (family, n, replicates, seed):
// replicate i samples on its own RngStream(seed, i) and the aggregation is
// order-independent.  Asymptote comparisons are enforced only for
// n >= asymptoteMinN (the limit statements carry no finite-n rates; the
// tolerances are pilot calibrations); exact-series comparisons are added
// for n <= exactMaxN.

#include "schroder/analytics.hpp"
#include "schroder/sampling.hpp"
#include "schroder/stats.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schroder {

struct ExperimentConfig {
    double rayleighKsTol = 0.03;
    double heightRelTol = 0.05;
    double profileRelTol = 0.05;
    double exactSeMult = 3.0;
    int asymptoteMinN = 1000;
    int exactMaxN = 30;

    // Key-value text file: one `key = value` per line, '#' comments.
    // Keys: rayleigh.ks_tol, height.rel_tol, profile.rel_tol, exact.se_mult,
    // asymptote.min_n, exact.max_n.
    static ExperimentConfig fromFile(const std::string& path);
};

struct ReportRow {
    std::string statistic;
    int k = -1;  // height for profile rows; -1 when not applicable
    double observed = 0;
    double reference = 0;
    double metric = 0;
    std::string metricName;
    bool enforced = true;
    bool pass = true;
};

struct ExperimentReport {
    std::string experiment;
    Family family = Family::P1;
    int n = 0;
    int replicates = 0;
    std::uint64_t seed = 0;
    bool outOfRegime = false;
    std::vector<ReportRow> rows;
    bool pass = true;

    nlohmann::ordered_json toJson() const;
    std::string toCsv() const;
};

// KS distance between {lambda H_n / sqrt(n)} over sampled trees (one uniform
// leaf each) and the Rayleigh(1) CDF.
ExperimentReport runRayleigh(Family f, int n, int replicates, std::uint64_t seed,
                             const ExperimentConfig& cfg = {});

// Mean leaf height against heightConst sqrt(n), and against the exact
// series value for small n.
ExperimentReport runExpectedHeight(Family f, int n, int replicates, std::uint64_t seed,
                                   const ExperimentConfig& cfg = {});

// Mean number of leaves / vertices at heights k <= kmax against the linear
// asymptotes, and against exact series expectations for small n.
ExperimentReport runHeightProfile(Family f, int n, int kmax, int replicates, std::uint64_t seed,
                                  const ExperimentConfig& cfg = {});

}  // namespace schroder
