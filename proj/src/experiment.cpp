#include "schroder/experiment.hpp"

#include "schroder/counting.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace schroder {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string formatDouble(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Height of the leaf with the given rank (0-based, left to right in height
// order) read off the leaf profile.
int heightOfLeafRank(const TreeStats& stats, std::uint64_t rank) {
    std::uint64_t acc = 0;
    for (std::size_t h = 0; h < stats.leavesAtHeight.size(); ++h) {
        acc += stats.leavesAtHeight[h];
        if (rank < acc) return static_cast<int>(h);
    }
    return static_cast<int>(stats.leavesAtHeight.size()) - 1;
}

}  // namespace

ExperimentConfig ExperimentConfig::fromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    ExperimentConfig cfg;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config: missing '=' on line " + std::to_string(lineNo));
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "rayleigh.ks_tol") {
                cfg.rayleighKsTol = std::stod(value);
            } else if (key == "height.rel_tol") {
                cfg.heightRelTol = std::stod(value);
            } else if (key == "profile.rel_tol") {
                cfg.profileRelTol = std::stod(value);
            } else if (key == "exact.se_mult") {
                cfg.exactSeMult = std::stod(value);
            } else if (key == "asymptote.min_n") {
                cfg.asymptoteMinN = std::stoi(value);
            } else if (key == "exact.max_n") {
                cfg.exactMaxN = std::stoi(value);
            } else {
                throw std::runtime_error("config: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("config: bad value on line " + std::to_string(lineNo));
        }
    }
    return cfg;
}

nlohmann::ordered_json ExperimentReport::toJson() const {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["family"] = familyName(family);
    j["n"] = n;
    j["replicates"] = replicates;
    j["seed"] = seed;
    j["out_of_regime"] = outOfRegime;
    j["pass"] = pass;
    nlohmann::ordered_json rowsJson = nlohmann::ordered_json::array();
    for (const ReportRow& r : rows) {
        nlohmann::ordered_json rj;
        rj["statistic"] = r.statistic;
        if (r.k >= 0) {
            rj["k"] = r.k;
        } else {
            rj["k"] = nullptr;
        }
        rj["observed"] = r.observed;
        rj["reference"] = r.reference;
        rj["metric"] = r.metric;
        rj["metric_name"] = r.metricName;
        rj["enforced"] = r.enforced;
        rj["pass"] = r.pass;
        rowsJson.push_back(std::move(rj));
    }
    j["rows"] = std::move(rowsJson);
    return j;
}

std::string ExperimentReport::toCsv() const {
    std::ostringstream os;
    os << "statistic,k,observed,reference,metric,pass\n";
    for (const ReportRow& r : rows) {
        os << r.statistic << ",";
        if (r.k >= 0) os << r.k;
        os << "," << formatDouble(r.observed) << "," << formatDouble(r.reference) << ","
           << formatDouble(r.metric) << "," << (r.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

namespace {

void finalize(ExperimentReport& rep) {
    rep.pass = true;
    for (const ReportRow& r : rep.rows) rep.pass = rep.pass && r.pass;
}

}  // namespace

ExperimentReport runRayleigh(Family f, int n, int replicates, std::uint64_t seed,
                             const ExperimentConfig& cfg) {
    if (replicates < 1) throw std::invalid_argument("runRayleigh: replicates must be >= 1");
    ExperimentReport rep;
    rep.experiment = "rayleigh";
    rep.family = f;
    rep.n = n;
    rep.replicates = replicates;
    rep.seed = seed;
    rep.outOfRegime = n < 2;

    const CharacteristicSolution sol = solveFamily(f);
    const double lambda = static_cast<double>(sol.lambda);
    const CountingSampler sampler(familyWeights(f), n);
    const double sqrtN = std::sqrt(static_cast<double>(n));

    std::vector<double> xs(static_cast<std::size_t>(replicates));
    for (int i = 0; i < replicates; ++i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        const TreeStats stats = sampler.sampleStats(n, rng);
        const std::uint64_t rank = rng.below(stats.leaves);
        xs[static_cast<std::size_t>(i)] = lambda * heightOfLeafRank(stats, rank) / sqrtN;
    }
    const double ks = ksStatistic(std::move(xs), [](double x) { return rayleighCdf(x); });

    ReportRow row;
    row.statistic = "rayleigh_ks";
    row.observed = ks;
    row.reference = 0.0;
    row.metric = ks;
    row.metricName = "ks";
    row.pass = ks <= cfg.rayleighKsTol;
    rep.rows.push_back(row);
    finalize(rep);
    return rep;
}

ExperimentReport runExpectedHeight(Family f, int n, int replicates, std::uint64_t seed,
                                   const ExperimentConfig& cfg) {
    if (replicates < 1) throw std::invalid_argument("runExpectedHeight: replicates must be >= 1");
    ExperimentReport rep;
    rep.experiment = "height";
    rep.family = f;
    rep.n = n;
    rep.replicates = replicates;
    rep.seed = seed;
    rep.outOfRegime = n < 2;

    const CharacteristicSolution sol = solveFamily(f);
    const CountingSampler sampler(familyWeights(f), n);

    double sum = 0, sumSq = 0;
    for (int i = 0; i < replicates; ++i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        const TreeStats stats = sampler.sampleStats(n, rng);
        const std::uint64_t rank = rng.below(stats.leaves);
        const double h = heightOfLeafRank(stats, rank);
        sum += h;
        sumSq += h * h;
    }
    const double mean = sum / replicates;
    const double var = std::max(0.0, sumSq / replicates - mean * mean);
    const double se = std::sqrt(var / replicates);

    {
        ReportRow row;
        row.statistic = "mean_leaf_height";
        row.observed = mean;
        row.reference = static_cast<double>(sol.heightConst) * std::sqrt(static_cast<double>(n));
        row.metric = std::abs(row.observed - row.reference) / row.reference;
        row.metricName = "rel_err";
        row.enforced = n >= cfg.asymptoteMinN;
        row.pass = !row.enforced || row.metric <= cfg.heightRelTol;
        rep.rows.push_back(row);
    }
    if (n <= cfg.exactMaxN) {
        const Rational exact = exactSumLeafHeightsExpectation(familyWeights(f), n);
        ReportRow row;
        row.statistic = "mean_leaf_height_exact";
        row.observed = mean;
        row.reference = toDouble(exact) / n;
        const double diff = std::abs(row.observed - row.reference);
        row.metric = diff == 0 ? 0.0 : diff / (se > 0 ? se : 1e-300);
        row.metricName = "se_units";
        row.pass = row.metric <= cfg.exactSeMult;
        rep.rows.push_back(row);
    }
    finalize(rep);
    return rep;
}

ExperimentReport runHeightProfile(Family f, int n, int kmax, int replicates, std::uint64_t seed,
                                  const ExperimentConfig& cfg) {
    if (replicates < 1) throw std::invalid_argument("runHeightProfile: replicates must be >= 1");
    if (kmax < 0) throw std::invalid_argument("runHeightProfile: kmax must be >= 0");
    ExperimentReport rep;
    rep.experiment = "profile";
    rep.family = f;
    rep.n = n;
    rep.replicates = replicates;
    rep.seed = seed;

    const CharacteristicSolution sol = solveFamily(f);
    const CountingSampler sampler(familyWeights(f), n);

    std::vector<double> leafSum(static_cast<std::size_t>(kmax) + 1, 0.0);
    std::vector<double> leafSumSq(static_cast<std::size_t>(kmax) + 1, 0.0);
    std::vector<double> nodeSum(static_cast<std::size_t>(kmax) + 1, 0.0);
    std::vector<double> nodeSumSq(static_cast<std::size_t>(kmax) + 1, 0.0);
    for (int i = 0; i < replicates; ++i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        const TreeStats stats = sampler.sampleStats(n, rng);
        for (int k = 0; k <= kmax; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const double lv = kk < stats.leavesAtHeight.size()
                                  ? static_cast<double>(stats.leavesAtHeight[kk])
                                  : 0.0;
            const double nv = kk < stats.nodesAtHeight.size()
                                  ? static_cast<double>(stats.nodesAtHeight[kk])
                                  : 0.0;
            leafSum[kk] += lv;
            leafSumSq[kk] += lv * lv;
            nodeSum[kk] += nv;
            nodeSumSq[kk] += nv * nv;
        }
    }

    const bool exactRegime = n <= cfg.exactMaxN;
    SeriesContext ctx;
    if (exactRegime) ctx = makeSeriesContext(familyWeights(f), n);

    for (int k = 0; k <= kmax; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        const double leafMean = leafSum[kk] / replicates;
        const double nodeMean = nodeSum[kk] / replicates;
        const double leafSe = std::sqrt(
            std::max(0.0, leafSumSq[kk] / replicates - leafMean * leafMean) / replicates);
        const double nodeSe = std::sqrt(
            std::max(0.0, nodeSumSq[kk] / replicates - nodeMean * nodeMean) / replicates);

        if (k >= 1) {
            ReportRow row;
            row.statistic = "leaf_profile";
            row.k = k;
            row.observed = leafMean;
            row.reference = static_cast<double>(leafProfileAsymptote(sol, k));
            row.metric = std::abs(row.observed - row.reference) / row.reference;
            row.metricName = "rel_err";
            row.enforced = n >= cfg.asymptoteMinN;
            row.pass = !row.enforced || row.metric <= cfg.profileRelTol;
            rep.rows.push_back(row);
            if (exactRegime) {
                ReportRow er;
                er.statistic = "leaf_profile_exact";
                er.k = k;
                er.observed = leafMean;
                er.reference = toDouble(exactLeafProfileExpectation(ctx, n, k));
                const double diff = std::abs(er.observed - er.reference);
                er.metric = diff == 0 ? 0.0 : diff / (leafSe > 0 ? leafSe : 1e-300);
                er.metricName = "se_units";
                er.pass = er.metric <= cfg.exactSeMult;
                rep.rows.push_back(er);
            }
        }
        {
            ReportRow row;
            row.statistic = "node_profile";
            row.k = k;
            row.observed = nodeMean;
            row.reference = static_cast<double>(nodeProfileAsymptote(sol, k));
            row.metric = std::abs(row.observed - row.reference) / row.reference;
            row.metricName = "rel_err";
            // k = 0 is the root: exactly 1, always enforced.
            row.enforced = k == 0 || n >= cfg.asymptoteMinN;
            row.pass = !row.enforced || row.metric <= (k == 0 ? 0.0 : cfg.profileRelTol);
            rep.rows.push_back(row);
            if (exactRegime && k >= 1) {
                ReportRow er;
                er.statistic = "node_profile_exact";
                er.k = k;
                er.observed = nodeMean;
                er.reference = toDouble(exactNodeProfileExpectation(ctx, n, k));
                const double diff = std::abs(er.observed - er.reference);
                er.metric = diff == 0 ? 0.0 : diff / (nodeSe > 0 ? nodeSe : 1e-300);
                er.metricName = "se_units";
                er.pass = er.metric <= cfg.exactSeMult;
                rep.rows.push_back(er);
            }
        }
    }
    finalize(rep);
    return rep;
}

}  // namespace schroder
