// Command-line interface: parsing and serializing bracketings, exact counts
// and enumeration, exact finite-n statistics, uniform sampling, asymptotic
// constants, and the Monte Carlo experiment harness.

#include "schroder/analytics.hpp"
#include "schroder/bracketing.hpp"
#include "schroder/counting.hpp"
#include "schroder/experiment.hpp"
#include "schroder/measures.hpp"
#include "schroder/sampling.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace schroder;

std::string readAll(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string trimWhitespace(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool isSetKind(BracketingKind k) {
    return k == BracketingKind::SetBinary || k == BracketingKind::SetGeneral;
}

int runParse(const std::string& kindName, const std::string& input) {
    const BracketingKind kind = bracketingKindFromName(kindName);
    Tree t;
    if (isSetKind(kind)) {
        t = parseSet(input);
        validateForKind(t, kind);
    } else {
        t = parseWord(input, kind);
    }
    std::cout << treeToJson(t).dump() << "\n";
    return 0;
}

int runSerialize(const std::string& kindName, const std::string& inputPath) {
    const BracketingKind kind = bracketingKindFromName(kindName);
    std::string text;
    if (inputPath.empty() || inputPath == "-") {
        text = readAll(std::cin);
    } else {
        std::ifstream in(inputPath);
        if (!in) throw std::runtime_error("cannot open " + inputPath);
        text = readAll(in);
    }
    const Tree t = treeFromJson(nlohmann::json::parse(text));
    if (isSetKind(kind)) {
        validateForKind(t, kind);
        std::cout << serializeSet(t) << "\n";
    } else {
        std::cout << serializeWord(t, kind) << "\n";
    }
    return 0;
}

int runCount(const std::string& familyName_, const std::vector<int>& ns) {
    const Family f = familyFromName(familyName_);
    int maxN = 1;
    for (int n : ns) {
        if (n < 1) throw std::invalid_argument("count: n must be >= 1");
        maxN = std::max(maxN, n);
    }
    const std::vector<BigInt> counts = familyCounts(f, maxN);
    for (int n : ns) std::cout << counts[static_cast<std::size_t>(n)] << "\n";
    return 0;
}

int runEnumerate(const std::string& familyName_, int n, const std::string& format) {
    const Family f = familyFromName(familyName_);
    const std::vector<Tree> trees = enumerateFamily(f, n);
    for (const Tree& t : trees) {
        if (format == "bracketing") {
            if (familyFlavor(f) == Flavor::Labeled) {
                std::cout << serializeSet(t) << "\n";
            } else {
                std::cout << serializeWord(t, familyBinary(f) ? BracketingKind::WordBinary
                                                              : BracketingKind::WordGeneral)
                          << "\n";
            }
        } else {
            std::cout << treeToJson(t).dump() << "\n";
        }
    }
    return 0;
}

int runExactStats(const std::string& familyName_, const std::string& stat, int n, int k) {
    const Family f = familyFromName(familyName_);
    const WeightSeq zeta = familyWeights(f);
    Rational value;
    if (stat == "leaf-profile") {
        value = exactLeafProfileExpectation(zeta, n, k);
    } else if (stat == "node-profile") {
        value = exactNodeProfileExpectation(zeta, n, k);
    } else if (stat == "sum-heights") {
        value = exactSumLeafHeightsExpectation(zeta, n);
    } else {
        throw std::invalid_argument("unknown stat: " + stat);
    }
    std::cout << formatRational(value) << "\n";
    return 0;
}

int runSample(const std::string& familyName_, int n, int count, std::uint64_t seed,
              const std::string& method, const std::string& format,
              const std::string& backendName, long long maxAttempts) {
    const Family f = familyFromName(familyName_);
    const bool labeled = familyFlavor(f) == Flavor::Labeled;

    auto emit = [&](const Tree& t) {
        if (format == "bracketing") {
            if (labeled) {
                std::cout << serializeSet(t) << "\n";
            } else {
                std::cout << serializeWord(t, familyBinary(f) ? BracketingKind::WordBinary
                                                              : BracketingKind::WordGeneral)
                          << "\n";
            }
        } else {
            std::cout << treeToJson(t).dump() << "\n";
        }
    };

    if (method == "gw") {
        const OffspringDist xi = familyOffspring(f);
        for (int i = 0; i < count; ++i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            emit(sampleGWConditioned(xi, n, labeled, rng, maxAttempts));
        }
        return 0;
    }
    SamplerOptions opts;
    if (backendName == "exact") {
        opts.backend = SamplerOptions::Backend::Exact;
    } else if (backendName == "floating") {
        opts.backend = SamplerOptions::Backend::Floating;
    }
    const CountingSampler sampler(familyWeights(f), n, opts);
    for (int i = 0; i < count; ++i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        emit(sampler.sample(n, rng));
    }
    return 0;
}

int runConstants(const std::string& familyName_, bool asJson) {
    const Family f = familyFromName(familyName_);
    const CharacteristicSolution sol = solveFamily(f);
    if (asJson) {
        nlohmann::ordered_json j;
        j["r"] = formatReal(sol.r);
        j["s"] = formatReal(sol.s);
        j["gamma"] = formatReal(sol.gamma);
        j["sigma2"] = formatReal(sol.sigma2);
        j["lambda"] = formatReal(sol.lambda);
        j["heightConst"] = formatReal(sol.heightConst);
        j["scalingConst"] = formatReal(sol.scalingConst);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    const OffspringDist xi = familyOffspring(f);
    std::cout << "family " << familyName(f) << "\n";
    const bool exactRational = f == Family::P1 || f == Family::P3;
    if (exactRational) {
        std::cout << "xi_0 = 1/2\nxi_2 = 1/2\n";
    } else {
        std::cout << "xi_0 = " << formatReal(xi.xi0()) << "\n";
        for (int j = 2; j <= 6; ++j) std::cout << "xi_" << j << " = " << formatReal(xi.prob(j)) << "\n";
        std::cout << "xi_j decays "
                  << (xi.tail == OffspringDist::Tail::Geometric ? "geometrically" : "factorially")
                  << " for larger j\n";
    }
    std::cout << "mean = " << formatReal(xi.mean) << "\n";
    std::cout << "variance = " << formatReal(xi.variance) << "\n";
    std::cout << "r = " << formatReal(sol.r) << "\n";
    std::cout << "s = " << formatReal(sol.s) << "\n";
    std::cout << "gamma = " << formatReal(sol.gamma) << "\n";
    std::cout << "lambda = " << formatReal(sol.lambda) << "\n";
    std::cout << "heightConst = " << formatReal(sol.heightConst) << "\n";
    std::cout << "scalingConst = " << formatReal(sol.scalingConst) << "\n";
    return 0;
}

int runExperiment(const std::string& mode, const std::string& familyName_, int n, int reps,
                  std::uint64_t seed, int kmax, const std::string& outPath,
                  const std::string& configPath) {
    const Family f = familyFromName(familyName_);
    ExperimentConfig cfg;
    if (!configPath.empty()) cfg = ExperimentConfig::fromFile(configPath);
    ExperimentReport rep;
    if (mode == "rayleigh") {
        rep = runRayleigh(f, n, reps, seed, cfg);
    } else if (mode == "height") {
        rep = runExpectedHeight(f, n, reps, seed, cfg);
    } else if (mode == "profile") {
        rep = runHeightProfile(f, n, kmax, reps, seed, cfg);
    } else {
        throw std::invalid_argument("unknown experiment: " + mode);
    }
    std::string payload;
    const bool csv = outPath.size() > 4 && outPath.substr(outPath.size() - 4) == ".csv";
    if (csv) {
        payload = rep.toCsv();
    } else {
        payload = rep.toJson().dump(2) + "\n";
    }
    if (outPath.empty() || outPath == "-") {
        std::cout << payload;
    } else {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + outPath);
        out << payload;
        std::cout << (rep.pass ? "PASS" : "FAIL") << " " << rep.experiment << " "
                  << familyName(f) << " n=" << n << " -> " << outPath << "\n";
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bracketing families: exact counting, uniform sampling, limit statistics"};
    app.require_subcommand(1);

    std::string familyArg = "P1";
    std::string kindArg = "word-general";
    std::string statArg = "leaf-profile";
    std::string methodArg = "counting";
    std::string formatArg = "json";
    std::string backendArg = "auto";
    std::string inputArg;
    std::string outArg;
    std::string configArg;
    std::string textArg;
    std::vector<int> nsArg;
    int nArg = 1;
    int kArg = 0;
    int kmaxArg = 5;
    int countArg = 1;
    int repsArg = 1000;
    std::uint64_t seedArg = 1;
    long long maxAttemptsArg = 10'000'000;
    bool jsonFlag = false;

    auto* parse = app.add_subcommand("parse", "parse a bracketing string to a JSON tree");
    parse->add_option("--kind", kindArg, "word-binary|word-general|set-binary|set-general");
    parse->add_option("input", textArg, "bracketing string")->required();

    auto* serialize = app.add_subcommand("serialize", "serialize a JSON tree to a bracketing string");
    serialize->add_option("--kind", kindArg, "word-binary|word-general|set-binary|set-general");
    serialize->add_option("--input", inputArg, "JSON file (default: stdin)");

    auto* count = app.add_subcommand("count", "exact number of trees, one line per n");
    count->add_option("--family", familyArg, "P1|P2|P3|P4")->required();
    count->add_option("--n", nsArg, "leaf counts")->required()->expected(-1);

    auto* enumerate = app.add_subcommand("enumerate", "stream all trees with n leaves");
    enumerate->add_option("--family", familyArg)->required();
    enumerate->add_option("--n", nArg)->required();
    enumerate->add_option("--format", formatArg, "json|bracketing");

    auto* exactStats = app.add_subcommand("exact-stats", "exact expectations as rationals");
    exactStats->add_option("--family", familyArg)->required();
    exactStats->add_option("--stat", statArg, "leaf-profile|node-profile|sum-heights")->required();
    exactStats->add_option("--n", nArg)->required();
    exactStats->add_option("--k", kArg, "height (profiles only)");

    auto* sample = app.add_subcommand("sample", "stream uniform samples");
    sample->add_option("--family", familyArg)->required();
    sample->add_option("--n", nArg)->required();
    sample->add_option("--count", countArg);
    sample->add_option("--seed", seedArg);
    sample->add_option("--method", methodArg, "counting|gw");
    sample->add_option("--format", formatArg, "json|bracketing");
    sample->add_option("--backend", backendArg, "auto|exact|floating (counting method)");
    sample->add_option("--max-attempts", maxAttemptsArg, "gw rejection budget");

    auto* constants = app.add_subcommand("constants", "offspring distribution and asymptotic constants");
    constants->add_option("--family", familyArg)->required();
    constants->add_flag("--json", jsonFlag, "emit {r,s,gamma,sigma2,lambda,heightConst,scalingConst}");

    auto* experiment = app.add_subcommand("experiment", "Monte Carlo checks of the limit laws");
    experiment->require_subcommand(1);
    std::string experimentMode;
    for (const char* m : {"rayleigh", "height", "profile"}) {
        auto* sub = experiment->add_subcommand(m);
        sub->add_option("--family", familyArg)->required();
        sub->add_option("--n", nArg)->required();
        sub->add_option("--reps", repsArg);
        sub->add_option("--seed", seedArg);
        sub->add_option("--kmax", kmaxArg, "profile only");
        sub->add_option("--out", outArg, "report path (.json or .csv; default stdout)");
        sub->add_option("--config", configArg, "tolerance overrides (key = value)");
        sub->callback([&experimentMode, m] { experimentMode = m; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse->parsed()) return runParse(kindArg, trimWhitespace(textArg));
        if (serialize->parsed()) return runSerialize(kindArg, inputArg);
        if (count->parsed()) return runCount(familyArg, nsArg);
        if (enumerate->parsed()) return runEnumerate(familyArg, nArg, formatArg);
        if (exactStats->parsed()) return runExactStats(familyArg, statArg, nArg, kArg);
        if (sample->parsed()) {
            return runSample(familyArg, nArg, countArg, seedArg, methodArg, formatArg, backendArg,
                             maxAttemptsArg);
        }
        if (constants->parsed()) return runConstants(familyArg, jsonFlag);
        if (experiment->parsed()) {
            return runExperiment(experimentMode, familyArg, nArg, repsArg, seedArg, kmaxArg, outArg,
                                 configArg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
