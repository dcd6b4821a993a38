// Acceptance gate: ten criteria, one [PASS]/[FAIL] line each, nonzero exit on
// any failure. Every parameter and tolerance is pinned here, in code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "uefs/aggregation.hpp"
#include "uefs/cart.hpp"
#include "uefs/dataset.hpp"
#include "uefs/ensemble.hpp"
#include "uefs/imputation.hpp"
#include "uefs/metrics.hpp"
#include "uefs/pipeline.hpp"
#include "uefs/rng.hpp"
#include "uefs/synthetic.hpp"

using namespace uefs;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// ------------------------------------------------------------- criterion 1

Outcome aucOracleEquivalence() {
    const int instances = 200;
    const double tol = 1e-12;
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
        Rng rng(9000 + static_cast<uint64_t>(i));
        const size_t n = 2 + rng.below(49);  // up to 50
        std::vector<double> scores(n);
        for (double& s : scores) {
            s = i % 2 == 0 ? std::floor(rng.unit() * 5.0) / 5.0 : rng.unit();
        }
        std::vector<int> labels(n);
        for (int& y : labels) y = static_cast<int>(rng.below(2));
        labels[0] = 1;
        labels[1] = 0;
        const double gap = std::abs(auc(scores, labels) - oracle::trapezoidAuc(scores, labels));
        worst = std::max(worst, gap);
        if (gap > tol) {
            return {false, "instance " + std::to_string(i) + " off by " + str(gap)};
        }
    }
    return {true, "200 instances, max |gap| " + str(worst) + " <= 1e-12"};
}

// ------------------------------------------------------------- criterion 2

Outcome cartOracleEquivalence() {
    const int instances = 50;
    for (int i = 0; i < instances; ++i) {
        Rng rng(9100 + static_cast<uint64_t>(i));
        const size_t rows = 5 + rng.below(36);  // up to 40
        const size_t cols = 1 + rng.below(5);   // up to 5
        const int depth = 1 + static_cast<int>(rng.below(3));  // up to 3

        Matrix x(rows, cols);
        for (size_t c = 0; c < cols; ++c) {
            const bool lumpy = rng.below(2) == 0;  // quantized columns force ties
            for (size_t r = 0; r < rows; ++r) {
                x.at(r, c) = lumpy ? std::floor(rng.unit() * 4.0) : rng.unit();
            }
        }
        std::vector<int> y(rows);
        for (int& v : y) v = static_cast<int>(rng.below(2));
        y[0] = 1;
        y[1] = 0;

        TreeParams params;
        params.maxDepth = depth;
        const Tree tree = Tree::fit(x, y, params);
        const oracle::OracleTree ref = oracle::fitExhaustive(x, y, depth);

        const TreeNode& root = tree.nodes()[0];
        const oracle::OracleNode& refRoot = ref.nodes[0];
        if (root.leaf != refRoot.leaf) {
            return {false, "instance " + std::to_string(i) + ": root leaf-flag mismatch"};
        }
        if (!root.leaf &&
            (root.feature != refRoot.feature || root.threshold != refRoot.threshold)) {
            return {false, "instance " + std::to_string(i) + ": root split mismatch"};
        }
        if (tree.predict(x) != ref.predict(x)) {
            return {false, "instance " + std::to_string(i) + ": training predictions differ"};
        }
    }
    return {true, "50 datasets: root splits and training predictions exact"};
}

// ------------------------------------------------------------- criterion 3

struct AggregationInstance {
    std::vector<std::vector<int>> rankLists;
    std::vector<std::vector<int>> positiveSets;
    std::vector<double> aucs;
    std::vector<double> accuracies;
    std::vector<double> missingRates;
    std::vector<double> deltas;
    size_t features = 0;
    int k = 1;
};

AggregationInstance makeAggregationInstance(uint64_t seed, bool quantized) {
    Rng rng(seed);
    AggregationInstance inst;
    const size_t ways = 1 + rng.below(9);
    inst.features = 1 + rng.below(12);
    inst.k = 1 + static_cast<int>(rng.below(inst.features + 2));
    for (size_t w = 0; w < ways; ++w) {
        std::vector<int> perm(inst.features);
        for (size_t i = 0; i < inst.features; ++i) perm[i] = static_cast<int>(i) + 1;
        rng.shuffle(perm);
        inst.rankLists.push_back(perm);
        std::vector<int> set;
        for (size_t f = 0; f < inst.features; ++f) {
            if (rng.bernoulli(0.5)) set.push_back(static_cast<int>(f));
        }
        inst.positiveSets.push_back(set);
        // Quantized weights manufacture exact score ties, exercising the
        // lower-index tie-break.
        inst.aucs.push_back(quantized ? rng.below(5) / 4.0 : rng.unit());
        inst.accuracies.push_back(quantized ? rng.below(5) / 4.0 : rng.unit());
    }
    for (size_t f = 0; f < inst.features; ++f) {
        inst.missingRates.push_back(quantized ? rng.below(3) / 2.0 : rng.unit());
        inst.deltas.push_back(quantized ? rng.below(4) / 2.0 : rng.unit() * 2.0);
    }
    return inst;
}

Outcome aggregationOracleEquivalence() {
    const VarianceWeightParams maaParams(1.0, 2.0);
    const VarianceWeightParams eaaParams(0.5, 2.0);
    for (int i = 0; i < 100; ++i) {
        const AggregationInstance inst =
            makeAggregationInstance(9200 + static_cast<uint64_t>(i), i % 2 == 0);
        const size_t f = inst.features;
        const size_t ways = inst.rankLists.size();

        std::vector<double> claScores(f, 0.0), wmaScores(f, 0.0), ofaScores(f, 0.0),
            caaScores(f, 0.0), maaScores(f, 0.0), eaaScores(f, 0.0);
        for (size_t w = 0; w < ways; ++w) {
            for (size_t j = 0; j < f; ++j) {
                claScores[j] += inst.rankLists[w][j];
                wmaScores[j] += (1.0 - inst.aucs[w]) * inst.rankLists[w][j];
            }
            for (int s : inst.positiveSets[w]) {
                const auto j = static_cast<size_t>(s);
                ofaScores[j] += 1.0;
                caaScores[j] += inst.accuracies[w];
                maaScores[j] += inst.accuracies[w] /
                                std::pow(inst.missingRates[j] + maaParams.alpha, maaParams.beta);
                eaaScores[j] += inst.accuracies[w] /
                                std::pow(inst.deltas[j] + eaaParams.alpha, eaaParams.beta);
            }
        }

        const bool ok =
            cla(inst.rankLists, inst.k).selected == oracle::topK(claScores, inst.k, false) &&
            wma(inst.rankLists, inst.aucs, inst.k).selected ==
                oracle::topK(wmaScores, inst.k, false) &&
            ofa(inst.positiveSets, f, inst.k).selected ==
                oracle::topK(ofaScores, inst.k, true) &&
            caa(inst.positiveSets, inst.accuracies, f, inst.k).selected ==
                oracle::topK(caaScores, inst.k, true) &&
            maa(inst.positiveSets, inst.accuracies, inst.missingRates, maaParams, inst.k)
                    .selected == oracle::topK(maaScores, inst.k, true) &&
            eaa(inst.positiveSets, inst.accuracies, inst.deltas, eaaParams, inst.k).selected ==
                oracle::topK(eaaScores, inst.k, true);
        if (!ok) {
            return {false, "instance " + std::to_string(i) + ": a selection diverged"};
        }
    }
    return {true, "100 instances, all six methods, tie-breaks included"};
}

// ------------------------------------------------------------- criterion 4

Outcome imputationContracts() {
    for (int i = 0; i < 100; ++i) {
        Rng rng(9300 + static_cast<uint64_t>(i));
        const size_t rows = 4 + rng.below(22);  // up to 25
        size_t numCols = rng.below(4);
        size_t catCols = rng.below(3);
        if (numCols + catCols == 0) catCols = 1;
        const double rate = i % 10 == 0 ? 0.0 : rng.unit() * 0.5;
        const Dataset d =
            fixtures::randomTable(rows, numCols, catCols, rate, 9400 + static_cast<uint64_t>(i));
        const int k = 1 + static_cast<int>(rng.below(std::min<size_t>(3, rows - 1)));

        for (int which = 0; which < 2; ++which) {
            const Dataset filled = which == 0 ? imputeMean(d) : imputeSimilarity(d, k);
            if (filled.rowCount() != d.rowCount() || filled.featureCount() != d.featureCount()) {
                return {false, "instance " + std::to_string(i) + ": shape changed"};
            }
            if (filled.missingCellCount() != 0) {
                return {false, "instance " + std::to_string(i) + ": missing cells remain"};
            }
            for (size_t r = 0; r < d.rowCount(); ++r) {
                for (size_t f = 0; f < d.featureCount(); ++f) {
                    if (d.cell(r, f) && *d.cell(r, f) != *filled.cell(r, f)) {
                        return {false, "instance " + std::to_string(i) + ": present cell moved"};
                    }
                    if (rate == 0.0 && d.cell(r, f) != filled.cell(r, f)) {
                        return {false,
                                "instance " + std::to_string(i) + ": not identity on complete"};
                    }
                }
            }
        }
    }

    for (int i = 0; i < 20; ++i) {
        const size_t rows = 6 + (static_cast<size_t>(i) % 10);  // up to 15
        const Dataset d = fixtures::randomTable(rows, 2, 2, 0.3, 9500 + static_cast<uint64_t>(i));
        const Dataset filled = imputeSimilarity(d, 2);
        const auto fills = oracle::knnFills(d, 2);
        if (fills.size() != d.missingCellCount()) {
            return {false, "instance " + std::to_string(i) + ": oracle fill count mismatch"};
        }
        for (const auto& [key, value] : fills) {
            if (*filled.cell(key.first, key.second) != value) {
                return {false, "instance " + std::to_string(i) + ": a knn fill diverged"};
            }
        }
    }
    return {true, "contracts on 100 masked datasets; knn fills exact on 20 instances"};
}

// ------------------------------------------------------------- criterion 5

Outcome balanceAndVoting() {
    // Exact way balance.
    std::vector<int> labels(67, 0);
    for (size_t i = 0; i < 7; ++i) labels[3 + i * 9] = 1;
    for (const auto& rows : makeWays(labels, 91, 5501)) {
        if (rows.size() != 14) return {false, "a way is not class-sized"};
        size_t pos = 0;
        for (size_t r : rows) pos += static_cast<size_t>(labels[r]);
        if (pos != 7) return {false, "a way is not class-balanced"};
    }

    // Vote totality at 91 trees.
    Rng rng(5502);
    std::vector<Cell> cells(67 * 5);
    for (auto& c : cells) c = rng.normal();
    const Dataset d = fixtures::table("nnnnn", std::move(cells), labels);
    EnsembleConfig cfg;
    cfg.nWays = 91;
    cfg.cvFolds = 5;
    cfg.seed = 5502;
    const auto models = fitWays(d, makeWays(d, cfg.nWays, cfg.seed), cfg);
    std::vector<Tree> trees;
    for (const auto& m : models) trees.push_back(m.tree);
    const Matrix fresh = fixtures::randomMatrix(100, 5, 5503);
    const auto fractions = positiveVoteFraction(trees, fresh);
    const auto votes = majorityVote(trees, fresh);
    for (size_t r = 0; r < fresh.rows; ++r) {
        const double count = fractions[r] * 91.0;
        if (std::abs(count - std::round(count)) > 1e-9 || fractions[r] == 0.5 ||
            votes[r] != (fractions[r] > 0.5 ? 1 : 0)) {
            return {false, "vote fraction row " + std::to_string(r) + " not total"};
        }
    }

    // 91-way end-to-end bit-determinism.
    PipelineConfig pcfg;
    pcfg.synth.nPos = 15;
    pcfg.synth.nNeg = 135;
    pcfg.synth.nInformative = 5;
    pcfg.synth.nNoiseNumerical = 20;
    pcfg.synth.nNoiseCategorical = 5;
    pcfg.synth.effectSize = 1.5;
    pcfg.synth.missing.maxRate = 0.3;
    pcfg.ensemble.nWays = 91;
    pcfg.ensemble.nFeatures = 8;
    pcfg.ensemble.cvFolds = 5;
    pcfg.ensemble.seed = 5504;
    const auto base = std::filesystem::temp_directory_path();
    const auto dir1 = base / "uefs_accept_det1";
    const auto dir2 = base / "uefs_accept_det2";
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
    pcfg.outDir = dir1.string();
    runPipeline(pcfg);
    pcfg.outDir = dir2.string();
    runPipeline(pcfg);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    for (const char* name : {"selected_features.json", "eval_report.json", "summary.txt"}) {
        if (slurp(dir1 / name).empty() || slurp(dir1 / name) != slurp(dir2 / name)) {
            return {false, std::string(name) + " differs between identical runs"};
        }
    }
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
    return {true, "ways balanced; 91-vote total; repeated 91-way runs byte-identical"};
}

// ----------------------------------------------------- criteria 6 through 9

struct BenchSeedResult {
    double aucCaa = 0.0;
    double aucEaa = 0.0;
    double aucRandom = 0.0;
    double aucOneWay = 0.0;
    double missMaa = 0.0;
    double missCaa = 0.0;
    double deltaEaa = 0.0;
    double deltaCaa = 0.0;
};

struct BenchResults {
    std::vector<BenchSeedResult> seeds;
    double elapsed = 0.0;
};

// Summed in index order so selections with equal membership compare exactly
// equal regardless of score ordering.
double meanAt(std::vector<int> selected, const std::vector<double>& values) {
    std::sort(selected.begin(), selected.end());
    double sum = 0.0;
    for (int f : selected) sum += values[static_cast<size_t>(f)];
    return sum / static_cast<double>(selected.size());
}

// The shared benchmark behind criteria 6-9: missingness correlated with
// informativeness (ramp 0 -> 0.5 within each block), effect size 1.5,
// 60/540 rows, 200 features of which 20 are informative, 20 seeds, 91 ways,
// 10-fold CV. The selection size sits a few slots above the informative
// count: the marginal picks then come from the weak-candidate pool, where
// the completeness/entropy discounts decide membership — with k at exactly
// the informative count the methods pick identical sets in many seeds and
// the strict per-seed inequalities of criteria 7/8 degenerate to ties.
constexpr int kBenchSelect = 24;

BenchResults runAcceptanceBench() {
    const auto start = Clock::now();
    BenchResults out;
    for (int s = 0; s < 20; ++s) {
        const uint64_t seed = 7000 + static_cast<uint64_t>(s);
        SyntheticSpec spec;
        spec.nPos = 60;
        spec.nNeg = 540;
        spec.nInformative = 20;
        spec.nNoiseNumerical = 150;
        spec.nNoiseCategorical = 30;
        spec.effectSize = 1.5;
        spec.missing.maxRate = 0.5;
        spec.missingLink = MissingLink::Informativeness;
        spec.seed = seed;

        const Dataset raw = generateSynthetic(spec).first;
        const Dataset filtered = filterByCompletion(raw, 0.5);
        const auto rates = completionStats(filtered).perFeatureMissingRate;
        const Dataset imputed = imputeMean(filtered);
        const auto deltas = entropyDelta(filtered, imputed, 10);
        const size_t f = filtered.featureCount();

        EnsembleConfig cfg;
        cfg.nWays = 91;
        cfg.cvFolds = 10;
        cfg.seed = seed;
        const auto models = fitWays(imputed, makeWays(imputed, cfg.nWays, cfg.seed), cfg, false);
        std::vector<std::vector<int>> sets;
        std::vector<double> accs;
        for (const auto& m : models) {
            sets.push_back(m.positiveSet);
            accs.push_back(m.cvAccuracy);
        }

        const auto selCaa = caa(sets, accs, f, kBenchSelect).selected;
        const auto selMaa =
            maa(sets, accs, rates, VarianceWeightParams(1.0, 2.0), kBenchSelect).selected;
        const auto selEaa =
            eaa(sets, accs, deltas, VarianceWeightParams(0.5, 2.0), kBenchSelect).selected;
        Rng baseline(subSeed(seed, seedtag::kBaselineSelect));
        std::vector<int> selRandom;
        for (size_t pick : baseline.sampleWithoutReplacement(f, kBenchSelect)) {
            selRandom.push_back(static_cast<int>(pick));
        }

        BenchSeedResult r;
        r.aucCaa = evaluate(imputed, selCaa, cfg).aucScoreBased;
        r.aucEaa = evaluate(imputed, selEaa, cfg).aucScoreBased;
        r.aucRandom = evaluate(imputed, selRandom, cfg).aucScoreBased;
        EnsembleConfig oneWay = cfg;
        oneWay.nWays = 1;
        r.aucOneWay = evaluate(imputed, selCaa, oneWay).aucScoreBased;
        r.missMaa = meanAt(selMaa, rates);
        r.missCaa = meanAt(selCaa, rates);
        r.deltaEaa = meanAt(selEaa, deltas);
        r.deltaCaa = meanAt(selCaa, deltas);
        out.seeds.push_back(r);
    }
    out.elapsed = secondsSince(start);
    return out;
}

Outcome orderingCriterion(const BenchResults& bench) {
    double caaSum = 0.0, eaaSum = 0.0, randomSum = 0.0;
    for (const auto& r : bench.seeds) {
        caaSum += r.aucCaa;
        eaaSum += r.aucEaa;
        randomSum += r.aucRandom;
    }
    const double n = static_cast<double>(bench.seeds.size());
    const double caaMean = caaSum / n, eaaMean = eaaSum / n, randomMean = randomSum / n;
    const bool pass = eaaMean >= caaMean - 0.02 && caaMean >= randomMean + 0.10;
    return {pass, "mean auc over 20 seeds: eaa " + str(eaaMean) + ", caa " + str(caaMean) +
                      ", random " + str(randomMean)};
}

Outcome missingRateCriterion(const BenchResults& bench) {
    int wins = 0;
    for (const auto& r : bench.seeds) wins += r.missMaa < r.missCaa ? 1 : 0;
    return {wins * 5 >= static_cast<int>(bench.seeds.size()) * 4,
            "maa selected lower mean missing rate than caa in " + std::to_string(wins) + "/20 seeds"};
}

Outcome entropyCriterion(const BenchResults& bench) {
    int wins = 0;
    for (const auto& r : bench.seeds) wins += r.deltaEaa < r.deltaCaa ? 1 : 0;
    return {wins * 5 >= static_cast<int>(bench.seeds.size()) * 4,
            "eaa selected lower mean entropy delta than caa in " + std::to_string(wins) +
                "/20 seeds"};
}

Outcome ensembleBenefitCriterion(const BenchResults& bench) {
    double manySum = 0.0, oneSum = 0.0;
    for (const auto& r : bench.seeds) {
        manySum += r.aucCaa;
        oneSum += r.aucOneWay;
    }
    const double n = static_cast<double>(bench.seeds.size());
    return {manySum / n > oneSum / n, "mean held-out auc: 91 ways " + str(manySum / n) +
                                          " vs 1 way " + str(oneSum / n) + " over 20 seeds"};
}

// ------------------------------------------------------------ criterion 10

Outcome scaleSmokeTest(double& firstRunSeconds) {
    PipelineConfig cfg;
    cfg.synth.nPos = 66;
    cfg.synth.nNeg = 601;            // 667 rows
    cfg.synth.nInformative = 20;     // 1011 features in total
    cfg.synth.nNoiseNumerical = 841;
    cfg.synth.nNoiseCategorical = 150;
    cfg.synth.effectSize = 1.5;
    cfg.synth.missing.maxRate = 0.6;  // the 0.5 filter has real work to do
    cfg.completionThreshold = 0.5;
    cfg.ensemble.nWays = 91;
    cfg.ensemble.nFeatures = 20;
    cfg.ensemble.cvFolds = 10;
    cfg.ensemble.seed = 424242;

    const auto base = std::filesystem::temp_directory_path();
    const auto dir1 = base / "uefs_accept_scale1";
    const auto dir2 = base / "uefs_accept_scale2";
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);

    cfg.outDir = dir1.string();
    const auto start = Clock::now();
    const PipelineResult result = runPipeline(cfg);
    firstRunSeconds = secondsSince(start);

    if (result.rawRows != 667 || result.rawFeatures != 1011) {
        return {false, "generator produced the wrong shape"};
    }
    if (result.features >= 1011) {
        return {false, "the completion filter dropped nothing"};
    }
    if (!(result.report.aucScoreBased >= 0.0 && result.report.aucScoreBased <= 1.0)) {
        return {false, "nonsensical auc"};
    }

    cfg.outDir = dir2.string();
    runPipeline(cfg);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    for (const char* name : {"selected_features.json", "eval_report.json", "summary.txt"}) {
        if (slurp(dir1 / name).empty() || slurp(dir1 / name) != slurp(dir2 / name)) {
            return {false, std::string(name) + " not deterministic"};
        }
    }
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
    return {true, "667x1011 pipeline in " + str(firstRunSeconds) + "s, byte-deterministic, auc " +
                      str(result.report.aucScoreBased)};
}

}  // namespace

int main() {
    int failures = 0;
    const auto report = [&](int index, const char* name, const Outcome& outcome, double elapsed,
                            double budget) {
        const bool withinBudget = budget <= 0.0 || elapsed < budget;
        const bool pass = outcome.pass && withinBudget;
        if (!pass) ++failures;
        std::printf("[%s] criterion %2d (%s): %s (%.2fs", pass ? "PASS" : "FAIL", index, name,
                    outcome.detail.c_str(), elapsed);
        if (budget > 0.0) std::printf(", budget %.0fs", budget);
        std::printf(")%s\n", !withinBudget ? " [over budget]" : "");
        std::fflush(stdout);
    };
    const auto timed = [&](int index, const char* name, const std::function<Outcome()>& fn,
                           double budget) {
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        report(index, name, outcome, secondsSince(start), budget);
    };

    timed(1, "auc oracle", aucOracleEquivalence, 5.0);
    timed(2, "cart oracle", cartOracleEquivalence, 30.0);
    timed(3, "aggregation oracle", aggregationOracleEquivalence, 5.0);
    timed(4, "imputation contracts", imputationContracts, 0.0);
    timed(5, "balance and voting", balanceAndVoting, 0.0);

    BenchResults bench;
    Outcome benchOutcome{true, ""};
    try {
        bench = runAcceptanceBench();
    } catch (const std::exception& e) {
        benchOutcome = {false, std::string("benchmark exception: ") + e.what()};
    }
    if (!benchOutcome.pass) {
        for (int i = 6; i <= 9; ++i) report(i, "benchmark", benchOutcome, 0.0, 0.0);
    } else {
        report(6, "selection ordering", orderingCriterion(bench), bench.elapsed, 900.0);
        report(7, "missing-rate preference", missingRateCriterion(bench), 0.0, 0.0);
        report(8, "entropy preference", entropyCriterion(bench), 0.0, 0.0);
        report(9, "ensemble benefit", ensembleBenefitCriterion(bench), 0.0, 0.0);
    }

    {
        const auto start = Clock::now();
        Outcome outcome;
        double firstRun = 0.0;
        try {
            outcome = scaleSmokeTest(firstRun);
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        (void)start;
        report(10, "scale smoke test", outcome, firstRun, 600.0);
    }

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
