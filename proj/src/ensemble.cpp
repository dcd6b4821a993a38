#include "uefs/ensemble.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "uefs/error.hpp"
#include "uefs/ranking.hpp"
#include "uefs/rng.hpp"

namespace uefs {

namespace {

constexpr int kFoldAttempts = 10;

void requireOdd(int nWays) {
    if (nWays < 1 || nWays % 2 == 0) {
        throw ValidationError("way count must be a positive odd number, got " +
                              std::to_string(nWays));
    }
}

// Stratified fold assignment where every fold sees both classes, re-dealt
// with the next sub-seed when it does not (degenerate class counts make
// every attempt fail, so the loop is bounded).
std::vector<int> dealFolds(const std::vector<int>& labels, int folds, uint64_t seed,
                           uint64_t tag, uint64_t index) {
    for (int attempt = 0; attempt < kFoldAttempts; ++attempt) {
        auto assignment =
            stratifiedFolds(labels, folds, subSeed(seed, tag, index, static_cast<uint64_t>(attempt)));
        std::vector<std::array<size_t, 2>> counts(static_cast<size_t>(folds), {0, 0});
        for (size_t i = 0; i < labels.size(); ++i) {
            counts[static_cast<size_t>(assignment[i])][static_cast<size_t>(labels[i])]++;
        }
        const bool ok = std::all_of(counts.begin(), counts.end(), [](const auto& c) {
            return c[0] > 0 && c[1] > 0;
        });
        if (ok) return assignment;
    }
    throw DegenerateDataError("could not deal " + std::to_string(folds) +
                              "-fold stratified folds with both classes per fold; too few rows "
                              "per class");
}

struct PooledPredictions {
    std::vector<int> preds;
    std::vector<double> scores;
    std::vector<int> labels;
};

}  // namespace

std::vector<std::vector<size_t>> makeWays(const std::vector<int>& labels, int nWays,
                                          uint64_t seed) {
    requireOdd(nWays);
    std::vector<size_t> positives;
    std::vector<size_t> negatives;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == 1) {
            positives.push_back(i);
        } else if (labels[i] == 0) {
            negatives.push_back(i);
        } else {
            throw ValidationError("labels must be 0 or 1");
        }
    }
    if (positives.empty()) {
        throw DegenerateDataError("undersampling requires at least one positive row");
    }
    if (negatives.size() < positives.size()) {
        throw DegenerateDataError("undersampling requires at least as many negative rows (" +
                                  std::to_string(negatives.size()) + ") as positive rows (" +
                                  std::to_string(positives.size()) + ")");
    }

    std::vector<std::vector<size_t>> ways(static_cast<size_t>(nWays));
    for (int w = 0; w < nWays; ++w) {
        Rng rng(subSeed(seed, seedtag::kWaySample, static_cast<uint64_t>(w)));
        auto picks = rng.sampleWithoutReplacement(negatives.size(), positives.size());
        auto& rows = ways[static_cast<size_t>(w)];
        rows = positives;
        for (size_t p : picks) rows.push_back(negatives[p]);
        std::sort(rows.begin(), rows.end());
    }
    return ways;
}

std::vector<std::vector<size_t>> makeWays(const Dataset& d, int nWays, uint64_t seed) {
    return makeWays(d.outcomes(), nWays, seed);
}

std::vector<WayModel> fitWays(const Dataset& d, const std::vector<std::vector<size_t>>& ways,
                              const EnsembleConfig& cfg, bool computeRankLists) {
    if (!d.complete()) {
        throw ValidationError("ensemble fitting requires a complete dataset; impute first");
    }
    if (ways.empty()) {
        throw ValidationError("no ways to fit");
    }
    const Matrix full = toMatrix(d);

    std::vector<WayModel> models;
    models.reserve(ways.size());
    for (size_t w = 0; w < ways.size(); ++w) {
        const auto& rows = ways[w];
        std::vector<int> wayLabels(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) wayLabels[i] = d.outcome(rows[i]);
        const Matrix wayMatrix = full.selectRows(rows);

        const auto assignment =
            dealFolds(wayLabels, cfg.cvFolds, cfg.seed, seedtag::kWayFolds, w);
        PooledPredictions pooled;
        for (int fold = 0; fold < cfg.cvFolds; ++fold) {
            std::vector<size_t> trainRows;
            std::vector<size_t> testRows;
            for (size_t i = 0; i < rows.size(); ++i) {
                (assignment[i] == fold ? testRows : trainRows).push_back(i);
            }
            std::vector<int> trainLabels(trainRows.size());
            for (size_t i = 0; i < trainRows.size(); ++i) trainLabels[i] = wayLabels[trainRows[i]];
            const Tree tree = Tree::fit(wayMatrix.selectRows(trainRows), trainLabels, cfg.tree);
            const Matrix testMatrix = wayMatrix.selectRows(testRows);
            const auto preds = tree.predict(testMatrix);
            const auto scores = tree.predictScore(testMatrix);
            for (size_t i = 0; i < testRows.size(); ++i) {
                pooled.preds.push_back(preds[i]);
                pooled.scores.push_back(scores[i]);
                pooled.labels.push_back(wayLabels[testRows[i]]);
            }
        }

        WayModel model;
        model.wayIndex = static_cast<int>(w);
        model.rowIds = rows;
        model.cvAccuracy = accuracy(pooled.preds, pooled.labels);
        model.cvAuc = auc(pooled.scores, pooled.labels);
        model.tree = Tree::fit(wayMatrix, wayLabels, cfg.tree);
        const auto importances = model.tree.importances();
        for (size_t f = 0; f < importances.size(); ++f) {
            if (importances[f] > 0.0) model.positiveSet.push_back(static_cast<int>(f));
        }
        if (computeRankLists) {
            model.rankList = rfeRank(wayMatrix, wayLabels, cfg.tree);
        }
        models.push_back(std::move(model));
    }
    return models;
}

std::vector<WayModel> fitWays(const Dataset& d, const std::vector<std::vector<size_t>>& ways,
                              const EnsembleConfig& cfg) {
    return fitWays(d, ways, cfg, usesRankLists(cfg.aggregation));
}

std::vector<double> positiveVoteFraction(const std::vector<Tree>& trees, const Matrix& x) {
    if (trees.empty()) {
        throw ValidationError("no trees to vote");
    }
    std::vector<double> fractions(x.rows, 0.0);
    for (const Tree& tree : trees) {
        const auto preds = tree.predict(x);
        for (size_t r = 0; r < x.rows; ++r) fractions[r] += static_cast<double>(preds[r]);
    }
    for (double& f : fractions) f /= static_cast<double>(trees.size());
    return fractions;
}

std::vector<int> majorityVote(const std::vector<Tree>& trees, const Matrix& x) {
    if (trees.size() % 2 == 0) {
        throw ValidationError("majority voting needs an odd model count, got " +
                              std::to_string(trees.size()));
    }
    const auto fractions = positiveVoteFraction(trees, x);
    std::vector<int> preds(x.rows, 0);
    for (size_t r = 0; r < x.rows; ++r) preds[r] = fractions[r] > 0.5 ? 1 : 0;
    return preds;
}

std::vector<int> majorityVote(const std::vector<WayModel>& models, const Matrix& x) {
    std::vector<Tree> trees;
    trees.reserve(models.size());
    for (const auto& m : models) trees.push_back(m.tree);
    return majorityVote(trees, x);
}

EvalReport evaluate(const Dataset& d, const std::vector<int>& selected,
                    const EnsembleConfig& cfg, const FeatureDiagnostics* diagnostics) {
    if (!d.complete()) {
        throw ValidationError("evaluation requires a complete dataset; impute first");
    }
    requireOdd(cfg.nWays);
    if (selected.empty()) {
        throw ValidationError("no features selected");
    }
    std::vector<size_t> cols;
    cols.reserve(selected.size());
    for (int f : selected) {
        if (f < 0 || static_cast<size_t>(f) >= d.featureCount()) {
            throw ValidationError("selected feature " + std::to_string(f) + " outside 0.." +
                                  std::to_string(d.featureCount() - 1));
        }
        cols.push_back(static_cast<size_t>(f));
    }
    {
        auto sorted = cols;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ValidationError("selected features must be distinct");
        }
    }

    const std::vector<int>& labels = d.outcomes();
    const Matrix sub = toMatrix(d).selectCols(cols);

    const auto assignment = dealFolds(labels, cfg.cvFolds, cfg.seed, seedtag::kEvalFolds, 0);

    EvalReport report;
    PooledPredictions pooled;
    for (int fold = 0; fold < cfg.cvFolds; ++fold) {
        std::vector<size_t> trainRows;
        std::vector<size_t> testRows;
        for (size_t i = 0; i < labels.size(); ++i) {
            (assignment[i] == fold ? testRows : trainRows).push_back(i);
        }
        std::vector<int> trainLabels(trainRows.size());
        for (size_t i = 0; i < trainRows.size(); ++i) trainLabels[i] = labels[trainRows[i]];

        const Matrix trainMatrix = sub.selectRows(trainRows);
        const auto ways = makeWays(trainLabels, cfg.nWays,
                                   subSeed(cfg.seed, seedtag::kEvalWays, static_cast<uint64_t>(fold)));
        std::vector<Tree> trees;
        trees.reserve(ways.size());
        for (const auto& wayRows : ways) {
            std::vector<int> y(wayRows.size());
            for (size_t i = 0; i < wayRows.size(); ++i) y[i] = trainLabels[wayRows[i]];
            trees.push_back(Tree::fit(trainMatrix.selectRows(wayRows), y, cfg.tree));
        }

        const Matrix testMatrix = sub.selectRows(testRows);
        const auto preds = majorityVote(trees, testMatrix);
        const auto fractions = positiveVoteFraction(trees, testMatrix);
        std::vector<int> testLabels(testRows.size());
        for (size_t i = 0; i < testRows.size(); ++i) testLabels[i] = labels[testRows[i]];

        FoldMetrics fm;
        fm.accuracy = accuracy(preds, testLabels);
        fm.aucScoreBased = auc(fractions, testLabels);
        fm.aucVoteBased = auc(std::vector<double>(preds.begin(), preds.end()), testLabels);
        fm.confusion = confusion(preds, testLabels);
        report.perFold.push_back(fm);

        pooled.preds.insert(pooled.preds.end(), preds.begin(), preds.end());
        pooled.scores.insert(pooled.scores.end(), fractions.begin(), fractions.end());
        pooled.labels.insert(pooled.labels.end(), testLabels.begin(), testLabels.end());
    }

    report.accuracy = accuracy(pooled.preds, pooled.labels);
    report.aucScoreBased = auc(pooled.scores, pooled.labels);
    report.aucVoteBased =
        auc(std::vector<double>(pooled.preds.begin(), pooled.preds.end()), pooled.labels);
    report.confusion = confusion(pooled.preds, pooled.labels);

    if (diagnostics != nullptr) {
        double missingSum = 0.0;
        double deltaSum = 0.0;
        for (size_t c : cols) {
            if (c < diagnostics->missingRates.size()) missingSum += diagnostics->missingRates[c];
            if (c < diagnostics->entropyDeltas.size()) deltaSum += diagnostics->entropyDeltas[c];
        }
        report.meanMissingRateSelected = missingSum / static_cast<double>(cols.size());
        report.meanEntropyDeltaSelected = deltaSum / static_cast<double>(cols.size());
    }
    return report;
}

}  // namespace uefs
