#pragma once

#include <cstdint>
#include <vector>

#include "uefs/aggregation.hpp"
#include "uefs/cart.hpp"
#include "uefs/dataset.hpp"
#include "uefs/matrix.hpp"
#include "uefs/metrics.hpp"

namespace uefs {

struct EnsembleConfig {
    int nWays = 91;  // odd: majority voting must not tie
    int nFeatures = 20;
    int cvFolds = 10;
    uint64_t seed = 0;
    AggregationMethod aggregation = AggregationMethod::Caa;
    TreeParams tree;
};

struct WayModel {
    int wayIndex = 0;
    std::vector<size_t> rowIds;  // exactly class-balanced
    Tree tree;                   // fitted on all the way's rows
    double cvAccuracy = 0.0;
    double cvAuc = 0.0;
    std::vector<int> rankList;     // empty unless rank lists were requested
    std::vector<int> positiveSet;  // features with importance > 0, ascending
};

// n_ways balanced row-id sets: every positive row plus an equally large
// negative sample drawn without replacement, sub-seeded per way.
std::vector<std::vector<size_t>> makeWays(const std::vector<int>& labels, int nWays,
                                          uint64_t seed);
std::vector<std::vector<size_t>> makeWays(const Dataset& d, int nWays, uint64_t seed);

// Per way: pooled stratified-CV accuracy/AUC, a final tree on all the way's
// rows, and its positive feature set. Rank lists cost an RFE pass per way, so
// they are computed only when asked for (the overload without the flag asks
// iff cfg.aggregation consumes them).
std::vector<WayModel> fitWays(const Dataset& d, const std::vector<std::vector<size_t>>& ways,
                              const EnsembleConfig& cfg, bool computeRankLists);
std::vector<WayModel> fitWays(const Dataset& d, const std::vector<std::vector<size_t>>& ways,
                              const EnsembleConfig& cfg);

// Per row: 1 iff strictly more than half of the trees vote 1. Tree count must
// be odd, so the vote is total.
std::vector<int> majorityVote(const std::vector<Tree>& trees, const Matrix& x);
std::vector<int> majorityVote(const std::vector<WayModel>& models, const Matrix& x);

// Fraction of trees voting 1: the graded score behind ensemble AUC.
std::vector<double> positiveVoteFraction(const std::vector<Tree>& trees, const Matrix& x);

// Optional per-feature context carried into the evaluation report: missing
// rates from before imputation and entropy deltas from after it.
struct FeatureDiagnostics {
    std::vector<double> missingRates;
    std::vector<double> entropyDeltas;
};

// Outer stratified CV over all rows; each fold re-undersamples its training
// rows into cfg.nWays balanced instances, fits per-way trees on `selected`
// features only, and majority-votes the held-out rows. Metrics pool the
// held-out predictions across folds.
EvalReport evaluate(const Dataset& d, const std::vector<int>& selected,
                    const EnsembleConfig& cfg,
                    const FeatureDiagnostics* diagnostics = nullptr);

}  // namespace uefs
