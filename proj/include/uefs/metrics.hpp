#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace uefs {

struct Confusion {
    size_t tp = 0;
    size_t fp = 0;
    size_t tn = 0;
    size_t fn = 0;
};

struct FoldMetrics {
    double accuracy = 0.0;
    double aucScoreBased = 0.0;
    double aucVoteBased = 0.0;
    Confusion confusion;
};

struct EvalReport {
    double accuracy = 0.0;
    double aucScoreBased = 0.0;
    double aucVoteBased = 0.0;
    Confusion confusion;
    std::vector<FoldMetrics> perFold;
    double meanMissingRateSelected = 0.0;
    double meanEntropyDeltaSelected = 0.0;
};

// Mann-Whitney AUC via midranks; exactly the trapezoidal ROC area, with tied
// scores counting one half.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

double accuracy(const std::vector<int>& preds, const std::vector<int>& labels);

Confusion confusion(const std::vector<int>& preds, const std::vector<int>& labels);

// Shuffles each class with its own sub-seed, then deals round-robin, so every
// fold's class counts differ by at most one.
std::vector<int> stratifiedFolds(const std::vector<int>& labels, int folds, uint64_t seed);

}  // namespace uefs
