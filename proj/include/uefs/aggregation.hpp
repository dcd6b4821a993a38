#pragma once

#include <string>
#include <vector>

#include "uefs/dataset.hpp"

namespace uefs {

enum class AggregationMethod { Cla, Wma, Ofa, Caa, Maa, Eaa };

AggregationMethod parseMethod(const std::string& name);
std::string methodName(AggregationMethod method);

// Whether a method consumes per-way rank lists (CLA/WMA) or per-way positive
// feature sets (the occurrence-count family).
bool usesRankLists(AggregationMethod method);

enum class ScoreDirection { LowerIsBetter, HigherIsBetter };

struct AggregateScores {
    AggregationMethod method;
    ScoreDirection direction;
    std::vector<double> perFeatureScore;
    std::vector<int> selected;  // min(k, F) indices, best first; ties -> lower index
};

struct VarianceWeightParams {
    double alpha;
    double beta;
    VarianceWeightParams(double alpha, double beta);
};

// Rank lists are 1-based: rank 1 is the most important feature of a way.

// score(f) = sum of f's ranks across ways; k smallest win.
AggregateScores cla(const std::vector<std::vector<int>>& rankLists, int k);

// score(f) = sum over ways of (1 - cv_auc) * rank; k smallest win.
AggregateScores wma(const std::vector<std::vector<int>>& rankLists,
                    const std::vector<double>& cvAucs, int k);

// score(f) = number of ways whose positive set contains f; k largest win.
AggregateScores ofa(const std::vector<std::vector<int>>& positiveSets, size_t featureCount,
                    int k);

// score(f) = sum of cv_accuracy over ways containing f; k largest win.
AggregateScores caa(const std::vector<std::vector<int>>& positiveSets,
                    const std::vector<double>& cvAccuracies, size_t featureCount, int k);

// accuracy / (missing_rate + alpha)^beta
double maaWeight(double accuracy, double missingRate, const VarianceWeightParams& p);

// accuracy / (delta_entropy + alpha)^beta
double eaaWeight(double accuracy, double deltaEntropy, const VarianceWeightParams& p);

// CAA with each way's accuracy discounted by the feature's missing rate.
AggregateScores maa(const std::vector<std::vector<int>>& positiveSets,
                    const std::vector<double>& cvAccuracies,
                    const std::vector<double>& missingRates, const VarianceWeightParams& p,
                    int k);

// CAA with each way's accuracy discounted by the feature's entropy change.
AggregateScores eaa(const std::vector<std::vector<int>>& positiveSets,
                    const std::vector<double>& cvAccuracies,
                    const std::vector<double>& deltaEntropies, const VarianceWeightParams& p,
                    int k);

// Per-feature |H_after - H_before| in bits. "Before" measures present cells
// only; "after" measures every cell. Numerical features are histogrammed over
// `bins` equal-width bins spanning the combined observed range of both
// datasets; a constant range has entropy 0 by convention.
std::vector<double> entropyDelta(const Dataset& before, const Dataset& after, int bins = 10);

}  // namespace uefs
