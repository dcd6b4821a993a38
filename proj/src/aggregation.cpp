#include "uefs/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uefs/error.hpp"

namespace uefs {

namespace {

void requireK(int k) {
    if (k < 1) {
        throw ValidationError("selection size must be at least 1, got " + std::to_string(k));
    }
}

size_t validateRankLists(const std::vector<std::vector<int>>& rankLists) {
    if (rankLists.empty()) {
        throw ValidationError("aggregation requires at least one way");
    }
    const size_t f = rankLists.front().size();
    if (f == 0) {
        throw ValidationError("rank lists must cover at least one feature");
    }
    for (const auto& ranks : rankLists) {
        if (ranks.size() != f) {
            throw ValidationError("rank lists disagree on feature count");
        }
        std::vector<bool> seen(f, false);
        for (int r : ranks) {
            if (r < 1 || static_cast<size_t>(r) > f || seen[static_cast<size_t>(r) - 1]) {
                throw ValidationError("rank list is not a permutation of 1.." +
                                      std::to_string(f));
            }
            seen[static_cast<size_t>(r) - 1] = true;
        }
    }
    return f;
}

void validateSets(const std::vector<std::vector<int>>& sets, size_t featureCount) {
    if (sets.empty()) {
        throw ValidationError("aggregation requires at least one way");
    }
    if (featureCount == 0) {
        throw ValidationError("feature count must be positive");
    }
    for (const auto& set : sets) {
        for (int f : set) {
            if (f < 0 || static_cast<size_t>(f) >= featureCount) {
                throw ValidationError("positive set references feature " + std::to_string(f) +
                                      " outside 0.." + std::to_string(featureCount - 1));
            }
        }
    }
}

void validateFractions(const std::vector<double>& values, size_t ways, const char* what) {
    if (values.size() != ways) {
        throw ValidationError(std::string(what) + " count " + std::to_string(values.size()) +
                              " does not match way count " + std::to_string(ways));
    }
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ValidationError(std::string(what) + " outside [0,1]: " + std::to_string(v));
        }
    }
}

std::vector<int> selectTopK(const std::vector<double>& scores, ScoreDirection direction, int k) {
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) {
            return direction == ScoreDirection::LowerIsBetter ? scores[a] < scores[b]
                                                              : scores[a] > scores[b];
        }
        return a < b;
    });
    order.resize(std::min(static_cast<size_t>(k), scores.size()));
    return order;
}

AggregateScores finish(AggregationMethod method, ScoreDirection direction,
                       std::vector<double> scores, int k) {
    AggregateScores out;
    out.method = method;
    out.direction = direction;
    out.selected = selectTopK(scores, direction, k);
    out.perFeatureScore = std::move(scores);
    return out;
}

// Shared core of the occurrence-count family: score(f) = sum of wayWeight(w, f)
// over ways whose positive set contains f.
template <class WayWeight>
std::vector<double> occurrenceScores(const std::vector<std::vector<int>>& positiveSets,
                                     size_t featureCount, WayWeight wayWeight) {
    std::vector<double> scores(featureCount, 0.0);
    for (size_t w = 0; w < positiveSets.size(); ++w) {
        for (int f : positiveSets[w]) {
            scores[static_cast<size_t>(f)] += wayWeight(w, static_cast<size_t>(f));
        }
    }
    return scores;
}

double entropyBits(const std::vector<size_t>& counts) {
    size_t total = 0;
    for (size_t c : counts) total += c;
    if (total == 0) return 0.0;
    double h = 0.0;
    for (size_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

AggregationMethod parseMethod(const std::string& name) {
    if (name == "cla") return AggregationMethod::Cla;
    if (name == "wma") return AggregationMethod::Wma;
    if (name == "ofa") return AggregationMethod::Ofa;
    if (name == "caa") return AggregationMethod::Caa;
    if (name == "maa") return AggregationMethod::Maa;
    if (name == "eaa") return AggregationMethod::Eaa;
    throw ValidationError("unknown aggregation method '" + name +
                          "' (expected cla|wma|ofa|caa|maa|eaa)");
}

std::string methodName(AggregationMethod method) {
    switch (method) {
        case AggregationMethod::Cla: return "cla";
        case AggregationMethod::Wma: return "wma";
        case AggregationMethod::Ofa: return "ofa";
        case AggregationMethod::Caa: return "caa";
        case AggregationMethod::Maa: return "maa";
        case AggregationMethod::Eaa: return "eaa";
    }
    throw ValidationError("unknown aggregation method id");
}

bool usesRankLists(AggregationMethod method) {
    return method == AggregationMethod::Cla || method == AggregationMethod::Wma;
}

VarianceWeightParams::VarianceWeightParams(double alpha_, double beta_)
    : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0)) {
        throw ValidationError("alpha must be positive, got " + std::to_string(alpha_));
    }
    if (!(beta >= 0.0)) {
        throw ValidationError("beta must be nonnegative, got " + std::to_string(beta_));
    }
}

AggregateScores cla(const std::vector<std::vector<int>>& rankLists, int k) {
    requireK(k);
    const size_t f = validateRankLists(rankLists);
    std::vector<double> scores(f, 0.0);
    for (const auto& ranks : rankLists) {
        for (size_t i = 0; i < f; ++i) scores[i] += static_cast<double>(ranks[i]);
    }
    return finish(AggregationMethod::Cla, ScoreDirection::LowerIsBetter, std::move(scores), k);
}

AggregateScores wma(const std::vector<std::vector<int>>& rankLists,
                    const std::vector<double>& cvAucs, int k) {
    requireK(k);
    const size_t f = validateRankLists(rankLists);
    validateFractions(cvAucs, rankLists.size(), "cv_auc");
    std::vector<double> scores(f, 0.0);
    for (size_t w = 0; w < rankLists.size(); ++w) {
        const double weight = 1.0 - cvAucs[w];
        for (size_t i = 0; i < f; ++i) {
            scores[i] += weight * static_cast<double>(rankLists[w][i]);
        }
    }
    return finish(AggregationMethod::Wma, ScoreDirection::LowerIsBetter, std::move(scores), k);
}

AggregateScores ofa(const std::vector<std::vector<int>>& positiveSets, size_t featureCount,
                    int k) {
    requireK(k);
    validateSets(positiveSets, featureCount);
    auto scores = occurrenceScores(positiveSets, featureCount, [](size_t, size_t) { return 1.0; });
    return finish(AggregationMethod::Ofa, ScoreDirection::HigherIsBetter, std::move(scores), k);
}

AggregateScores caa(const std::vector<std::vector<int>>& positiveSets,
                    const std::vector<double>& cvAccuracies, size_t featureCount, int k) {
    requireK(k);
    validateSets(positiveSets, featureCount);
    validateFractions(cvAccuracies, positiveSets.size(), "cv_accuracy");
    auto scores = occurrenceScores(positiveSets, featureCount,
                                   [&](size_t w, size_t) { return cvAccuracies[w]; });
    return finish(AggregationMethod::Caa, ScoreDirection::HigherIsBetter, std::move(scores), k);
}

double maaWeight(double accuracy, double missingRate, const VarianceWeightParams& p) {
    return accuracy / std::pow(missingRate + p.alpha, p.beta);
}

double eaaWeight(double accuracy, double deltaEntropy, const VarianceWeightParams& p) {
    return accuracy / std::pow(deltaEntropy + p.alpha, p.beta);
}

AggregateScores maa(const std::vector<std::vector<int>>& positiveSets,
                    const std::vector<double>& cvAccuracies,
                    const std::vector<double>& missingRates, const VarianceWeightParams& p,
                    int k) {
    requireK(k);
    validateSets(positiveSets, missingRates.size());
    validateFractions(cvAccuracies, positiveSets.size(), "cv_accuracy");
    for (double r : missingRates) {
        if (!(r >= 0.0 && r <= 1.0)) {
            throw ValidationError("missing rate outside [0,1]: " + std::to_string(r));
        }
    }
    auto scores = occurrenceScores(positiveSets, missingRates.size(), [&](size_t w, size_t f) {
        return maaWeight(cvAccuracies[w], missingRates[f], p);
    });
    return finish(AggregationMethod::Maa, ScoreDirection::HigherIsBetter, std::move(scores), k);
}

AggregateScores eaa(const std::vector<std::vector<int>>& positiveSets,
                    const std::vector<double>& cvAccuracies,
                    const std::vector<double>& deltaEntropies, const VarianceWeightParams& p,
                    int k) {
    requireK(k);
    validateSets(positiveSets, deltaEntropies.size());
    validateFractions(cvAccuracies, positiveSets.size(), "cv_accuracy");
    for (double d : deltaEntropies) {
        if (!(d >= 0.0)) {
            throw ValidationError("entropy delta must be nonnegative: " + std::to_string(d));
        }
    }
    auto scores = occurrenceScores(positiveSets, deltaEntropies.size(), [&](size_t w, size_t f) {
        return eaaWeight(cvAccuracies[w], deltaEntropies[f], p);
    });
    return finish(AggregationMethod::Eaa, ScoreDirection::HigherIsBetter, std::move(scores), k);
}

std::vector<double> entropyDelta(const Dataset& before, const Dataset& after, int bins) {
    if (before.rowCount() != after.rowCount() || before.featureCount() != after.featureCount()) {
        throw ValidationError("entropy delta requires datasets of identical shape");
    }
    if (!after.complete()) {
        throw ValidationError("entropy delta requires a complete 'after' dataset");
    }
    if (bins < 1) {
        throw ValidationError("bin count must be at least 1, got " + std::to_string(bins));
    }

    const size_t rows = before.rowCount();
    std::vector<double> deltas(before.featureCount(), 0.0);
    for (size_t f = 0; f < before.featureCount(); ++f) {
        const bool categorical = before.columns()[f].kind == ColumnKind::Categorical;
        if (categorical != (after.columns()[f].kind == ColumnKind::Categorical)) {
            throw ValidationError("entropy delta requires matching column kinds, feature " +
                                  std::to_string(f));
        }

        double hBefore = 0.0;
        double hAfter = 0.0;
        if (categorical) {
            const size_t cats =
                std::max(before.categoryCount(f), after.categoryCount(f));
            std::vector<size_t> countsBefore(cats, 0);
            std::vector<size_t> countsAfter(cats, 0);
            for (size_t r = 0; r < rows; ++r) {
                if (const Cell c = before.cell(r, f)) {
                    countsBefore[static_cast<size_t>(*c)]++;
                }
                countsAfter[static_cast<size_t>(*after.cell(r, f))]++;
            }
            hBefore = entropyBits(countsBefore);
            hAfter = entropyBits(countsAfter);
        } else {
            double lo = 0.0, hi = 0.0;
            bool seen = false;
            auto widen = [&](double v) {
                if (!seen) {
                    lo = hi = v;
                    seen = true;
                } else {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            };
            for (size_t r = 0; r < rows; ++r) {
                if (const Cell c = before.cell(r, f)) widen(*c);
                widen(*after.cell(r, f));
            }
            if (seen && hi > lo) {
                const double width = (hi - lo) / static_cast<double>(bins);
                auto binOf = [&](double v) {
                    auto b = static_cast<size_t>((v - lo) / width);
                    return std::min(b, static_cast<size_t>(bins) - 1);
                };
                std::vector<size_t> countsBefore(static_cast<size_t>(bins), 0);
                std::vector<size_t> countsAfter(static_cast<size_t>(bins), 0);
                for (size_t r = 0; r < rows; ++r) {
                    if (const Cell c = before.cell(r, f)) countsBefore[binOf(*c)]++;
                    countsAfter[binOf(*after.cell(r, f))]++;
                }
                hBefore = entropyBits(countsBefore);
                hAfter = entropyBits(countsAfter);
            }
        }
        deltas[f] = std::abs(hAfter - hBefore);
    }
    return deltas;
}

}  // namespace uefs
