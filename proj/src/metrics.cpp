#include "uefs/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "uefs/error.hpp"
#include "uefs/rng.hpp"

namespace uefs {

namespace {

void requireSameLength(size_t a, size_t b) {
    if (a != b) {
        throw ValidationError("prediction/label length mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b));
    }
    if (a == 0) {
        throw ValidationError("empty prediction/label vectors");
    }
}

}  // namespace

double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
    requireSameLength(scores.size(), labels.size());
    const size_t n = scores.size();

    size_t nPos = 0;
    for (int label : labels) {
        if (label != 0 && label != 1) {
            throw ValidationError("labels must be 0 or 1");
        }
        nPos += static_cast<size_t>(label);
    }
    const size_t nNeg = n - nPos;
    if (nPos == 0 || nNeg == 0) {
        throw ValidationError("auc requires both classes present");
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return scores[a] < scores[b]; });

    // Midranks: a run of tied scores shares the average of its 1-based ranks,
    // which makes each tied (pos, neg) pair contribute exactly one half.
    double posRankSum = 0.0;
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (size_t t = i; t < j; ++t) {
            if (labels[order[t]] == 1) posRankSum += midrank;
        }
        i = j;
    }

    const double u = posRankSum - static_cast<double>(nPos) * (static_cast<double>(nPos) + 1.0) / 2.0;
    return u / (static_cast<double>(nPos) * static_cast<double>(nNeg));
}

double accuracy(const std::vector<int>& preds, const std::vector<int>& labels) {
    requireSameLength(preds.size(), labels.size());
    size_t hits = 0;
    for (size_t i = 0; i < preds.size(); ++i) {
        if (preds[i] == labels[i]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(preds.size());
}

Confusion confusion(const std::vector<int>& preds, const std::vector<int>& labels) {
    requireSameLength(preds.size(), labels.size());
    Confusion c;
    for (size_t i = 0; i < preds.size(); ++i) {
        if (labels[i] == 1) {
            if (preds[i] == 1) ++c.tp; else ++c.fn;
        } else {
            if (preds[i] == 1) ++c.fp; else ++c.tn;
        }
    }
    return c;
}

std::vector<int> stratifiedFolds(const std::vector<int>& labels, int folds, uint64_t seed) {
    if (folds < 2) {
        throw ValidationError("fold count must be at least 2, got " + std::to_string(folds));
    }
    if (static_cast<size_t>(folds) > labels.size()) {
        throw ValidationError("fold count " + std::to_string(folds) + " exceeds row count " +
                              std::to_string(labels.size()));
    }

    for (int label : labels) {
        if (label != 0 && label != 1) {
            throw ValidationError("labels must be 0 or 1");
        }
    }

    std::vector<int> assignment(labels.size(), -1);
    for (int cls = 0; cls < 2; ++cls) {
        std::vector<size_t> members;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == cls) members.push_back(i);
        }
        Rng rng(subSeed(seed, seedtag::kFoldClass, static_cast<uint64_t>(cls)));
        rng.shuffle(members);
        for (size_t pos = 0; pos < members.size(); ++pos) {
            assignment[members[pos]] = static_cast<int>(pos % static_cast<size_t>(folds));
        }
    }
    return assignment;
}

}  // namespace uefs
