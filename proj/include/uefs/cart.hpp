#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "uefs/matrix.hpp"

namespace uefs {

struct TreeParams {
    std::optional<int> maxDepth;  // unlimited when unset
    int minSamplesSplit = 2;
    uint64_t seed = 0;  // reserved; the split search itself is deterministic
};

struct TreeNode {
    bool leaf = true;
    int feature = -1;
    double threshold = 0.0;
    double impurityDecrease = 0.0;
    size_t nSamples = 0;
    std::array<size_t, 2> classCounts{0, 0};
    int leafClass = 0;
    int left = -1;
    int right = -1;
};

// Binary CART classifier: greedy splits minimizing weighted Gini impurity,
// thresholds at midpoints of consecutive distinct values, value <= threshold
// goes left. Ties break toward larger impurity decrease, then lower feature
// index, then lower threshold.
class Tree {
public:
    static Tree fit(const Matrix& x, const std::vector<int>& y, const TreeParams& params = {});

    std::vector<int> predict(const Matrix& x) const;

    // Positive-class fraction at the reached leaf; the graded score behind
    // tree AUC.
    std::vector<double> predictScore(const Matrix& x) const;

    // Per-feature sum of (node samples / total) * impurity decrease over the
    // feature's splits, normalized to sum 1. All zeros for a single leaf.
    std::vector<double> importances() const;

    const std::vector<TreeNode>& nodes() const { return nodes_; }
    size_t featureCount() const { return featureCount_; }

private:
    size_t walkToLeaf(const Matrix& x, size_t row) const;

    std::vector<TreeNode> nodes_;
    size_t featureCount_ = 0;
};

}  // namespace uefs
