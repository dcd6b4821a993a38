#include "uefs/cart.hpp"

#include <algorithm>
#include <limits>

#include "uefs/error.hpp"

namespace uefs {
namespace {

// Gini decreases are rationals in the integer class counts: with children
// (l0,l1 | r0,r1), nL + nR = n, the decrease equals
//   [(l0^2+l1^2)*n*nR + (r0^2+r1^2)*n*nL - ((l0+r0)^2+(l1+r1)^2)*nL*nR]
//     / (n^2 * nL * nR).
// Candidates at one node share the n^2 factor, so they compare exactly by
// cross-multiplying num with the other side's nL*nR. Integer comparison keeps
// the (decrease, feature, threshold) tie-break stable where floating point
// would misorder algebraically equal splits. Exact up to ~2e6 rows per node.
struct SplitChoice {
    __int128 num = 0;
    long long den = 1;  // nL * nR
    int feature = -1;
    double threshold = 0.0;
};

class Builder {
public:
    Builder(const Matrix& x, const std::vector<int>& y, const TreeParams& params,
            std::vector<TreeNode>& nodes)
        : x_(x), y_(y), params_(params), nodes_(nodes) {
        rowIds_.resize(x.rows);
        for (size_t i = 0; i < x.rows; ++i) rowIds_[i] = i;
        scratch_.reserve(x.rows);
    }

    void run() { build(0, rowIds_.size(), 0); }

private:
    // Builds the node over rowIds_[begin, end) and returns its index.
    int build(size_t begin, size_t end, int depth) {
        const size_t n = end - begin;
        size_t n1 = 0;
        for (size_t i = begin; i < end; ++i) n1 += static_cast<size_t>(y_[rowIds_[i]]);
        const size_t n0 = n - n1;

        const int nodeIndex = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        nodes_[nodeIndex].nSamples = n;
        nodes_[nodeIndex].classCounts = {n0, n1};
        nodes_[nodeIndex].leafClass = n1 > n0 ? 1 : 0;

        const bool depthCapped = params_.maxDepth && depth >= *params_.maxDepth;
        if (n0 == 0 || n1 == 0 || n < static_cast<size_t>(params_.minSamplesSplit) ||
            depthCapped) {
            return nodeIndex;
        }

        const SplitChoice split = bestSplit(begin, end, n1);
        if (split.feature < 0) return nodeIndex;

        auto mid = std::partition(rowIds_.begin() + begin, rowIds_.begin() + end, [&](size_t r) {
            return x_.at(r, static_cast<size_t>(split.feature)) <= split.threshold;
        });
        const size_t cut = static_cast<size_t>(mid - rowIds_.begin());

        nodes_[nodeIndex].leaf = false;
        nodes_[nodeIndex].feature = split.feature;
        nodes_[nodeIndex].threshold = split.threshold;
        nodes_[nodeIndex].impurityDecrease =
            static_cast<double>(split.num) / (static_cast<double>(n) * static_cast<double>(n) *
                                              static_cast<double>(split.den));
        const int left = build(begin, cut, depth + 1);
        const int right = build(cut, end, depth + 1);
        nodes_[nodeIndex].left = left;
        nodes_[nodeIndex].right = right;
        return nodeIndex;
    }

    SplitChoice bestSplit(size_t begin, size_t end, size_t total1) {
        const long long n = static_cast<long long>(end - begin);
        const long long n1 = static_cast<long long>(total1);
        const long long n0 = n - n1;
        const long long parentSq = n0 * n0 + n1 * n1;
        SplitChoice best;
        for (size_t f = 0; f < x_.cols; ++f) {
            scratch_.clear();
            double lo = std::numeric_limits<double>::infinity();
            double hi = -std::numeric_limits<double>::infinity();
            for (size_t i = begin; i < end; ++i) {
                const size_t r = rowIds_[i];
                const double v = x_.at(r, f);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                scratch_.push_back({v, y_[r]});
            }
            if (lo == hi) continue;
            std::sort(scratch_.begin(), scratch_.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

            long long left1 = 0;
            for (long long i = 0; i + 1 < n; ++i) {
                left1 += scratch_[static_cast<size_t>(i)].second;
                const double v = scratch_[static_cast<size_t>(i)].first;
                const double next = scratch_[static_cast<size_t>(i) + 1].first;
                if (v == next) continue;
                const long long nL = i + 1;
                const long long nR = n - nL;
                const long long left0 = nL - left1;
                const long long right1 = n1 - left1;
                const long long right0 = nR - right1;
                const __int128 num =
                    static_cast<__int128>(left0 * left0 + left1 * left1) * (n * nR) +
                    static_cast<__int128>(right0 * right0 + right1 * right1) * (n * nL) -
                    static_cast<__int128>(parentSq) * (nL * nR);
                if (num <= 0) continue;
                const long long den = nL * nR;
                if (best.feature >= 0 && num * best.den <= best.num * den) continue;
                best.num = num;
                best.den = den;
                best.feature = static_cast<int>(f);
                best.threshold = v + (next - v) / 2.0;
            }
        }
        return best;
    }

    const Matrix& x_;
    const std::vector<int>& y_;
    const TreeParams& params_;
    std::vector<TreeNode>& nodes_;
    std::vector<size_t> rowIds_;
    std::vector<std::pair<double, int>> scratch_;
};

}  // namespace

Tree Tree::fit(const Matrix& x, const std::vector<int>& y, const TreeParams& params) {
    if (x.rows == 0 || x.cols == 0) throw ValidationError("cannot fit a tree on an empty matrix");
    if (y.size() != x.rows) throw ValidationError("label count does not match row count");
    for (int label : y) {
        if (label != 0 && label != 1) throw ValidationError("labels must be 0 or 1");
    }
    if (params.minSamplesSplit < 2) throw ValidationError("min_samples_split must be >= 2");
    if (params.maxDepth && *params.maxDepth < 0) throw ValidationError("max_depth must be >= 0");

    Tree tree;
    tree.featureCount_ = x.cols;
    Builder(x, y, params, tree.nodes_).run();
    return tree;
}

size_t Tree::walkToLeaf(const Matrix& x, size_t row) const {
    size_t node = 0;
    while (!nodes_[node].leaf) {
        const TreeNode& s = nodes_[node];
        node = x.at(row, static_cast<size_t>(s.feature)) <= s.threshold
                   ? static_cast<size_t>(s.left)
                   : static_cast<size_t>(s.right);
    }
    return node;
}

std::vector<int> Tree::predict(const Matrix& x) const {
    if (x.cols != featureCount_) throw ValidationError("prediction column count mismatch");
    std::vector<int> out(x.rows);
    for (size_t r = 0; r < x.rows; ++r) out[r] = nodes_[walkToLeaf(x, r)].leafClass;
    return out;
}

std::vector<double> Tree::predictScore(const Matrix& x) const {
    if (x.cols != featureCount_) throw ValidationError("prediction column count mismatch");
    std::vector<double> out(x.rows);
    for (size_t r = 0; r < x.rows; ++r) {
        const TreeNode& leaf = nodes_[walkToLeaf(x, r)];
        out[r] = static_cast<double>(leaf.classCounts[1]) /
                 static_cast<double>(leaf.classCounts[0] + leaf.classCounts[1]);
    }
    return out;
}

std::vector<double> Tree::importances() const {
    std::vector<double> imp(featureCount_, 0.0);
    const double total = static_cast<double>(nodes_[0].nSamples);
    for (const TreeNode& node : nodes_) {
        if (node.leaf) continue;
        imp[static_cast<size_t>(node.feature)] +=
            (static_cast<double>(node.nSamples) / total) * node.impurityDecrease;
    }
    double sum = 0.0;
    for (double v : imp) sum += v;
    if (sum > 0.0) {
        for (double& v : imp) v /= sum;
    }
    return imp;
}

}  // namespace uefs
