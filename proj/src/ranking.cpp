#include "uefs/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "uefs/error.hpp"

namespace uefs {

std::vector<int> rfeRank(const Matrix& x, const std::vector<int>& y, const TreeParams& params,
                         int step) {
    if (x.cols == 0) throw ValidationError("cannot rank an empty feature set");
    if (step < 1) throw ValidationError("step must be >= 1");

    std::vector<int> rank(x.cols, 0);
    std::vector<size_t> surviving(x.cols);
    std::iota(surviving.begin(), surviving.end(), 0);
    int worstOpenRank = static_cast<int>(x.cols);

    while (true) {
        const Matrix sub = x.selectCols(surviving);
        const std::vector<double> imp = Tree::fit(sub, y, params).importances();

        bool allZero = true;
        for (double v : imp) {
            if (v > 0.0) {
                allZero = false;
                break;
            }
        }

        if (surviving.size() <= static_cast<size_t>(step) || allZero) {
            // Final round: survivors take the best open ranks.
            std::vector<size_t> order(surviving.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                if (imp[a] != imp[b]) return imp[a] > imp[b];
                return surviving[a] < surviving[b];
            });
            for (size_t pos = 0; pos < order.size(); ++pos) {
                rank[surviving[order[pos]]] = static_cast<int>(pos) + 1;
            }
            return rank;
        }

        std::vector<size_t> order(surviving.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (imp[a] != imp[b]) return imp[a] < imp[b];
            return surviving[a] > surviving[b];
        });

        std::vector<bool> removed(surviving.size(), false);
        for (int i = 0; i < step; ++i) {
            removed[order[i]] = true;
            rank[surviving[order[i]]] = worstOpenRank--;
        }
        std::vector<size_t> next;
        next.reserve(surviving.size() - static_cast<size_t>(step));
        for (size_t i = 0; i < surviving.size(); ++i) {
            if (!removed[i]) next.push_back(surviving[i]);
        }
        surviving = std::move(next);
    }
}

}  // namespace uefs
