#pragma once

#include <vector>

#include "uefs/cart.hpp"
#include "uefs/matrix.hpp"

namespace uefs {

// Recursive feature elimination over tree importances: refit on the surviving
// features, drop the `step` least important (ties drop the higher index
// first), and hand the dropped features the worst ranks still open. The final
// round's survivors take ranks 1..m ordered by importance descending, index
// ascending. Returns a permutation of 1..F, 1 = best.
std::vector<int> rfeRank(const Matrix& x, const std::vector<int>& y,
                         const TreeParams& params = {}, int step = 1);

}  // namespace uefs
