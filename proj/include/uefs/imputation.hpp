#pragma once

#include <cstddef>

#include "uefs/dataset.hpp"

namespace uefs {

enum class ImputationKind { MeanBased, SimilarityBased };

// Numerical gaps take the column mean over present cells; categorical gaps
// take the category id closest to the mean id (ties toward the smaller id).
Dataset imputeMean(const Dataset& d);

// Mean dot product over the encoded columns where both rows are present.
// Rows with no co-present columns score 0.
double similarity(const EncodedMatrix& enc, size_t rowI, size_t rowJ);

// k-nearest-neighbor fill: donors are ranked by similarity on the original
// (pre-fill) encoding, so fills never chain.
Dataset imputeSimilarity(const Dataset& d, int k);

}  // namespace uefs
